mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use elnet::exactla::{fmt_rational, parse_rational};
use elnet::groves::groves;
use elnet::lamdimer::{build_bipartite, matchings_delta};
use elnet::netmodel::{generate, Kind};
use elnet::partitions::concordance_matrix;
use elnet::report::VerificationReport;
use elnet::response::response_matrix;
use elnet::suite::{verify_network, verify_rep};
use elnet::sympl::{omega_of, structure};
use elnet::{ElectricalNetwork, Error, Move};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "elnet",
    version,
    about = "Exact computations on circular planar electrical networks"
)]
struct Cli {
    /// Seed for every randomized parameter choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Comma-separated check names for `verify` and `rep`; all by default.
    #[arg(long, global = true, value_delimiter = ',')]
    checks: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object attached to a network.
    Compute {
        path: PathBuf,
        what: What,
        /// Source of Plücker coordinates.
        #[arg(long, value_enum, default_value_t = Method::Omega)]
        method: Method,
    },
    /// Run identity checks on a network.
    Verify { path: PathBuf },
    /// Network-independent checks for a given n.
    Rep {
        #[arg(long)]
        n: usize,
        /// Print a matrix instead of running checks.
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Write a generated network.
    Gen {
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        moves: usize,
        /// Comma-separated weights for `star` and `triangle`.
        #[arg(long, value_delimiter = ',')]
        weights: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply spike/bridge moves, e.g. `--move spike:2:1/3`.
    Apply {
        path: PathBuf,
        #[arg(long = "move", required = true)]
        moves: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Response,
    Groves,
    Delta,
    Omega,
    Pluecker,
    Dimer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Omega,
    Matching,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Concordance,
    Structure,
}

/// Input errors exit with 2, failed checks with 1.
enum Failure {
    Input(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Compute { path, what, method } => compute(cli, path, *what, *method),
        Command::Verify { path } => verify(cli, path),
        Command::Rep { n, export } => rep(cli, *n, *export),
        Command::Gen {
            kind,
            n,
            moves,
            weights,
            out,
        } => gen(cli, kind, *n, *moves, weights, out.as_deref()),
        Command::Apply { path, moves, out } => apply(path, moves, out.as_deref()),
    }
}

/// Reads `path`, falling back to `path.json`.
fn load(path: &Path) -> Result<ElectricalNetwork, Failure> {
    let with_ext = path.with_extension("json");
    let chosen = if path.exists() || path.extension().is_some() {
        path
    } else {
        &with_ext
    };
    let text = fs::read_to_string(chosen)
        .map_err(|e| Failure::Input(format!("{}: {e}", chosen.display())))?;
    ElectricalNetwork::from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", chosen.display())))
}

fn write_network(net: &ElectricalNetwork, out: Option<&Path>) -> Outcome {
    let text = net.to_json();
    match out {
        Some(p) => {
            fs::write(p, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn compute(cli: &Cli, path: &Path, what: What, method: Method) -> Outcome {
    let net = load(path)?;
    let n = net.n();
    let value = match what {
        What::Response => {
            let m = response_matrix(&net);
            json!({"what": "response", "n": n, "index": (1..=n).collect::<Vec<_>>(), "matrix": render::matrix(m.matrix())})
        }
        What::Groves => {
            let table = groves(&net)?;
            let entries: Vec<Value> = table
                .noncrossing_entries()
                .into_iter()
                .map(|(s, v)| json!({"partition": s.to_string(), "value": fmt_rational(&v)}))
                .collect();
            json!({"what": "groves", "n": n, "entries": entries})
        }
        What::Delta => {
            let d = matchings_delta(&build_bipartite(&net))?;
            json!({"what": "delta", "ambient": d.n, "k": d.k, "entries": render::sparse(&d)})
        }
        What::Omega => {
            let p = omega_of(&net)?;
            json!({
                "what": "omega",
                "n": n,
                "omega": render::matrix(&p.omega),
                "omega_tilde": render::matrix(&p.omega_tilde),
            })
        }
        What::Pluecker => match method {
            Method::Omega => render::pluecker(&omega_of(&net)?.pluecker(), "omega"),
            Method::Matching => {
                render::pluecker(&matchings_delta(&build_bipartite(&net))?, "matching")
            }
        },
        What::Dimer => {
            serde_json::to_value(build_bipartite(&net).to_doc(&net)).expect("documents serialize")
        }
    };
    println!("{}", render::emit(&value, cli.pretty));
    Ok(())
}

fn verify(cli: &Cli, path: &Path) -> Outcome {
    let net = load(path)?;
    let report = verify_network(&net, &path.display().to_string(), &cli.checks, cli.seed)?;
    finish(cli, &report)
}

fn finish(cli: &Cli, report: &VerificationReport) -> Outcome {
    let value = serde_json::to_value(report).expect("reports serialize");
    println!("{}", render::emit(&value, cli.pretty));
    if report.verdict {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn rep(cli: &Cli, n: usize, export: Option<Export>) -> Outcome {
    if !(3..=5).contains(&n) {
        return Err(Failure::Input(format!(
            "n must be between 3 and 5, got {n}"
        )));
    }
    if let Some(e) = export {
        let value = match e {
            Export::Concordance => {
                let a = concordance_matrix(n)?;
                json!({
                    "what": "concordance",
                    "n": n,
                    "subsets": a.subsets.iter().collect::<Vec<_>>(),
                    "partitions": a.partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "matrix": render::matrix(&a.matrix),
                })
            }
            Export::Structure => json!({
                "what": "structure",
                "n": n,
                "basis": render::matrix(&structure::b_matrix(n)),
                "basis_right_inverse": render::matrix(&structure::b_inverse(n)),
                "form": render::matrix(&structure::lambda(n)),
                "ambient_form": render::matrix(&structure::lambda_2n(n)),
                "sign_diagonal": render::matrix(&structure::d_matrix(n)),
                "signed_permutation": render::matrix(&structure::t_bar(n)),
                "boundary_block": render::matrix(&structure::s_matrix(n)),
            }),
        };
        println!("{}", render::emit(&value, cli.pretty));
        return Ok(());
    }
    let report = verify_rep(n, &cli.checks, cli.seed)?;
    finish(cli, &report)
}

fn gen(
    cli: &Cli,
    kind: &str,
    n: usize,
    moves: usize,
    weights: &[String],
    out: Option<&Path>,
) -> Outcome {
    let kind: Kind = kind.parse()?;
    let weights = weights
        .iter()
        .map(|w| parse_rational(w))
        .collect::<elnet::Result<Vec<_>>>()?;
    let w = (!weights.is_empty()).then_some(weights.as_slice());
    let net = generate(kind, n, cli.seed, moves, w)?;
    write_network(&net, out)
}

fn apply(path: &Path, moves: &[String], out: Option<&Path>) -> Outcome {
    let mut net = load(path)?;
    for mv in moves {
        let mv: Move = mv.parse()?;
        net = net.apply(&mv)?;
    }
    write_network(&net, out)
}
