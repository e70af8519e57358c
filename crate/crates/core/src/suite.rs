//! Named check suites over a network or over `n` alone, as run by the command
//! line and the Python module.

use crate::error::{Error, Result};
use crate::exactla::{rat, Rational};
use crate::groves::{groves, kenyon_wilson_identity};
use crate::lamdimer::{elcon_check, lemmal_check};
use crate::netmodel::{random_move, ElectricalNetwork, Move};
use crate::report::VerificationReport;
use crate::response::{invariants_check, kwrep_check, response_matrix};
use crate::sympl::group::{
    generator, relations_check, restrict_to_v, restricted_generators_check, Kind,
};
use crate::sympl::rep::{
    catalan_check, h_space_check, q_equivariance_check, q_kernel, sp_invariance_check,
};
use crate::sympl::{
    action_consistency_check, lagrangian_check, maint_check, nonneg_check, omega_of,
    shift_consistency_check, vertex_identities_check,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NETWORK_CHECKS: &[&str] = &[
    "invariants",
    "kw",
    "elcon",
    "lemmal",
    "maint",
    "lagrangian",
    "nonneg",
    "kwrep",
    "action",
    "shift",
    "vertex",
];

pub const REP_CHECKS: &[&str] = &["catalan", "kernel", "hspace", "sp", "serpent"];

fn resolve(checks: &[String], known: &[&str]) -> Result<Vec<String>> {
    if checks.is_empty() {
        return Ok(known.iter().map(|s| s.to_string()).collect());
    }
    match checks.iter().find(|c| !known.contains(&c.as_str())) {
        Some(c) => Err(Error::Malformed(format!(
            "unknown check {c:?}; expected one of {}",
            known.join(",")
        ))),
        None => Ok(checks.to_vec()),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

/// Runs the named network checks (all when `checks` is empty). `seed` drives
/// the random moves of the `action` check.
pub fn verify_network(
    net: &ElectricalNetwork,
    subject: &str,
    checks: &[String],
    seed: u64,
) -> Result<VerificationReport> {
    let checks = resolve(checks, NETWORK_CHECKS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new(subject);
    let m = response_matrix(net);
    for name in &checks {
        match name.as_str() {
            "invariants" => report.run(name, || Ok(invariants_check(&m))),
            "kw" => {
                report.run(name, || Ok(kenyon_wilson_identity(&groves(net)?, &m)));
                let n = net.n();
                let values: Vec<String> = (1..=n)
                    .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                    .map(|(i, j)| format!("x_{i}{j} = {}", m.x(i, j)))
                    .collect();
                if let Some(last) = report.checks.last_mut() {
                    last.detail.get_or_insert(values.join(", "));
                }
            }
            "elcon" => report.run(name, || elcon_check(net)),
            "lemmal" => report.run(name, || lemmal_check(net)),
            "maint" => report.run(name, || maint_check(net)),
            "lagrangian" => report.run(name, || Ok(lagrangian_check(&omega_of(net)?))),
            "nonneg" => report.run(name, || Ok(nonneg_check(&omega_of(net)?))),
            "kwrep" => match kwrep_check(net) {
                Err(Error::Disconnected { i, j }) => report.skip(
                    name,
                    format!("boundary vertices {i} and {j} are not connected"),
                ),
                outcome => report.run(name, || outcome),
            },
            "action" => {
                let moves: Vec<Move> = (0..3).map(|_| random_move(&mut rng, net.n())).collect();
                report.run(name, || {
                    for mv in &moves {
                        if let Err(w) = action_consistency_check(net, mv)? {
                            return Ok(Err(w));
                        }
                    }
                    Ok(Ok(()))
                });
            }
            "shift" => report.run(name, || shift_consistency_check(net)),
            "vertex" => report.run(name, || Ok(vertex_identities_check(&m))),
            _ => unreachable!("names resolved above"),
        }
    }
    Ok(report)
}

/// Runs the named representation checks for `3 ≤ n ≤ 5`.
pub fn verify_rep(n: usize, checks: &[String], seed: u64) -> Result<VerificationReport> {
    if !(3..=5).contains(&n) {
        return Err(Error::SizeBound {
            what: "n",
            value: n,
            bound: 5,
        });
    }
    let checks = resolve(checks, REP_CHECKS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new(format!("n={n}"));
    for name in &checks {
        match name.as_str() {
            "catalan" => {
                report.run(name, || catalan_check(n));
                if let Some(last) = report.checks.last_mut() {
                    last.detail = q_kernel(n).ok().map(|k| format!("dim ker Q = {}", k.len()));
                }
            }
            "kernel" => {
                let t = random_rational(&mut rng);
                report.run(name, || {
                    for i in 1..=2 * n {
                        let g = restrict_to_v(&generator(Kind::U, i, &t, 2 * n)?)?;
                        if let Err(w) = q_equivariance_check(n, &g.matrix)? {
                            return Ok(Err(w));
                        }
                    }
                    Ok(Ok(()))
                });
            }
            "hspace" => report.run(name, || h_space_check(n)),
            "sp" => {
                let ts: Vec<Rational> = (0..3).map(|_| random_rational(&mut rng)).collect();
                report.run(name, || {
                    for t in &ts {
                        if let Err(w) = restricted_generators_check(n, t)? {
                            return Ok(Err(w));
                        }
                    }
                    sp_invariance_check(n, &ts)
                });
            }
            "serpent" => {
                let triples: Vec<[Rational; 3]> = (0..5)
                    .map(|_| [(); 3].map(|_| random_rational(&mut rng)))
                    .collect();
                report.run(name, || {
                    for [a, b, c] in &triples {
                        if let Err(w) = relations_check(2 * n, a, b, c) {
                            return Ok(Err(w));
                        }
                    }
                    Ok(Ok(()))
                });
            }
            _ => unreachable!("names resolved above"),
        }
    }
    Ok(report)
}
