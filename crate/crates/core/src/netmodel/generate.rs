use super::{Edge, ElectricalNetwork, Move};
use crate::error::{Error, Result};
use crate::exactla::{one, rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Empty,
    /// One internal vertex joined to every boundary vertex.
    Star,
    /// The boundary cycle: a bridge at every `k`. For `n = 3` a triangle.
    Triangle,
    /// Random spikes and bridges applied to the empty network.
    Moves,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(Kind::Empty),
            "star" => Ok(Kind::Star),
            "triangle" => Ok(Kind::Triangle),
            "moves" => Ok(Kind::Moves),
            _ => Err(Error::Malformed(format!("unknown network kind {s:?}"))),
        }
    }
}

fn weights_for(n: usize, weights: Option<&[Rational]>) -> Result<Vec<Rational>> {
    match weights {
        None => Ok(vec![one(); n]),
        Some(w) if w.len() == n => Ok(w.to_vec()),
        Some(w) => Err(Error::Malformed(format!(
            "{} weights given for {n} edges",
            w.len()
        ))),
    }
}

/// A random spike or bridge with `t = p/q`, `1 ≤ p, q ≤ 9`.
pub fn random_move<R: Rng>(rng: &mut R, n: usize) -> Move {
    let k = rng.gen_range(1..=n);
    let t = rat(rng.gen_range(1..=9), rng.gen_range(1..=9));
    if rng.gen_bool(0.5) {
        Move::Spike { k, t }
    } else {
        Move::Bridge { k, t }
    }
}

/// Deterministic network generator. `weights` applies to `Star` (edge at
/// boundary `i`) and `Triangle` (bridge at `k`); `seed` and `moves` to `Moves`.
pub fn generate(
    kind: Kind,
    n: usize,
    seed: u64,
    moves: usize,
    weights: Option<&[Rational]>,
) -> Result<ElectricalNetwork> {
    let empty = ElectricalNetwork::empty(n)?;
    match kind {
        Kind::Empty => Ok(empty),
        Kind::Star => {
            let w = weights_for(n, weights)?;
            let edges = w
                .into_iter()
                .enumerate()
                .map(|(i, weight)| Edge {
                    id: format!("e{}", i + 1),
                    ends: (n, i),
                    weight,
                })
                .collect();
            let mut rot: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
            rot.push((0..n).collect());
            ElectricalNetwork::new(n, vec!["v0".into()], edges, rot)
        }
        Kind::Triangle => {
            let w = weights_for(n, weights)?;
            w.iter()
                .enumerate()
                .try_fold(empty, |net, (k, t)| net.add_bridge(k + 1, t))
        }
        Kind::Moves => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..moves).try_fold(empty, |net, _| net.apply(&random_move(&mut rng, n)))
        }
    }
}

/// `count` move-generated networks with seeds `1..=count` and `2n + 2` moves.
pub fn corpus(n: usize, count: u64) -> Vec<ElectricalNetwork> {
    (1..=count)
        .map(|seed| {
            generate(Kind::Moves, n, seed, 2 * n + 2, None).expect("valid corpus parameters")
        })
        .collect()
}
