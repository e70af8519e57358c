use super::{Edge, ElectricalNetwork};
use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, is_positive, one, parse_rational, Rational};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// One elementary surgery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Boundary spike at `k`; the new edge has weight `1/t`.
    Spike { k: usize, t: Rational },
    /// Boundary bridge of weight `t` between `k` and `k+1`.
    Bridge { k: usize, t: Rational },
}

impl Move {
    pub fn k(&self) -> usize {
        match self {
            Move::Spike { k, .. } | Move::Bridge { k, .. } => *k,
        }
    }

    pub fn t(&self) -> &Rational {
        match self {
            Move::Spike { t, .. } | Move::Bridge { t, .. } => t,
        }
    }

    /// Index of the one-parameter generator realizing the move.
    pub fn generator_index(&self) -> usize {
        match self {
            Move::Spike { k, .. } => 2 * k - 1,
            Move::Bridge { k, .. } => 2 * k,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Spike { k, t } => write!(f, "spike:{k}:{}", fmt_rational(t)),
            Move::Bridge { k, t } => write!(f, "bridge:{k}:{}", fmt_rational(t)),
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    /// `spike:k:t` or `bridge:k:t`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [kind, k, t] = parts[..] else {
            return Err(Error::Malformed(format!("move {s:?}, expected kind:k:t")));
        };
        let k: usize = k
            .parse()
            .map_err(|_| Error::Malformed(format!("move index {k:?}")))?;
        let t = parse_rational(t)?;
        match kind {
            "spike" => Ok(Move::Spike { k, t }),
            "bridge" => Ok(Move::Bridge { k, t }),
            _ => Err(Error::Malformed(format!("unknown move kind {kind:?}"))),
        }
    }
}

fn fresh(taken: &HashSet<String>, prefix: &str) -> String {
    (0..)
        .map(|i| format!("{prefix}{i}"))
        .find(|s| !taken.contains(s))
        .expect("unbounded name supply")
}

impl ElectricalNetwork {
    fn check_move(&self, k: usize, t: &Rational) -> Result<()> {
        if !(1..=self.n()).contains(&k) {
            return Err(Error::BadIndex { k, n: self.n() });
        }
        if !is_positive(t) {
            return Err(Error::NonPositiveParameter(fmt_rational(t)));
        }
        Ok(())
    }

    fn fresh_edge_id(&self) -> String {
        let ids = self.edges().iter().map(|e| e.id.clone()).collect();
        fresh(&ids, "e")
    }

    /// Adds an edge of weight `t` between boundary vertices `k` and `k+1`
    /// (mod n), drawn along the arc between them.
    pub fn add_bridge(&self, k: usize, t: &Rational) -> Result<Self> {
        self.check_move(k, t)?;
        let n = self.n();
        let (a, b) = (k - 1, k % n);
        let mut edges = self.edges().to_vec();
        let id = edges.len();
        edges.push(Edge {
            id: self.fresh_edge_id(),
            ends: (a, b),
            weight: t.clone(),
        });
        let mut rot: Vec<Vec<usize>> = (0..self.vertex_count())
            .map(|v| self.rotation(v).to_vec())
            .collect();
        rot[a].insert(0, id);
        rot[b].push(id);
        ElectricalNetwork::new(n, self.internal().to_vec(), edges, rot)
    }

    /// Pushes boundary vertex `k` inside and joins it to a new boundary
    /// vertex `k` by an edge of weight `1/t`.
    pub fn add_spike(&self, k: usize, t: &Rational) -> Result<Self> {
        self.check_move(k, t)?;
        let n = self.n();
        let old = k - 1;
        let names: HashSet<String> = self.internal().iter().cloned().collect();
        let mut internal = self.internal().to_vec();
        internal.push(fresh(&names, "v"));
        let v = self.vertex_count();
        let mut edges: Vec<Edge> = self
            .edges()
            .iter()
            .map(|e| {
                let m = |x: usize| if x == old { v } else { x };
                Edge {
                    id: e.id.clone(),
                    ends: (m(e.ends.0), m(e.ends.1)),
                    weight: e.weight.clone(),
                }
            })
            .collect();
        let id = edges.len();
        edges.push(Edge {
            id: self.fresh_edge_id(),
            ends: (v, old),
            weight: one() / t,
        });
        let mut rot: Vec<Vec<usize>> = (0..self.vertex_count())
            .map(|u| self.rotation(u).to_vec())
            .collect();
        let mut inner = vec![id];
        inner.append(&mut rot[old]);
        rot[old] = vec![id];
        rot.push(inner);
        ElectricalNetwork::new(n, internal, edges, rot)
    }

    pub fn apply(&self, mv: &Move) -> Result<Self> {
        match mv {
            Move::Spike { k, t } => self.add_spike(*k, t),
            Move::Bridge { k, t } => self.add_bridge(*k, t),
        }
    }

    /// Relabels boundary vertex `i` as `i + 1` (mod n).
    pub fn rotate(&self) -> Self {
        let n = self.n();
        let m = |x: usize| if x < n { (x + 1) % n } else { x };
        let edges = self
            .edges()
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                ends: (m(e.ends.0), m(e.ends.1)),
                weight: e.weight.clone(),
            })
            .collect();
        let mut rot = vec![Vec::new(); self.vertex_count()];
        for v in 0..self.vertex_count() {
            rot[m(v)] = self.rotation(v).to_vec();
        }
        ElectricalNetwork::new(n, self.internal().to_vec(), edges, rot)
            .expect("relabelling preserves validity")
    }
}
