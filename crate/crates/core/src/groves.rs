//! Groves and grove measurements.
//!
//! A grove is a spanning forest in which every tree contains a boundary
//! vertex. `L_σ` sums the weights (edge-weight products) of the groves whose
//! boundary partition is `σ`.

use crate::error::{Error, Result};
use crate::exactla::{one, zero, Rational};
use crate::netmodel::ElectricalNetwork;
use crate::partitions::{canonical_labels, is_crossing, NonCrossingPartition};
use crate::report::{CheckResult, Witness};
use crate::response::{response_matrix, ResponseMatrix};
use num_traits::Zero;
use std::collections::BTreeMap;

pub const MAX_EDGES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroveTable {
    n: usize,
    values: BTreeMap<Vec<usize>, Rational>,
}

impl GroveTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `L_σ`; zero when no grove realizes `σ`.
    pub fn get(&self, sigma: &NonCrossingPartition) -> Rational {
        self.values.get(sigma.rgs()).cloned().unwrap_or_else(zero)
    }

    /// `L = L_{1|2|…|n}`.
    pub fn l(&self) -> Rational {
        self.get(&NonCrossingPartition::finest(self.n))
    }

    /// `L_ij`: `i` and `j` joined, every other vertex alone.
    pub fn l_ij(&self, i: usize, j: usize) -> Rational {
        if i == j {
            return self.l_kk(i);
        }
        let mut labels: Vec<usize> = (0..self.n).collect();
        labels[j - 1] = i - 1;
        self.values
            .get(&canonical_labels(&labels))
            .cloned()
            .unwrap_or_else(zero)
    }

    /// `L_kk = Σ_{i≠k} L_ik`.
    pub fn l_kk(&self, k: usize) -> Rational {
        (1..=self.n)
            .filter(|&i| i != k)
            .fold(zero(), |acc, i| acc + self.l_ij(i, k))
    }

    /// Boundary partitions with nonzero measurement, crossing ones included.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Weighted count of all groves.
    pub fn total(&self) -> Rational {
        self.values.values().fold(zero(), |acc, v| acc + v)
    }

    /// `(σ, L_σ)` for the non-crossing entries, in partition order.
    pub fn noncrossing_entries(&self) -> Vec<(NonCrossingPartition, Rational)> {
        self.values
            .iter()
            .filter(|(k, _)| !is_crossing(k))
            .map(|(k, v)| {
                (
                    NonCrossingPartition::from_labels(k).expect("checked"),
                    v.clone(),
                )
            })
            .collect()
    }
}

struct UndoUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl UndoUnionFind {
    fn new(n: usize) -> Self {
        UndoUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.log.push((ra, rb));
        true
    }

    fn undo(&mut self) {
        let (ra, rb) = self.log.pop().expect("undo without union");
        self.parent[rb] = rb;
        self.size[ra] -= self.size[rb];
    }
}

/// Exhaustive grove enumeration; at most [`MAX_EDGES`] edges.
pub fn groves(net: &ElectricalNetwork) -> Result<GroveTable> {
    let m = net.edges().len();
    if m > MAX_EDGES {
        return Err(Error::SizeBound {
            what: "edge count",
            value: m,
            bound: MAX_EDGES,
        });
    }
    let n = net.n();
    let nv = net.vertex_count();
    let mut st = Search {
        net,
        uf: UndoUnionFind::new(nv),
        values: BTreeMap::new(),
    };
    st.rec(0, one());
    st.values.retain(|_, v| !v.is_zero());
    Ok(GroveTable {
        n,
        values: st.values,
    })
}

struct Search<'a> {
    net: &'a ElectricalNetwork,
    uf: UndoUnionFind,
    values: BTreeMap<Vec<usize>, Rational>,
}

impl Search<'_> {
    fn rec(&mut self, e: usize, weight: Rational) {
        let edges = self.net.edges();
        if e == edges.len() {
            self.leaf(weight);
            return;
        }
        self.rec(e + 1, weight.clone());
        let (a, b) = edges[e].ends;
        if self.uf.union(a, b) {
            self.rec(e + 1, weight * &edges[e].weight);
            self.uf.undo();
        }
    }

    fn leaf(&mut self, weight: Rational) {
        let n = self.net.n();
        let roots: Vec<usize> = (0..n).map(|v| self.uf.find(v)).collect();
        let rooted = (n..self.net.vertex_count()).all(|v| roots.contains(&self.uf.find(v)));
        if !rooted {
            return;
        }
        *self
            .values
            .entry(canonical_labels(&roots))
            .or_insert_with(zero) += weight;
    }
}

/// `x_ij = -L_ij / L` for all `i ≠ j`, from a precomputed table and matrix.
pub fn kenyon_wilson_identity(table: &GroveTable, m: &ResponseMatrix) -> CheckResult {
    let l = table.l();
    let n = table.n();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let rhs = -table.l_ij(i, j) / &l;
            if *m.x(i, j) != rhs {
                return Err(Witness::new(
                    "x_ij = -L_ij/L",
                    format!("i={i} j={j}"),
                    m.x(i, j),
                    rhs,
                ));
            }
        }
    }
    Ok(())
}

pub fn kenyon_wilson_check(net: &ElectricalNetwork) -> Result<CheckResult> {
    let table = groves(net)?;
    Ok(kenyon_wilson_identity(&table, &response_matrix(net)))
}

/// `L_σ / L`.
pub fn grove_ratio(net: &ElectricalNetwork, sigma: &NonCrossingPartition) -> Result<Rational> {
    let table = groves(net)?;
    if sigma.n() != net.n() {
        return Err(Error::Dimension(format!(
            "partition of {} elements for n = {}",
            sigma.n(),
            net.n()
        )));
    }
    Ok(table.get(sigma) / table.l())
}
