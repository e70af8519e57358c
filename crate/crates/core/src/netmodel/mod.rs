//! Circular planar electrical networks.
//!
//! Vertices are addressed by a single index: boundary vertex `i` (1-based
//! label, counterclockwise on the circle) is index `i - 1`, internal vertex
//! `j` (0-based) is index `n + j`. Edges are addressed by their position in
//! [`ElectricalNetwork::edges`].
//!
//! Rotation convention: the rotation of a vertex lists its incident edges
//! counterclockwise. At boundary vertex `i` the list starts with the edge
//! nearest the boundary arc towards `i + 1` and ends with the edge nearest
//! the arc towards `i - 1`; the outward direction sits between the last and
//! the first entry.

mod faces;
mod format;
mod generate;
mod surgery;

pub use faces::{DartEdge, FaceDecomposition, Region};
pub use format::{EdgeDoc, NetworkDoc};
pub use generate::{corpus, generate, random_move, Kind};
pub use surgery::Move;

use crate::error::{Error, Result};
use crate::exactla::{is_positive, Rational};
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: (usize, usize),
    pub weight: Rational,
}

impl Edge {
    /// The endpoint opposite to `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElectricalNetwork {
    n: usize,
    internal: Vec<String>,
    edges: Vec<Edge>,
    rotations: Vec<Vec<usize>>,
}

impl ElectricalNetwork {
    /// Validates and builds a network. `rotations` is indexed by vertex and
    /// holds edge positions.
    pub fn new(
        n: usize,
        internal: Vec<String>,
        edges: Vec<Edge>,
        rotations: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let net = ElectricalNetwork {
            n,
            internal,
            edges,
            rotations,
        };
        net.validate()?;
        Ok(net)
    }

    /// The network with `n` boundary vertices and nothing else.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new(), Vec::new(), vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.internal.len()
    }

    pub fn internal(&self) -> &[String] {
        &self.internal
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn vertex_name(&self, v: usize) -> String {
        if v < self.n {
            format!("b{}", v + 1)
        } else {
            self.internal[v - self.n].clone()
        }
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        if let Some(i) = boundary_label(name) {
            return (1..=self.n).contains(&i).then(|| i - 1);
        }
        self.internal
            .iter()
            .position(|s| s == name)
            .map(|j| self.n + j)
    }

    /// Connected-component id per vertex (ids are the smallest vertex index
    /// of the component).
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.union(e.ends.0, e.ends.1);
        }
        let mut comp = vec![usize::MAX; self.vertex_count()];
        for v in 0..self.vertex_count() {
            let r = uf.find(v);
            if comp[r] == usize::MAX {
                comp[r] = v;
            }
            comp[v] = comp[r];
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Malformed(format!(
                "need at least 2 boundary vertices, got {}",
                self.n
            )));
        }
        let nv = self.vertex_count();
        let mut names = HashSet::new();
        for name in &self.internal {
            if boundary_label(name).is_some() {
                return Err(Error::Malformed(format!(
                    "internal vertex {name:?} uses the boundary naming scheme"
                )));
            }
            if !names.insert(name.as_str()) {
                return Err(Error::Malformed(format!(
                    "duplicate internal vertex {name:?}"
                )));
            }
        }
        let mut ids = HashSet::new();
        for e in &self.edges {
            if !ids.insert(e.id.as_str()) {
                return Err(Error::Malformed(format!("duplicate edge id {:?}", e.id)));
            }
            if e.ends.0 >= nv || e.ends.1 >= nv {
                return Err(Error::Malformed(format!(
                    "edge {} has an unknown endpoint",
                    e.id
                )));
            }
            if e.ends.0 == e.ends.1 {
                return Err(Error::SelfLoop {
                    edge: e.id.clone(),
                    vertex: self.vertex_name(e.ends.0),
                });
            }
            if !is_positive(&e.weight) {
                return Err(Error::NonPositiveWeight {
                    edge: e.id.clone(),
                    weight: e.weight.to_string(),
                });
            }
        }
        if self.rotations.len() != nv {
            return Err(Error::Malformed(format!(
                "{} rotations for {nv} vertices",
                self.rotations.len()
            )));
        }
        let mut incident = vec![Vec::new(); nv];
        for (k, e) in self.edges.iter().enumerate() {
            incident[e.ends.0].push(k);
            incident[e.ends.1].push(k);
        }
        for (v, inc) in incident.iter().enumerate() {
            let mut want = inc.clone();
            let mut got = self.rotations[v].clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(Error::BadRotation {
                    vertex: self.vertex_name(v),
                    reason: "rotation must list every incident edge exactly once".into(),
                });
            }
        }
        let comp = self.components();
        let touched: HashSet<usize> = (0..self.n).map(|v| comp[v]).collect();
        if let Some(v) = (self.n..nv).find(|v| !touched.contains(&comp[*v])) {
            return Err(Error::FloatingComponent(self.vertex_name(v)));
        }
        let faces = FaceDecomposition::trace(self);
        let euler = nv as i64 - (self.edges.len() + self.n) as i64 + faces.regions.len() as i64;
        if euler != 2 {
            return Err(Error::Euler { value: euler });
        }
        Ok(())
    }

    pub fn faces(&self) -> FaceDecomposition {
        FaceDecomposition::trace(self)
    }
}

/// `Some(i)` for names of the form `b<i>`.
pub(crate) fn boundary_label(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('b')?;
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
