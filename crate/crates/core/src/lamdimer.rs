//! The bipartite dimer network of an electrical network and its
//! almost-perfect-matching boundary measurements.
//!
//! Dimer boundary vertex `2i - 1` hangs off the black vertex of electrical
//! boundary vertex `i`; dimer boundary vertex `2i` hangs off the black
//! vertex of the region touching the arc `(i, i+1)`. Every region of the
//! disk gets a black vertex, including regions touching the circle.

use crate::error::{Error, Result};
use crate::exactla::fmt_rational;
use crate::exactla::{one, PlueckerVector, Rational, SubsetIndex};
use crate::groves::{groves, GroveTable};
use crate::netmodel::{DartEdge, EdgeDoc, ElectricalNetwork, NetworkDoc};
use crate::partitions::is_concordant;
use crate::report::{CheckResult, Witness};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

pub const MAX_INTERNAL: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

/// Where a dimer vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Dimer boundary vertex, 1-based label in `1..=2n`.
    Boundary(usize),
    /// Electrical boundary vertex `i` (1-based).
    BoundaryVertex(usize),
    /// Internal electrical vertex, by vertex index.
    Vertex(usize),
    /// Electrical edge, by position.
    Edge(usize),
    /// Region of the disk, by region id.
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerVertex {
    pub origin: Origin,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerEdge {
    pub ends: (usize, usize),
    pub weight: Rational,
}

/// A planar bipartite graph whose first `boundary` vertices are the
/// boundary vertices `1..=boundary`.
#[derive(Clone, Debug)]
pub struct BipartiteNetwork {
    boundary: usize,
    vertices: Vec<DimerVertex>,
    edges: Vec<DimerEdge>,
    adj: Vec<Vec<usize>>,
    rotations: Vec<Vec<usize>>,
}

impl BipartiteNetwork {
    pub fn boundary_count(&self) -> usize {
        self.boundary
    }

    pub fn vertices(&self) -> &[DimerVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[DimerEdge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn internal_count(&self) -> usize {
        self.vertices.len() - self.boundary
    }

    fn vertex_name(&self, net: &ElectricalNetwork, v: usize) -> String {
        match self.vertices[v].origin {
            Origin::Boundary(j) => format!("b{j}"),
            Origin::BoundaryVertex(i) => format!("bb:{i}"),
            Origin::Vertex(u) => format!("bv:{}", net.vertex_name(u)),
            Origin::Edge(e) => format!("we:{}", net.edges()[e].id),
            Origin::Face(f) => format!("bf:{f}"),
        }
    }

    /// The dimer graph in the network document format, with a `colors`
    /// object and counterclockwise rotations.
    pub fn to_doc(&self, net: &ElectricalNetwork) -> NetworkDoc {
        let names: Vec<String> = (0..self.vertices.len())
            .map(|v| self.vertex_name(net, v))
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| EdgeDoc {
                id: format!("d{k}"),
                ends: [names[e.ends.0].clone(), names[e.ends.1].clone()],
                weight: fmt_rational(&e.weight),
            })
            .collect();
        let rotations = (0..self.vertices.len())
            .map(|v| {
                let ids = self.rotations[v].iter().map(|k| format!("d{k}")).collect();
                (names[v].clone(), ids)
            })
            .collect();
        let colors = (0..self.vertices.len())
            .map(|v| {
                let c = match self.vertices[v].color {
                    Color::Black => "black",
                    Color::White => "white",
                };
                (names[v].clone(), c.to_string())
            })
            .collect();
        NetworkDoc {
            n: self.boundary,
            internal: names[self.boundary..].to_vec(),
            edges,
            rotations,
            colors: Some(colors),
        }
    }
}

struct Builder {
    vertices: Vec<DimerVertex>,
    edges: Vec<DimerEdge>,
    lookup: HashMap<(usize, usize), usize>,
}

impl Builder {
    fn vertex(&mut self, origin: Origin, color: Color) -> usize {
        self.vertices.push(DimerVertex { origin, color });
        self.vertices.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize, weight: Rational) -> usize {
        *self.lookup.entry((a, b)).or_insert_with(|| {
            self.edges.push(DimerEdge {
                ends: (a, b),
                weight,
            });
            self.edges.len() - 1
        })
    }
}

pub fn build_bipartite(net: &ElectricalNetwork) -> BipartiteNetwork {
    let n = net.n();
    let faces = net.faces();
    let mut b = Builder {
        vertices: Vec::new(),
        edges: Vec::new(),
        lookup: HashMap::new(),
    };
    for j in 1..=2 * n {
        b.vertex(Origin::Boundary(j), Color::White);
    }
    let black_of: Vec<usize> = (0..net.vertex_count())
        .map(|v| {
            if net.is_boundary(v) {
                b.vertex(Origin::BoundaryVertex(v + 1), Color::Black)
            } else {
                b.vertex(Origin::Vertex(v), Color::Black)
            }
        })
        .collect();
    let white_of: Vec<usize> = (0..net.edges().len())
        .map(|e| b.vertex(Origin::Edge(e), Color::White))
        .collect();
    let mut face_of = vec![usize::MAX; faces.regions.len()];
    for r in faces.disk_regions() {
        face_of[r] = b.vertex(Origin::Face(r), Color::Black);
    }

    for i in 1..=n {
        b.edge(black_of[i - 1], 2 * i - 2, one());
        b.edge(face_of[faces.arc_region(i)], 2 * i - 1, one());
    }
    for (e, edge) in net.edges().iter().enumerate() {
        let (u, v) = edge.ends;
        b.edge(black_of[u], white_of[e], edge.weight.clone());
        b.edge(black_of[v], white_of[e], edge.weight.clone());
        let (l, r) = faces.edge_sides(e);
        b.edge(face_of[l], white_of[e], one());
        b.edge(face_of[r], white_of[e], one());
    }

    // counterclockwise rotations, for export only
    let nv = b.vertices.len();
    let mut rotations = vec![Vec::new(); nv];
    let id = |b: &Builder, x: usize, y: usize| b.lookup[&(x, y)];
    for i in 1..=n {
        rotations[2 * i - 2] = vec![id(&b, black_of[i - 1], 2 * i - 2)];
        rotations[2 * i - 1] = vec![id(&b, face_of[faces.arc_region(i)], 2 * i - 1)];
    }
    for v in 0..net.vertex_count() {
        let mut r: Vec<usize> = net
            .rotation(v)
            .iter()
            .map(|&e| id(&b, black_of[v], white_of[e]))
            .collect();
        if net.is_boundary(v) {
            r.push(id(&b, black_of[v], 2 * v));
        }
        rotations[black_of[v]] = r;
    }
    for (e, edge) in net.edges().iter().enumerate() {
        let (u, v) = edge.ends;
        let (l, r) = faces.edge_sides(e);
        let mut rot = vec![
            id(&b, black_of[v], white_of[e]),
            id(&b, face_of[l], white_of[e]),
            id(&b, black_of[u], white_of[e]),
            id(&b, face_of[r], white_of[e]),
        ];
        if l == r {
            rot.pop();
        }
        rotations[white_of[e]] = rot;
    }
    for f in faces.disk_regions() {
        let mut r: Vec<usize> = Vec::new();
        for &(_, de) in &faces.regions[f].walk {
            let k = match de {
                DartEdge::Edge(e) => id(&b, face_of[f], white_of[e]),
                DartEdge::Arc(i) => id(&b, face_of[f], 2 * i - 1),
            };
            if !r.contains(&k) {
                r.push(k);
            }
        }
        rotations[face_of[f]] = r;
    }

    let mut adj = vec![Vec::new(); nv];
    for (k, e) in b.edges.iter().enumerate() {
        adj[e.ends.0].push(k);
        adj[e.ends.1].push(k);
    }
    BipartiteNetwork {
        boundary: 2 * n,
        vertices: b.vertices,
        edges: b.edges,
        adj,
        rotations,
    }
}

/// `½(#boundary + Σ_black (deg − 2) + Σ_white (2 − deg))` over internal vertices.
pub fn k_invariant(g: &BipartiteNetwork) -> Result<usize> {
    let mut s = g.boundary as i64;
    for v in g.boundary..g.vertices.len() {
        let d = g.degree(v) as i64;
        s += match g.vertices[v].color {
            Color::Black => d - 2,
            Color::White => 2 - d,
        };
    }
    if s < 0 || s % 2 != 0 {
        return Err(Error::Invariant(format!(
            "k formula gives {s}/2, not a non-negative integer"
        )));
    }
    Ok((s / 2) as usize)
}

/// Boundary measurements: `Δ_I` sums the weights of the matchings covering
/// every internal vertex whose uncovered boundary whites together with
/// covered boundary blacks form `I`.
pub fn matchings_delta(g: &BipartiteNetwork) -> Result<PlueckerVector> {
    let k = k_invariant(g)?;
    if g.internal_count() > MAX_INTERNAL {
        return Err(Error::SizeBound {
            what: "internal dimer vertices",
            value: g.internal_count(),
            bound: MAX_INTERNAL,
        });
    }
    let mut st = Matcher {
        g,
        used: vec![false; g.vertices.len()],
        index: SubsetIndex::new(g.boundary, k),
        coords: vec![Rational::zero(); SubsetIndex::new(g.boundary, k).len()],
        bad: None,
    };
    st.rec(one());
    if let Some(size) = st.bad {
        return Err(Error::Invariant(format!(
            "a matching has {size} boundary indices, expected {k}"
        )));
    }
    Ok(PlueckerVector {
        n: g.boundary,
        k,
        coords: st.coords,
    })
}

struct Matcher<'a> {
    g: &'a BipartiteNetwork,
    used: Vec<bool>,
    index: SubsetIndex,
    coords: Vec<Rational>,
    bad: Option<usize>,
}

impl Matcher<'_> {
    fn options(&self, v: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.g.adj[v].iter().filter_map(move |&e| {
            let edge = &self.g.edges[e];
            let u = if edge.ends.0 == v {
                edge.ends.1
            } else {
                edge.ends.0
            };
            (!self.used[u]).then_some((u, &edge.weight))
        })
    }

    fn rec(&mut self, weight: Rational) {
        let mut best: Option<(usize, usize)> = None;
        for v in self.g.boundary..self.g.vertices.len() {
            if self.used[v] {
                continue;
            }
            let c = self.options(v).count();
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((v, c));
                if c == 0 {
                    return;
                }
            }
        }
        let Some((v, _)) = best else {
            self.leaf(weight);
            return;
        };
        let opts: Vec<(usize, Rational)> = self.options(v).map(|(u, w)| (u, w.clone())).collect();
        self.used[v] = true;
        for (u, w) in opts {
            self.used[u] = true;
            self.rec(&weight * w);
            self.used[u] = false;
        }
        self.used[v] = false;
    }

    fn leaf(&mut self, weight: Rational) {
        let set: Vec<usize> = (0..self.g.boundary)
            .filter(|&j| match self.g.vertices[j].color {
                Color::White => !self.used[j],
                Color::Black => self.used[j],
            })
            .map(|j| j + 1)
            .collect();
        match self.index.rank(&set) {
            Some(r) => self.coords[r] += weight,
            None => self.bad = Some(set.len()),
        }
    }
}

/// `Δ_I = Σ_σ a_{Iσ} L_σ` for every `I`, from precomputed data.
pub fn elcon_identity(delta: &PlueckerVector, table: &GroveTable) -> CheckResult {
    let n = table.n();
    if let Some((rgs, v)) = table
        .entries()
        .find(|(rgs, _)| crate::partitions::is_crossing(rgs))
    {
        return Err(Witness::new("crossing L_σ = 0", format!("{rgs:?}"), v, 0));
    }
    let entries = table.noncrossing_entries();
    for subset in SubsetIndex::new(2 * n, n - 1).iter() {
        let mut sum = Rational::zero();
        for (sigma, l) in &entries {
            if is_concordant(&subset, sigma).expect("sizes match") {
                sum += l;
            }
        }
        let lhs = delta.get(&subset);
        if *lhs != sum {
            return Err(Witness::new(
                "Δ_I = Σ a_Iσ L_σ",
                format!("I={subset:?}"),
                lhs,
                sum,
            ));
        }
    }
    Ok(())
}

pub fn elcon_check(net: &ElectricalNetwork) -> Result<CheckResult> {
    let delta = matchings_delta(&build_bipartite(net))?;
    Ok(elcon_identity(&delta, &groves(net)?))
}

/// Index set `{2i-1}` together with the even labels other than the two
/// neighbours of `2j-1`.
pub fn lemma_index_set(n: usize, i: usize, j: usize) -> Vec<usize> {
    let left = if j == 1 { 2 * n } else { 2 * j - 2 };
    let right = 2 * j;
    let mut s: Vec<usize> = (1..=n)
        .map(|k| 2 * k)
        .filter(|&e| e != left && e != right)
        .collect();
    s.push(2 * i - 1);
    s.sort_unstable();
    s
}

/// `L = Δ_R` for every even `R`; `L_ij` and `L_kk` at their index sets.
pub fn lemmal_identity(delta: &PlueckerVector, table: &GroveTable) -> CheckResult {
    let n = table.n();
    let l = table.l();
    let evens: Vec<usize> = (1..=n).map(|k| 2 * k).collect();
    for skip in 0..n {
        let r: Vec<usize> = evens
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != skip)
            .map(|(_, &e)| e)
            .collect();
        if *delta.get(&r) != l {
            return Err(Witness::new(
                "L = Δ_R",
                format!("R={r:?}"),
                &l,
                delta.get(&r),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let s = lemma_index_set(n, i, j);
            let lij = table.l_ij(i, j);
            if *delta.get(&s) != lij {
                let name = if i == j { "L_kk = Δ_T" } else { "L_ij = Δ_N" };
                return Err(Witness::new(
                    name,
                    format!("i={i} j={j} I={s:?}"),
                    lij,
                    delta.get(&s),
                ));
            }
        }
    }
    Ok(())
}

pub fn lemmal_check(net: &ElectricalNetwork) -> Result<CheckResult> {
    let delta = matchings_delta(&build_bipartite(net))?;
    Ok(lemmal_identity(&delta, &groves(net)?))
}

/// `Δ` keyed by subset, nonzero entries only.
pub fn delta_map(delta: &PlueckerVector) -> BTreeMap<Vec<usize>, Rational> {
    delta.support().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};
    use crate::netmodel::{generate, Kind};

    fn star(c: &Rational, a: &Rational, b: &Rational) -> ElectricalNetwork {
        generate(
            Kind::Star,
            3,
            0,
            0,
            Some(&[c.clone(), a.clone(), b.clone()]),
        )
        .unwrap()
    }

    #[test]
    fn empty_network_dimer() {
        let g = build_bipartite(&ElectricalNetwork::empty(3).unwrap());
        assert_eq!(g.internal_count(), 4);
        assert_eq!(k_invariant(&g).unwrap(), 2);
        let d = matchings_delta(&g).unwrap();
        for (s, v) in d.support() {
            assert!(s.iter().all(|x| x % 2 == 0), "{s:?}");
            assert_eq!(v, int(1));
        }
        assert_eq!(d.support().len(), 3);
    }

    #[test]
    fn star_dimer_shape() {
        let g = build_bipartite(&star(&int(1), &int(1), &int(1)));
        let blacks = (6..g.vertices().len())
            .filter(|&v| g.vertices()[v].color == Color::Black)
            .count();
        assert_eq!(blacks, 7);
        assert_eq!(g.internal_count() - blacks, 3);
        assert_eq!(k_invariant(&g).unwrap(), 2);
    }

    #[test]
    fn star_measurements() {
        let (a, b, c) = (rat(3, 2), int(2), rat(5, 7));
        let d = matchings_delta(&build_bipartite(&star(&c, &a, &b))).unwrap();
        let abc = &a * &b * &c;
        let sum = &a + &b + &c;
        let want: Vec<(&[usize], Rational)> = vec![
            (&[1, 2], &b * &c),
            (&[4, 5], &b * &c),
            (&[2, 3], &a * &b),
            (&[5, 6], &a * &b),
            (&[3, 4], &a * &c),
            (&[1, 6], &a * &c),
            (&[1, 3], abc.clone()),
            (&[3, 5], abc.clone()),
            (&[1, 5], abc),
            (&[2, 4], sum.clone()),
            (&[4, 6], sum.clone()),
            (&[2, 6], sum),
            (&[1, 4], &a * &c + &b * &c),
            (&[2, 5], &a * &b + &b * &c),
            (&[3, 6], &a * &b + &a * &c),
        ];
        for (s, v) in want {
            assert_eq!(d.get(s), &v, "Δ_{s:?}");
        }
    }

    #[test]
    fn two_boundary_spike() {
        let a = int(4);
        let net = ElectricalNetwork::empty(2)
            .unwrap()
            .add_spike(1, &(one() / &a))
            .unwrap();
        let g = build_bipartite(&net);
        assert_eq!(k_invariant(&g).unwrap(), 1);
        let d = matchings_delta(&g).unwrap();
        assert_eq!(d.get(&[2]), &a);
        assert_eq!(d.get(&[4]), &a);
        assert!(d.get(&[1]).is_zero());
        assert!(d.get(&[3]).is_zero());
    }

    #[test]
    fn lemma_index_sets() {
        assert_eq!(lemma_index_set(5, 1, 3), vec![1, 2, 8, 10]);
        assert_eq!(lemma_index_set(5, 1, 1), vec![1, 4, 6, 8]);
    }

    #[test]
    fn identities_on_fixtures() {
        let s = star(&int(3), &int(1), &int(2));
        assert!(elcon_check(&s).unwrap().is_ok());
        assert!(lemmal_check(&s).unwrap().is_ok());
        let e = ElectricalNetwork::empty(4).unwrap();
        assert!(elcon_check(&e).unwrap().is_ok());
        assert!(lemmal_check(&e).unwrap().is_ok());
    }

    #[test]
    fn export_has_colors_and_full_rotations() {
        let net = generate(Kind::Moves, 3, 4, 8, None).unwrap();
        let g = build_bipartite(&net);
        let doc = g.to_doc(&net);
        assert_eq!(doc.colors.as_ref().unwrap().len(), g.vertices().len());
        for (v, ids) in &doc.rotations {
            let idx = doc
                .internal
                .iter()
                .position(|x| x == v)
                .map(|p| p + g.boundary_count());
            if let Some(idx) = idx {
                assert_eq!(ids.len(), g.degree(idx), "{v}");
            }
        }
    }
}
