use super::ElectricalNetwork;

/// An edge of the augmented graph: a real edge (by position) or the virtual
/// boundary arc from `i` to `i + 1` (1-based `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DartEdge {
    Edge(usize),
    Arc(usize),
}

/// A region of the augmented map, given as its boundary walk. Each step is
/// `(from_vertex, edge)`; the region lies to the left of every step.
#[derive(Clone, Debug)]
pub struct Region {
    pub walk: Vec<(usize, DartEdge)>,
    /// Boundary arcs `i` (meaning the arc `(i, i+1)`) seen from inside the disk.
    pub arcs: Vec<usize>,
    pub interior: bool,
}

#[derive(Clone, Debug)]
pub struct FaceDecomposition {
    pub regions: Vec<Region>,
    pub outer: usize,
    edge_faces: Vec<(usize, usize)>,
    arc_faces: Vec<usize>,
}

impl FaceDecomposition {
    pub(super) fn trace(net: &ElectricalNetwork) -> Self {
        let n = net.n();
        let m = net.edges().len();
        let slots = m + n;
        let ends: Vec<(usize, usize)> = net
            .edges()
            .iter()
            .map(|e| e.ends)
            .chain((0..n).map(|i| (i, (i + 1) % n)))
            .collect();
        let rot: Vec<Vec<usize>> = (0..net.vertex_count())
            .map(|v| {
                if v < n {
                    let mut r = vec![m + v];
                    r.extend_from_slice(net.rotation(v));
                    r.push(m + (v + n - 1) % n);
                    r
                } else {
                    net.rotation(v).to_vec()
                }
            })
            .collect();
        let mut pos = vec![[usize::MAX; 2]; slots];
        for (v, r) in rot.iter().enumerate() {
            for (p, &s) in r.iter().enumerate() {
                let side = if ends[s].0 == v { 0 } else { 1 };
                pos[s][side] = p;
            }
        }
        let from = |d: usize| -> usize {
            let (s, dir) = (d / 2, d % 2);
            if dir == 0 {
                ends[s].0
            } else {
                ends[s].1
            }
        };
        let next = |d: usize| -> usize {
            let (s, dir) = (d / 2, d % 2);
            let w = if dir == 0 { ends[s].1 } else { ends[s].0 };
            let r = &rot[w];
            let p = pos[s][1 - dir];
            let s2 = r[(p + r.len() - 1) % r.len()];
            let dir2 = if ends[s2].0 == w { 0 } else { 1 };
            2 * s2 + dir2
        };
        let as_edge = |s: usize| {
            if s < m {
                DartEdge::Edge(s)
            } else {
                DartEdge::Arc(s - m + 1)
            }
        };

        let mut face_of = vec![usize::MAX; 2 * slots];
        let mut regions = Vec::new();
        for start in 0..2 * slots {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = regions.len();
            let mut walk = Vec::new();
            let mut arcs = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = id;
                let s = d / 2;
                walk.push((from(d), as_edge(s)));
                if s >= m && d % 2 == 0 {
                    arcs.push(s - m + 1);
                }
                d = next(d);
            }
            arcs.sort_unstable();
            let interior = arcs.is_empty();
            regions.push(Region {
                walk,
                arcs,
                interior,
            });
        }
        let outer = face_of[2 * m + 1];
        // the outer region sees the arcs from outside, so it is not interior
        regions[outer].interior = false;
        FaceDecomposition {
            edge_faces: (0..m)
                .map(|s| (face_of[2 * s], face_of[2 * s + 1]))
                .collect(),
            arc_faces: (0..n).map(|i| face_of[2 * (m + i)]).collect(),
            regions,
            outer,
        }
    }

    /// Region to the left of the edge traversed from `ends.0`, and to the left
    /// of it traversed from `ends.1`.
    pub fn edge_sides(&self, e: usize) -> (usize, usize) {
        self.edge_faces[e]
    }

    /// The region inside the disk touching the arc `(i, i+1)`, 1-based `i`.
    pub fn arc_region(&self, i: usize) -> usize {
        self.arc_faces[i - 1]
    }

    /// Regions of the disk, i.e. everything except the outer face.
    pub fn disk_regions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.regions.len()).filter(move |&r| r != self.outer)
    }
}

#[cfg(test)]
mod tests {
    use crate::netmodel::{generate, Kind};

    #[test]
    fn empty_network_has_one_disk_region() {
        let net = generate(Kind::Empty, 3, 0, 0, None).unwrap();
        let f = net.faces();
        assert_eq!(f.regions.len(), 2);
        let inner: Vec<_> = f.disk_regions().collect();
        assert_eq!(inner.len(), 1);
        assert_eq!(f.regions[inner[0]].arcs, vec![1, 2, 3]);
    }

    #[test]
    fn star_has_three_sectors() {
        let net = generate(Kind::Star, 3, 0, 0, None).unwrap();
        let f = net.faces();
        let inner: Vec<_> = f.disk_regions().collect();
        assert_eq!(inner.len(), 3);
        for i in 1..=3 {
            assert_eq!(f.regions[f.arc_region(i)].arcs, vec![i]);
        }
        // the edge to boundary 2 separates the sectors at arcs 1 and 2
        let (l, r) = f.edge_sides(1);
        let mut sides = [l, r];
        sides.sort_unstable();
        let mut want = [f.arc_region(1), f.arc_region(2)];
        want.sort_unstable();
        assert_eq!(sides, want);
    }

    #[test]
    fn triangle_has_central_region() {
        let net = generate(Kind::Triangle, 3, 0, 0, None).unwrap();
        let f = net.faces();
        let interior: Vec<_> = f
            .disk_regions()
            .filter(|&r| f.regions[r].interior)
            .collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(f.regions[interior[0]].walk.len(), 3);
        assert_eq!(f.disk_regions().count(), 4);
    }

    #[test]
    fn outer_face_walks_the_arcs_backwards() {
        let net = generate(Kind::Moves, 4, 3, 10, None).unwrap();
        let f = net.faces();
        assert_eq!(f.regions[f.outer].walk.len(), 4);
    }
}
