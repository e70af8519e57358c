use super::{one, RatMatrix, Rational, SubsetIndex};
use num_traits::{Signed, Zero};

/// Plücker coordinates of a `k`-dimensional subspace of an `n`-dimensional
/// row space, in lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    pub n: usize,
    pub k: usize,
    pub coords: Vec<Rational>,
}

impl PlueckerVector {
    pub fn zeros(n: usize, k: usize) -> Self {
        let len = SubsetIndex::new(n, k).len();
        PlueckerVector {
            n,
            k,
            coords: vec![Rational::zero(); len],
        }
    }

    pub fn index(&self) -> SubsetIndex {
        SubsetIndex::new(self.n, self.k)
    }

    /// Coordinate at a sorted 1-based subset. Panics on an invalid subset.
    pub fn get(&self, subset: &[usize]) -> &Rational {
        let r = self
            .index()
            .rank(subset)
            .unwrap_or_else(|| panic!("{subset:?} is not a {}-subset of 1..={}", self.k, self.n));
        &self.coords[r]
    }

    pub fn set(&mut self, subset: &[usize], value: Rational) {
        let r = self.index().rank(subset).expect("invalid subset");
        self.coords[r] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `(subset, value)` pairs for the nonzero coordinates.
    pub fn support(&self) -> Vec<(Vec<usize>, Rational)> {
        self.index()
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (s, c.clone()))
            .collect()
    }

    /// Rescaled so that the first nonzero coordinate is 1. Display only;
    /// comparisons go through [`scalar_equiv`].
    pub fn normalized(&self) -> Self {
        let mut out = self.clone();
        if let Some(first) = self.coords.iter().find(|c| !c.is_zero()) {
            let inv = one() / first;
            for c in &mut out.coords {
                *c *= &inv;
            }
        }
        out
    }

    /// True if every nonzero coordinate has the same sign and at least one
    /// coordinate is nonzero.
    pub fn is_projectively_nonnegative(&self) -> bool {
        let pos = self.coords.iter().any(|c| c.is_positive());
        let neg = self.coords.iter().any(|c| c.is_negative());
        (pos || neg) && !(pos && neg)
    }

    pub fn as_row(&self) -> RatMatrix {
        RatMatrix::from_fn(1, self.coords.len(), |_, j| self.coords[j].clone())
    }
}

/// Maximal minors of a `k × n` matrix. The coordinate at `J` is the
/// determinant of the columns `J`.
pub fn pluecker(m: &RatMatrix) -> PlueckerVector {
    let (k, n) = (m.rows(), m.cols());
    assert!(k <= n, "pluecker needs rows <= cols, got {k}x{n}");
    let rows: Vec<usize> = (0..k).collect();
    let coords = SubsetIndex::new(n, k)
        .iter()
        .map(|cols| {
            let c0: Vec<usize> = cols.iter().map(|c| c - 1).collect();
            m.select(&rows, &c0).det()
        })
        .collect();
    PlueckerVector { n, k, coords }
}

/// Plücker vector of the row space of `m`, whatever the number of rows.
/// Uses the reduced echelon basis, so equal row spaces give equal vectors.
pub fn point_pluecker(m: &RatMatrix) -> PlueckerVector {
    pluecker(&m.row_basis())
}

/// Whether `p = c·q` for some nonzero rational `c`.
pub fn scalar_equiv(p: &PlueckerVector, q: &PlueckerVector) -> bool {
    if (p.n, p.k) != (q.n, q.k) {
        return false;
    }
    let mut ratio: Option<Rational> = None;
    for (a, b) in p.coords.iter().zip(&q.coords) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => {}
            (false, false) => match &ratio {
                None => ratio = Some(a / b),
                Some(c) => {
                    if *a != c * b {
                        return false;
                    }
                }
            },
            _ => return false,
        }
    }
    ratio.is_some()
}

/// Matrix of `∧^k M` in the lexicographic subset bases: entry `(I, J)` is the
/// minor of `M` on rows `I` and columns `J`.
pub fn exterior_power(m: &RatMatrix, k: usize) -> RatMatrix {
    assert!(
        k <= m.rows().min(m.cols()),
        "exterior power degree too large"
    );
    let ri: Vec<Vec<usize>> = SubsetIndex::new(m.rows(), k)
        .iter()
        .map(|s| s.iter().map(|x| x - 1).collect())
        .collect();
    let ci: Vec<Vec<usize>> = SubsetIndex::new(m.cols(), k)
        .iter()
        .map(|s| s.iter().map(|x| x - 1).collect())
        .collect();
    RatMatrix::from_fn(ri.len(), ci.len(), |a, b| m.select(&ri[a], &ci[b]).det())
}

fn stack(vs: &[Vec<Rational>], dim: usize) -> RatMatrix {
    RatMatrix::from_rows(vs.to_vec(), dim).expect("vectors of unequal length")
}

fn ambient(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> usize {
    a.first().or(b.first()).map_or(0, |v| v.len())
}

/// Whether `span(b) ⊆ span(a)`.
pub fn subspace_contains(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let dim = ambient(a, b);
    let ma = stack(a, dim);
    let ra = ma.rank();
    ma.vstack(&stack(b, dim)).rank() == ra
}

/// Whether `span(a) = span(b)`, decided by ranks.
pub fn subspace_equal(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let dim = ambient(a, b);
    let ma = stack(a, dim);
    let mb = stack(b, dim);
    let ra = ma.rank();
    ra == mb.rank() && ma.vstack(&mb).rank() == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    #[test]
    fn identity_has_single_coordinate() {
        let p = pluecker(&RatMatrix::identity(2));
        assert_eq!(p.coords, vec![int(1)]);
    }

    #[test]
    fn small_minors() {
        let p = pluecker(&RatMatrix::from_i64(&[&[1, 0, -1], &[0, 1, 0]]));
        assert_eq!(p.get(&[1, 2]), &int(1));
        assert_eq!(p.get(&[1, 3]), &int(0));
        assert_eq!(p.get(&[2, 3]), &int(1));
    }

    #[test]
    fn scalar_equivalence() {
        let p = pluecker(&RatMatrix::from_i64(&[&[1, 2, 3], &[0, 1, 5]]));
        let mut q = p.clone();
        for c in &mut q.coords {
            *c *= int(7);
        }
        assert!(scalar_equiv(&p, &q));
        let mut r = p.clone();
        for c in &mut r.coords {
            *c *= rat(-1, 3);
        }
        assert!(scalar_equiv(&p, &r));
        let a = PlueckerVector {
            n: 3,
            k: 1,
            coords: vec![int(1), int(0), int(1)],
        };
        let b = PlueckerVector {
            n: 3,
            k: 1,
            coords: vec![int(1), int(0), int(2)],
        };
        assert!(!scalar_equiv(&a, &b));
        assert!(!scalar_equiv(
            &PlueckerVector::zeros(3, 1),
            &PlueckerVector::zeros(3, 1)
        ));
    }

    #[test]
    fn exterior_power_small_cases() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(exterior_power(&m, 1), m);
        assert_eq!(exterior_power(&m, 2), RatMatrix::from_i64(&[&[-2]]));
    }

    #[test]
    fn point_pluecker_ignores_redundant_rows() {
        let m = RatMatrix::from_i64(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]);
        let p = point_pluecker(&m);
        assert_eq!(p.k, 2);
        let q = pluecker(&RatMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]));
        assert!(scalar_equiv(&p, &q));
    }

    #[test]
    fn subspaces() {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        let two_e1 = vec![int(2), int(0)];
        assert!(subspace_equal(std::slice::from_ref(&e1), &[two_e1]));
        assert!(!subspace_equal(
            std::slice::from_ref(&e1),
            &[e1.clone(), e2.clone()]
        ));
        assert!(subspace_contains(&[e1.clone(), e2], &[e1]));
    }

    #[test]
    fn normalization_and_sign() {
        let p = PlueckerVector {
            n: 3,
            k: 1,
            coords: vec![int(0), int(-2), int(-4)],
        };
        assert_eq!(p.normalized().coords, vec![int(0), int(1), int(2)]);
        assert!(p.is_projectively_nonnegative());
        let q = PlueckerVector {
            n: 2,
            k: 1,
            coords: vec![int(1), int(-1)],
        };
        assert!(!q.is_projectively_nonnegative());
    }
}
