use elnet::exactla::{exterior_power, int, pluecker, point_pluecker, scalar_equiv, RatMatrix};
use elnet::{PlueckerVector, Rational, SubsetIndex};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| RatMatrix::from_fn(rows, cols, |i, j| int(v[i * cols + j])))
}

/// Sorts `idx` and returns the sign of the sorting permutation, or `None` on
/// a repeated index.
fn sort_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// Grassmann-Plücker relation for a `(k-1)`-set `a` and a `(k+1)`-set `b`.
fn gp_relation(p: &PlueckerVector, a: &[usize], b: &[usize]) -> Rational {
    let coord = |idx: Vec<usize>| -> Rational {
        let mut idx = idx;
        match sort_sign(&mut idx) {
            Some(s) => int(s) * p.get(&idx),
            None => int(0),
        }
    };
    let mut total = int(0);
    for l in 0..b.len() {
        let mut left = a.to_vec();
        left.push(b[l]);
        let right: Vec<usize> = b
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != l)
            .map(|(_, &x)| x)
            .collect();
        let term = coord(left) * coord(right);
        if l % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_term_relation(m in matrix(2, 4)) {
        let p = pluecker(&m);
        let rel = p.get(&[1, 2]) * p.get(&[3, 4]) - p.get(&[1, 3]) * p.get(&[2, 4])
            + p.get(&[1, 4]) * p.get(&[2, 3]);
        prop_assert_eq!(rel, int(0));
    }

    #[test]
    fn grassmann_pluecker_3x6(m in matrix(3, 6)) {
        let p = pluecker(&m);
        let pairs = SubsetIndex::new(6, 2);
        let quads = SubsetIndex::new(6, 4);
        for a in pairs.iter() {
            for b in quads.iter() {
                prop_assert_eq!(gp_relation(&p, &a, &b), int(0), "a={:?} b={:?}", a, b);
            }
        }
    }

    #[test]
    fn rank_plus_nullity(m in matrix(4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel().len(), 6);
        prop_assert_eq!(m.rank() + m.left_kernel().len(), 4);
        let k = m.kernel();
        for v in &k {
            let col = RatMatrix::from_fn(6, 1, |i, _| v[i].clone());
            prop_assert!((&m * &col).is_zero());
        }
    }

    #[test]
    fn exterior_power_is_functorial(x in matrix(2, 4), m in matrix(4, 4)) {
        let lhs = pluecker(&(&x * &m));
        let rhs = &pluecker(&x).as_row() * &exterior_power(&m, 2);
        prop_assert_eq!(lhs.as_row(), rhs);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_round_trip(a in matrix(3, 3)) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(&a * &inv, RatMatrix::identity(3)),
            Err(_) => prop_assert_eq!(a.det(), int(0)),
        }
    }

    #[test]
    fn row_space_point_ignores_basis(x in matrix(2, 5), g in matrix(2, 2)) {
        prop_assume!(x.rank() == 2 && g.det() != int(0));
        let p = pluecker(&x);
        prop_assert!(scalar_equiv(&p, &pluecker(&(&g * &x))));
        prop_assert!(scalar_equiv(&p, &point_pluecker(&x.vstack(&(&g * &x)))));
    }
}
