//! Laplacian, response matrix and effective resistance.

use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, int, one, rat, zero, RatMatrix, Rational};
use crate::netmodel::ElectricalNetwork;
use crate::report::{CheckResult, Witness};
use num_traits::{Signed, Zero};

/// The `n × n` response matrix. Diagonal entries are `≥ 0`, off-diagonal
/// entries `≤ 0`, rows sum to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResponseMatrix {
    m: RatMatrix,
}

impl ResponseMatrix {
    /// Wraps a square matrix without checking the invariants; see
    /// [`invariants_check`].
    pub fn from_matrix(m: RatMatrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "response matrix must be square");
        ResponseMatrix { m }
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    /// `x_ij`, 1-based.
    pub fn x(&self, i: usize, j: usize) -> &Rational {
        &self.m[(i - 1, j - 1)]
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n())
            .map(|i| self.m.row(i).iter().map(fmt_rational).collect())
            .collect()
    }
}

/// Weighted Laplacian over all vertices, in vertex-index order.
pub fn laplacian(net: &ElectricalNetwork) -> RatMatrix {
    let nv = net.vertex_count();
    let mut l = RatMatrix::zeros(nv, nv);
    for e in net.edges() {
        let (a, b) = e.ends;
        l[(a, a)] += &e.weight;
        l[(b, b)] += &e.weight;
        l[(a, b)] -= &e.weight;
        l[(b, a)] -= &e.weight;
    }
    l
}

/// Schur complement of the internal block of the Laplacian.
pub fn response_matrix(net: &ElectricalNetwork) -> ResponseMatrix {
    let n = net.n();
    let l = laplacian(net);
    let b: Vec<usize> = (0..n).collect();
    let i: Vec<usize> = (n..net.vertex_count()).collect();
    let lbb = l.select(&b, &b);
    if i.is_empty() {
        return ResponseMatrix { m: lbb };
    }
    let x = l
        .select(&i, &i)
        .solve(&l.select(&i, &b))
        .expect("internal block is nonsingular when every component reaches the boundary");
    ResponseMatrix {
        m: lbb.sub(&(&l.select(&b, &i) * &x)),
    }
}

/// Symmetry, zero row sums and the sign pattern.
pub fn invariants_check(m: &ResponseMatrix) -> CheckResult {
    let n = m.n();
    for i in 1..=n {
        let mut sum = zero();
        for j in 1..=n {
            if m.x(i, j) != m.x(j, i) {
                return Err(Witness::new(
                    "x_ij = x_ji",
                    format!("i={i} j={j}"),
                    m.x(i, j),
                    m.x(j, i),
                ));
            }
            let bad_sign = if i == j {
                m.x(i, j).is_negative()
            } else {
                m.x(i, j).is_positive()
            };
            if bad_sign {
                let want = if i == j { ">= 0" } else { "<= 0" };
                return Err(Witness::new(
                    "sign pattern",
                    format!("i={i} j={j}"),
                    m.x(i, j),
                    want,
                ));
            }
            sum += m.x(i, j);
        }
        if !sum.is_zero() {
            return Err(Witness::new("row sum = 0", format!("i={i}"), sum, 0));
        }
    }
    Ok(())
}

/// Resistance between boundary vertices `i` and `j` (1-based): the voltage
/// at `i` when a unit current enters at `i` and `j` is grounded.
pub fn effective_resistance(net: &ElectricalNetwork, i: usize, j: usize) -> Result<Rational> {
    let n = net.n();
    for k in [i, j] {
        if !(1..=n).contains(&k) {
            return Err(Error::BadIndex { k, n });
        }
    }
    let comp = net.components();
    if comp[i - 1] != comp[j - 1] {
        return Err(Error::Disconnected { i, j });
    }
    if i == j {
        return Ok(zero());
    }
    let keep: Vec<usize> = (0..net.vertex_count())
        .filter(|&v| comp[v] == comp[j - 1] && v != j - 1)
        .collect();
    let l = laplacian(net).select(&keep, &keep);
    let src = keep.iter().position(|&v| v == i - 1).expect("i is kept");
    let rhs = RatMatrix::from_fn(keep.len(), 1, |r, _| if r == src { one() } else { zero() });
    let v = l.solve(&rhs)?;
    Ok(v[(src, 0)].clone())
}

/// Inverse of the response matrix with row and column `n` removed, matched
/// against effective resistances:
/// `G_ii = R_in`, `G_ij = (R_in + R_jn - R_ij) / 2`.
pub fn kwrep_check(net: &ElectricalNetwork) -> Result<CheckResult> {
    let n = net.n();
    let comp = net.components();
    if let Some(i) = (1..n).find(|&i| comp[i] != comp[0]) {
        return Err(Error::Disconnected { i: 1, j: i + 1 });
    }
    let m = response_matrix(net);
    let idx: Vec<usize> = (0..n - 1).collect();
    let minor = m.matrix().select(&idx, &idx);
    let g = match minor.inverse() {
        Ok(g) => g,
        Err(_) => {
            return Ok(Err(Witness::new(
                "minor is invertible",
                "rows/cols 1..n-1",
                minor.det(),
                "nonzero",
            )))
        }
    };
    let mut r = RatMatrix::zeros(n, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let v = effective_resistance(net, i, j)?;
            r[(i - 1, j - 1)] = v.clone();
            r[(j - 1, i - 1)] = v;
        }
    }
    let half = rat(1, 2);
    for i in 1..n {
        for j in 1..n {
            let want = if i == j {
                r[(i - 1, n - 1)].clone()
            } else {
                (&r[(i - 1, n - 1)] + &r[(j - 1, n - 1)] - &r[(i - 1, j - 1)]) * &half
            };
            if g[(i - 1, j - 1)] != want {
                return Ok(Err(Witness::new(
                    "(M')^-1 = resistance formula",
                    format!("i={i} j={j}"),
                    &g[(i - 1, j - 1)],
                    want,
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// Response matrix after a bridge of weight `t` between `k` and `k+1`.
pub fn update_bridge(m: &ResponseMatrix, k: usize, t: &Rational) -> ResponseMatrix {
    let n = m.n();
    let (a, b) = (k - 1, k % n);
    let mut out = m.m.clone();
    out[(a, a)] += t;
    out[(b, b)] += t;
    out[(a, b)] -= t;
    out[(b, a)] -= t;
    ResponseMatrix { m: out }
}

/// Response matrix after a spike of weight `1/t` at `k`:
/// `x'_ij = x_ij - t x_ik x_kj / (t x_kk + 1)`.
pub fn update_spike(m: &ResponseMatrix, k: usize, t: &Rational) -> ResponseMatrix {
    let n = m.n();
    let c = k - 1;
    let denom = t * &m.m[(c, c)] + int(1);
    let f = t / denom;
    let out = RatMatrix::from_fn(n, n, |i, j| &m.m[(i, j)] - &f * &m.m[(i, c)] * &m.m[(c, j)]);
    ResponseMatrix { m: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::{generate, Kind};

    fn star(c: i64, a: i64, b: i64) -> ElectricalNetwork {
        generate(Kind::Star, 3, 0, 0, Some(&[int(c), int(a), int(b)])).unwrap()
    }

    #[test]
    fn empty_is_zero() {
        let net = ElectricalNetwork::empty(4).unwrap();
        assert!(response_matrix(&net).matrix().is_zero());
    }

    #[test]
    fn star_entry() {
        let m = response_matrix(&star(3, 1, 2));
        assert_eq!(m.x(1, 2), &rat(-1, 2));
        assert!(invariants_check(&m).is_ok());
    }

    #[test]
    fn triangle_entries() {
        let (b, c, a) = (int(2), int(5), int(7));
        let net = generate(Kind::Triangle, 3, 0, 0, Some(&[b.clone(), c, a.clone()])).unwrap();
        let m = response_matrix(&net);
        assert_eq!(m.x(1, 2), &-b);
        assert_eq!(m.x(1, 3), &-a);
    }

    #[test]
    fn resistance_series_and_parallel() {
        let e = ElectricalNetwork::empty(2).unwrap();
        let one_bridge = e.add_bridge(1, &int(4)).unwrap();
        assert_eq!(effective_resistance(&one_bridge, 1, 2).unwrap(), rat(1, 4));
        let two = one_bridge.add_bridge(1, &int(2)).unwrap();
        assert_eq!(effective_resistance(&two, 1, 2).unwrap(), rat(1, 6));
        let s = star(3, 1, 2);
        assert_eq!(effective_resistance(&s, 1, 2).unwrap(), rat(1, 3) + int(1));
        assert!(matches!(
            effective_resistance(&e, 1, 2),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn kwrep_small_cases() {
        let net = ElectricalNetwork::empty(2)
            .unwrap()
            .add_bridge(1, &int(3))
            .unwrap();
        assert!(kwrep_check(&net).unwrap().is_ok());
        assert!(kwrep_check(&star(3, 1, 2)).unwrap().is_ok());
        let split = ElectricalNetwork::empty(4)
            .unwrap()
            .add_bridge(1, &int(1))
            .unwrap();
        assert!(kwrep_check(&split).is_err());
    }

    #[test]
    fn bridge_update_on_zero() {
        let m = ResponseMatrix::from_matrix(RatMatrix::zeros(3, 3));
        let u = update_bridge(&m, 1, &int(5));
        assert_eq!(u.x(1, 1), &int(5));
        assert_eq!(u.x(2, 2), &int(5));
        assert_eq!(u.x(1, 2), &int(-5));
        assert_eq!(u.x(3, 3), &int(0));
    }

    #[test]
    fn spike_update_on_zero() {
        let m = ResponseMatrix::from_matrix(RatMatrix::zeros(3, 3));
        assert!(update_spike(&m, 2, &rat(2, 3)).matrix().is_zero());
    }

    #[test]
    fn parallel_bridges_add() {
        let e = ElectricalNetwork::empty(3).unwrap();
        let twice = e
            .add_bridge(2, &int(1))
            .unwrap()
            .add_bridge(2, &int(2))
            .unwrap();
        let once = e.add_bridge(2, &int(3)).unwrap();
        assert_eq!(response_matrix(&twice), response_matrix(&once));
    }

    #[test]
    fn updates_match_recomputation_on_fixtures() {
        for net in [
            star(3, 1, 2),
            generate(Kind::Triangle, 3, 0, 0, None).unwrap(),
        ] {
            let m = response_matrix(&net);
            for k in 1..=3 {
                let t = rat(2, 5);
                assert_eq!(
                    update_spike(&m, k, &t),
                    response_matrix(&net.add_spike(k, &t).unwrap())
                );
                assert_eq!(
                    update_bridge(&m, k, &t),
                    response_matrix(&net.add_bridge(k, &t).unwrap())
                );
            }
        }
    }
}
