//! The contraction `Q` on `∧^{n-1} V` and the subspace `H` spanned by the
//! concordance columns.

use super::group::{generator, restrict_to_v, Kind};
use super::structure::{b_inverse, b_matrix, lambda};
use crate::error::{Error, Result};
use crate::exactla::{
    exterior_power, sign_pow, subspace_contains, subspace_equal, zero, RatMatrix, Rational,
    SubsetIndex,
};
use crate::partitions::{catalan, concordance_matrix};
use crate::report::{CheckResult, Witness};

fn check_n(n: usize, hi: usize) -> Result<()> {
    if (3..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeBound {
            what: "n",
            value: n,
            bound: hi,
        })
    }
}

/// Matrix of `Q: ∧^{n-1} → ∧^{n-3}` acting on row vectors. Row `I`, column
/// `I \ {i_a, i_b}` receives `Λ[i_a, i_b] (-1)^(a+b-1)` (positions 1-based).
pub fn q_operator(n: usize) -> Result<RatMatrix> {
    check_n(n, 6)?;
    let dim = 2 * n - 2;
    let l = lambda(n);
    let src = SubsetIndex::new(dim, n - 1);
    let dst = SubsetIndex::new(dim, n - 3);
    let mut q = RatMatrix::zeros(src.len(), dst.len());
    for (r, set) in src.iter().enumerate() {
        for a in 0..set.len() {
            for b in a + 1..set.len() {
                let w = &l[(set[a] - 1, set[b] - 1)];
                if *w == zero() {
                    continue;
                }
                let rest: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != a && p != b)
                    .map(|(_, &x)| x)
                    .collect();
                let c = dst.rank(&rest).expect("valid subset");
                // 1-based positions a+1, b+1
                q[(r, c)] += w * sign_pow((a + b + 1) as i64);
            }
        }
    }
    Ok(q)
}

/// Basis of `{c : c Q = 0}`.
pub fn q_kernel(n: usize) -> Result<Vec<Vec<Rational>>> {
    Ok(q_operator(n)?.left_kernel())
}

/// `H` in both coordinate systems.
#[derive(Clone, Debug)]
pub struct HSpace {
    pub n: usize,
    /// Columns of the concordance matrix, over `(n-1)`-subsets of `[2n]`.
    pub columns: Vec<Vec<Rational>>,
    /// The same vectors in the `w`-basis of `∧^{n-1} V`.
    pub w_coords: Vec<Vec<Rational>>,
}

impl HSpace {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n, 5)?;
        let a = concordance_matrix(n)?;
        let columns = a.matrix.transpose().row_vectors();
        let inv = exterior_power(&b_inverse(n), n - 1);
        let w_coords = (&a.matrix.transpose() * &inv).row_vectors();
        Ok(HSpace {
            n,
            columns,
            w_coords,
        })
    }

    pub fn dim(&self) -> usize {
        RatMatrix::from_rows(self.w_coords.clone(), self.w_coords[0].len())
            .expect("rectangular")
            .rank()
    }
}

/// The concordance columns lie in `∧^{n-1} V`, and in `w`-coordinates they
/// span exactly `ker Q`.
pub fn h_space_check(n: usize) -> Result<CheckResult> {
    let h = HSpace::new(n)?;
    let wedge_b = exterior_power(&b_matrix(n), n - 1).row_vectors();
    let parts = concordance_matrix(n)?.partitions;
    for (col, sigma) in h.columns.iter().zip(&parts) {
        if !subspace_contains(&wedge_b, std::slice::from_ref(col)) {
            return Ok(Err(Witness::new(
                "v_σ ∈ ∧^{n-1} V",
                format!("σ={sigma}"),
                "outside",
                "inside",
            )));
        }
    }
    let ker = q_kernel(n)?;
    if !subspace_equal(&h.w_coords, &ker) {
        return Ok(Err(Witness::new(
            "span(H) = ker Q",
            format!("n={n}"),
            format!("dim H = {}", h.dim()),
            format!("dim ker Q = {}", ker.len()),
        )));
    }
    Ok(Ok(()))
}

/// `dim ker Q`, `rank A_n` and Catalan(n) agree.
pub fn catalan_check(n: usize) -> Result<CheckResult> {
    let k = q_kernel(n)?.len();
    let r = concordance_matrix(n)?.matrix.rank();
    let c = catalan(n);
    if k != c {
        return Ok(Err(Witness::new("dim ker Q = C_n", format!("n={n}"), k, c)));
    }
    if r != c {
        return Ok(Err(Witness::new("rank A_n = C_n", format!("n={n}"), r, c)));
    }
    Ok(Ok(()))
}

/// `H` is mapped into itself by `∧^{n-1}(u_i(t)|_V)` for every `i` and
/// every `t` in `ts`.
pub fn sp_invariance_check(n: usize, ts: &[Rational]) -> Result<CheckResult> {
    let h = HSpace::new(n)?;
    let hm = RatMatrix::from_rows(h.w_coords.clone(), h.w_coords[0].len())?;
    for t in ts {
        for i in 1..=2 * n {
            let g = restrict_to_v(&generator(Kind::U, i, t, 2 * n)?)?;
            let image = (&hm * &exterior_power(&g.matrix, n - 1)).row_vectors();
            if !subspace_contains(&h.w_coords, &image) {
                return Ok(Err(Witness::new(
                    "H·∧(u_i|_V) ⊆ H",
                    format!("n={n} i={i} t={t}"),
                    "not contained",
                    "contained",
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// `ker Q · ∧^{n-1}(g) · Q = 0`.
pub fn q_equivariance_check(n: usize, g: &RatMatrix) -> Result<CheckResult> {
    let q = q_operator(n)?;
    let ker = q_kernel(n)?;
    let km = RatMatrix::from_rows(ker, q.rows())?;
    let out = &(&km * &exterior_power(g, n - 1)) * &q;
    if out.is_zero() {
        Ok(Ok(()))
    } else {
        Ok(Err(Witness::new(
            "ker Q ∧g Q = 0",
            format!("n={n}"),
            "nonzero",
            0,
        )))
    }
}

/// Indicator of `w_2 ∧ w_4 ∧ … ∧ w_{2n-2}` in the `w`-basis.
pub fn even_wedge_w(n: usize) -> Vec<Rational> {
    let idx = SubsetIndex::new(2 * n - 2, n - 1);
    let evens: Vec<usize> = (1..n).map(|k| 2 * k).collect();
    let r = idx.rank(&evens).expect("valid subset");
    (0..idx.len())
        .map(|p| {
            if p == r {
                crate::exactla::one()
            } else {
                zero()
            }
        })
        .collect()
}
