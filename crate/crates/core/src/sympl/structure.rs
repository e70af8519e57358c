//! Fixed matrices attached to `n`. All indices in comments are 1-based.

use crate::exactla::{int, one, sign_pow, zero, RatMatrix};

/// `B_n`, `(2n-2) × 2n`, rows `w_i = e_i + e_{i+2}`: a basis of `V`.
pub fn b_matrix(n: usize) -> RatMatrix {
    RatMatrix::from_fn(2 * n - 2, 2 * n, |i, j| {
        if j == i || j == i + 2 {
            one()
        } else {
            zero()
        }
    })
}

/// Right inverse of `B_n`, `2n × (2n-2)`: entry `(i, j)` is
/// `(-1)^((j-i)/2)` when `i ≤ j` have equal parity.
pub fn b_inverse(n: usize) -> RatMatrix {
    RatMatrix::from_fn(2 * n, 2 * n - 2, |i, j| {
        if i <= j && (j - i) % 2 == 0 {
            sign_pow(((j - i) / 2) as i64)
        } else {
            zero()
        }
    })
}

/// `Λ_{2n-2}`: `Λ[i, i+1] = (-1)^(i+1)`, antisymmetric.
pub fn lambda(n: usize) -> RatMatrix {
    let m = 2 * n - 2;
    RatMatrix::from_fn(m, m, |i, j| {
        // 0-based i is 1-based i+1, so (-1)^(i+1+1)
        if j == i + 1 {
            sign_pow(i as i64)
        } else if i == j + 1 {
            -sign_pow(j as i64)
        } else {
            zero()
        }
    })
}

/// `λ_{2n} = [[0, g], [-gᵀ, 0]]` with `g` lower triangular of ones.
pub fn lambda_2n(n: usize) -> RatMatrix {
    RatMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j >= n {
            if i >= j - n {
                one()
            } else {
                zero()
            }
        } else if i >= n && j < n {
            if j >= i - n {
                int(-1)
            } else {
                zero()
            }
        } else {
            zero()
        }
    })
}

/// `D_n = diag((-1)^(i+1))`.
pub fn d_matrix(n: usize) -> RatMatrix {
    RatMatrix::from_fn(
        n,
        n,
        |i, j| if i == j { sign_pow(i as i64) } else { zero() },
    )
}

/// Signed permutation `T̄_{2n}`: `(2j-1, n+j)` and `(2j, j)` carry `(-1)^(j+1)`.
pub fn t_bar(n: usize) -> RatMatrix {
    let mut t = RatMatrix::zeros(2 * n, 2 * n);
    for j in 1..=n {
        let s = sign_pow(j as i64 + 1);
        t[(2 * j - 2, n + j - 1)] = s.clone();
        t[(2 * j - 1, j - 1)] = s;
    }
    t
}

/// `S_n`: ones on the diagonal, `-1` below it and `-1` in the corner `(1, n)`.
pub fn s_matrix(n: usize) -> RatMatrix {
    let mut s = RatMatrix::identity(n);
    for i in 1..n {
        s[(i, i - 1)] = int(-1);
    }
    s[(0, n - 1)] = int(-1);
    s
}
