//! One-parameter generators of the group acting on `Gr(n-1, 2n)`.

use super::structure::{b_inverse, b_matrix, lambda};
use crate::error::{Error, Result};
use crate::exactla::{one, sign_pow, subspace_contains, RatMatrix, Rational};
use crate::report::{CheckResult, Witness};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tag {
    X(usize, Rational),
    Y(usize, Rational),
    U(usize, Rational),
    Shift,
    Restricted(Box<Tag>),
    Product,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::X(i, t) => write!(f, "x_{i}({t})"),
            Tag::Y(i, t) => write!(f, "y_{i}({t})"),
            Tag::U(i, t) => write!(f, "u_{i}({t})"),
            Tag::Shift => write!(f, "s"),
            Tag::Restricted(t) => write!(f, "{t}|_V"),
            Tag::Product => write!(f, "product"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: RatMatrix,
    pub tag: Tag,
}

impl GroupElement {
    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: &self.matrix * &other.matrix,
            tag: Tag::Product,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    X,
    Y,
    U,
    Shift,
}

/// Cyclic shift of size `m = 2n`: ones on the superdiagonal and `(-1)^n`
/// in the corner `(m, 1)`.
pub fn shift(m: usize) -> RatMatrix {
    let mut s = RatMatrix::zeros(m, m);
    for i in 0..m - 1 {
        s[(i, i + 1)] = one();
    }
    s[(m - 1, 0)] = sign_pow((m / 2) as i64);
    s
}

fn elementary(m: usize, i: usize, j: usize, t: &Rational) -> RatMatrix {
    let mut x = RatMatrix::identity(m);
    x[(i, j)] = t.clone();
    x
}

fn conj_by_shift(m: usize, g: &RatMatrix) -> RatMatrix {
    let s = shift(m);
    let si = s.inverse().expect("shift is invertible");
    &(&s * g) * &si
}

fn x_matrix(m: usize, i: usize, t: &Rational) -> RatMatrix {
    if i < m {
        elementary(m, i - 1, i, t)
    } else {
        conj_by_shift(m, &elementary(m, 0, 1, t))
    }
}

fn y_matrix(m: usize, i: usize, t: &Rational) -> RatMatrix {
    if i < m {
        elementary(m, i, i - 1, t)
    } else {
        conj_by_shift(m, &elementary(m, 1, 0, t))
    }
}

/// `x_i(t)`, `y_i(t)`, `u_i(t) = x_i(t) y_{i-1}(t)` (index `0` read as `m`)
/// or the shift, in `GL(m)` with `m = 2n`.
pub fn generator(kind: Kind, i: usize, t: &Rational, m: usize) -> Result<GroupElement> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "group size {m} must be even and >= 4"
        )));
    }
    if kind != Kind::Shift && !(1..=m).contains(&i) {
        return Err(Error::BadIndex { k: i, n: m });
    }
    let (matrix, tag) = match kind {
        Kind::X => (x_matrix(m, i, t), Tag::X(i, t.clone())),
        Kind::Y => (y_matrix(m, i, t), Tag::Y(i, t.clone())),
        Kind::U => {
            let prev = if i == 1 { m } else { i - 1 };
            (
                &x_matrix(m, i, t) * &y_matrix(m, prev, t),
                Tag::U(i, t.clone()),
            )
        }
        Kind::Shift => (shift(m), Tag::Shift),
    };
    Ok(GroupElement { matrix, tag })
}

pub fn u(i: usize, t: &Rational, m: usize) -> RatMatrix {
    generator(Kind::U, i, t, m).expect("valid generator").matrix
}

/// `B g B^{-1}`, after checking that `V = rowspan(B)` is invariant under `g`.
pub fn restrict_to_v(g: &GroupElement) -> Result<GroupElement> {
    let m = g.m();
    let n = m / 2;
    let b = b_matrix(n);
    let image = &b * &g.matrix;
    let basis = b.row_vectors();
    for (r, row) in image.row_vectors().into_iter().enumerate() {
        if !subspace_contains(&basis, std::slice::from_ref(&row)) {
            return Err(Error::Invariant(format!(
                "V is not invariant under {}: w_{} maps to {:?}",
                g.tag,
                r + 1,
                row.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            )));
        }
    }
    Ok(GroupElement {
        matrix: &image * &b_inverse(n),
        tag: Tag::Restricted(Box::new(g.tag.clone())),
    })
}

/// `M Λ Mᵀ = Λ` with `Λ = Λ_{2n-2}`.
pub fn symplectic_check(g: &GroupElement) -> CheckResult {
    let n = g.m() / 2 + 1;
    let l = lambda(n);
    let lhs = &(&g.matrix * &l) * &g.matrix.transpose();
    if lhs == l {
        Ok(())
    } else {
        let (i, j) = first_difference(&lhs, &l);
        Err(Witness::new(
            format!("M Λ Mᵀ = Λ for {}", g.tag),
            format!("entry ({}, {})", i + 1, j + 1),
            &lhs[(i, j)],
            &l[(i, j)],
        ))
    }
}

pub(crate) fn first_difference(a: &RatMatrix, b: &RatMatrix) -> (usize, usize) {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)] != b[(i, j)] {
                return (i, j);
            }
        }
    }
    (0, 0)
}

fn matrix_eq(identity: &str, where_: String, lhs: &RatMatrix, rhs: &RatMatrix) -> CheckResult {
    if lhs == rhs {
        return Ok(());
    }
    let (i, j) = first_difference(lhs, rhs);
    Err(Witness::new(
        identity,
        format!("{where_}, entry ({}, {})", i + 1, j + 1),
        &lhs[(i, j)],
        &rhs[(i, j)],
    ))
}

fn cyc(i: isize, m: usize) -> usize {
    (i - 1).rem_euclid(m as isize) as usize + 1
}

/// `u_i(a) u_i(b) = u_i(a + b)` for every `i`.
pub fn additivity_check(m: usize, a: &Rational, b: &Rational) -> CheckResult {
    for i in 1..=m {
        let lhs = &u(i, a, m) * &u(i, b, m);
        matrix_eq(
            "u_i(a)u_i(b) = u_i(a+b)",
            format!("i={i} a={a} b={b}"),
            &lhs,
            &u(i, &(a + b), m),
        )?;
    }
    Ok(())
}

/// `u_i(a) u_j(b) = u_j(b) u_i(a)` whenever `i` and `j` are at cyclic
/// distance at least 2.
pub fn commutation_check(m: usize, a: &Rational, b: &Rational) -> CheckResult {
    for i in 1..=m {
        for j in 1..=m {
            let d = i.abs_diff(j);
            if d.min(m - d) < 2 {
                continue;
            }
            let lhs = &u(i, a, m) * &u(j, b, m);
            let rhs = &u(j, b, m) * &u(i, a, m);
            matrix_eq("u_i u_j = u_j u_i", format!("i={i} j={j}"), &lhs, &rhs)?;
        }
    }
    Ok(())
}

/// `u_i(t1) u_j(t2) u_i(t3) = u_j(t2 t3 / s) u_i(s) u_j(t1 t2 / s)` with
/// `s = t1 + t3 + t1 t2 t3` and `j = i ± 1` (cyclically).
pub fn serpent_check(m: usize, t1: &Rational, t2: &Rational, t3: &Rational) -> CheckResult {
    let s = t1 + t3 + t1 * t2 * t3;
    for i in 1..=m {
        for delta in [1isize, -1] {
            let j = cyc(i as isize + delta, m);
            let lhs = &(&u(i, t1, m) * &u(j, t2, m)) * &u(i, t3, m);
            let rhs = &(&u(j, &(t2 * t3 / &s), m) * &u(i, &s, m)) * &u(j, &(t1 * t2 / &s), m);
            matrix_eq(
                "u_i u_j u_i serpent relation",
                format!("i={i} j={j} t=({t1}, {t2}, {t3})"),
                &lhs,
                &rhs,
            )?;
        }
    }
    Ok(())
}

/// All three relation families at one parameter triple.
pub fn relations_check(m: usize, t1: &Rational, t2: &Rational, t3: &Rational) -> CheckResult {
    additivity_check(m, t1, t2)?;
    commutation_check(m, t1, t2)?;
    serpent_check(m, t1, t2, t3)
}

/// Restrictions of `u_1..u_2n` at `t` are symplectic.
pub fn restricted_generators_check(n: usize, t: &Rational) -> Result<CheckResult> {
    let m = 2 * n;
    for i in 1..=m {
        let r = restrict_to_v(&generator(Kind::U, i, t, m)?)?;
        if let Err(w) = symplectic_check(&r) {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

/// The restricted shift `s|_V` is symplectic.
pub fn restricted_shift_check(n: usize) -> Result<CheckResult> {
    let s = restrict_to_v(&generator(Kind::Shift, 0, &one(), 2 * n)?)?;
    Ok(symplectic_check(&s))
}

/// `(s|_V)^2` is symplectic.
pub fn restricted_double_shift_check(n: usize) -> Result<CheckResult> {
    let s = restrict_to_v(&generator(Kind::Shift, 0, &one(), 2 * n)?)?;
    let s2 = GroupElement {
        matrix: &s.matrix * &s.matrix,
        tag: Tag::Restricted(Box::new(Tag::Product)),
    };
    Ok(symplectic_check(&s2))
}

/// `u_2|_V = y_1`, `u_{2n-1}|_V = x_{2n-3}`, and conjugation by `(s|_V)^2`
/// carries `u_3|_V` to `u_1|_V` and `u_2|_V` to `u_{2n}|_V`.
pub fn restriction_identities_check(n: usize, t: &Rational) -> Result<CheckResult> {
    let m = 2 * n;
    let r = |i: usize| -> Result<RatMatrix> {
        Ok(restrict_to_v(&generator(Kind::U, i, t, m)?)?.matrix)
    };
    let small = m - 2;
    let checks = [
        ("u_2|_V = y_1", r(2)?, y_matrix(small, 1, t)),
        (
            "u_{2n-1}|_V = x_{2n-3}",
            r(m - 1)?,
            x_matrix(small, m - 3, t),
        ),
    ];
    for (name, lhs, rhs) in checks {
        if let Err(w) = matrix_eq(name, format!("n={n} t={t}"), &lhs, &rhs) {
            return Ok(Err(w));
        }
    }
    let s = restrict_to_v(&generator(Kind::Shift, 0, &one(), m)?)?.matrix;
    let s2 = &s * &s;
    let s2i = s2.inverse()?;
    let conj = |g: &RatMatrix| &(&s2 * g) * &s2i;
    let checks = [
        ("u_1|_V = s² u_3|_V s⁻²", r(1)?, conj(&r(3)?)),
        ("u_2n|_V = s² u_2|_V s⁻²", r(m)?, conj(&r(2)?)),
    ];
    for (name, lhs, rhs) in checks {
        if let Err(w) = matrix_eq(name, format!("n={n} t={t}"), &lhs, &rhs) {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    #[test]
    fn generator_shapes() {
        let t = int(3);
        let x = generator(Kind::X, 2, &t, 6).unwrap().matrix;
        assert_eq!(x[(1, 2)], t);
        let y = generator(Kind::Y, 2, &t, 6).unwrap().matrix;
        assert_eq!(y[(2, 1)], t);
        assert!(generator(Kind::U, 7, &t, 6).is_err());
        assert!(generator(Kind::U, 1, &t, 5).is_err());
    }

    #[test]
    fn shift_corner_sign() {
        assert_eq!(shift(6)[(5, 0)], int(-1));
        assert_eq!(shift(8)[(7, 0)], int(1));
    }

    #[test]
    fn wraparound_generators_are_conjugates() {
        let m = 6;
        let t = rat(2, 3);
        let s = shift(m);
        let x6 = generator(Kind::X, 6, &t, m).unwrap().matrix;
        assert_eq!(&x6 * &s, &s * &generator(Kind::X, 1, &t, m).unwrap().matrix);
    }

    #[test]
    fn relations_in_small_groups() {
        for m in [6, 8] {
            assert!(relations_check(m, &int(1), &rat(1, 2), &rat(2, 3)).is_ok());
        }
    }

    #[test]
    fn restricted_generators_are_symplectic() {
        for n in 3..=4 {
            assert!(restricted_generators_check(n, &rat(5, 7)).unwrap().is_ok());
            assert!(restriction_identities_check(n, &rat(5, 7)).unwrap().is_ok());
            assert!(restricted_double_shift_check(n).unwrap().is_ok());
        }
    }

    #[test]
    fn restricted_shift_reverses_the_form() {
        for n in 3..=5 {
            let s = restrict_to_v(&generator(Kind::Shift, 0, &one(), 2 * n).unwrap()).unwrap();
            let l = lambda(n);
            assert_eq!(&(&s.matrix * &l) * &s.matrix.transpose(), l.neg());
            assert!(restricted_shift_check(n).unwrap().is_err());
        }
    }

    #[test]
    fn restricted_shift_n3() {
        let s = restrict_to_v(&generator(Kind::Shift, 0, &one(), 6).unwrap()).unwrap();
        assert_eq!(
            s.matrix,
            RatMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 1, 0]])
        );
    }

    #[test]
    fn wrong_corner_breaks_invariance() {
        // corner (-1)^(m-1) = -1 for m = 8
        let mut s = shift(8);
        s[(7, 0)] = int(-1);
        let g = GroupElement {
            matrix: s,
            tag: Tag::Shift,
        };
        assert!(restrict_to_v(&g).is_err());
    }
}
