//! The closed family of maps commuting with the exchange involution:
//!
//! ```text
//! f(X) = aX + bY + sum_j c_j (X - Y)^(2j)
//! f(Y) = aY + bX + sum_j c_j (X - Y)^(2j)
//! ```
//!
//! with `a^2 - b^2 = 1` for endomorphisms and `-1` for anti-endomorphisms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::AlgebraMap;
use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::scalar::Scalar;
use crate::weyl::{Kind, WeylPoly};

/// Parameters `(a, b, c_0..c_n)` of a family member; `c[j]` multiplies `(X - Y)^(2j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Vec<Scalar>,
    pub kind: Kind,
}

fn even_part(c: &[Scalar]) -> WeylPoly {
    let d2 = {
        let d = &WeylPoly::x() - &WeylPoly::y();
        &d * &d
    };
    let mut acc = WeylPoly::zero();
    let mut power = WeylPoly::one();
    for cj in c {
        acc = &acc + &power.scale(cj);
        power = &power * &d2;
    }
    acc
}

/// Builds the family member, checking `a^2 - b^2` against the variant and
/// validating the relation and α-commutation of the result.
pub fn alpha_family(a: &Scalar, b: &Scalar, c: &[Scalar], variant: Kind) -> Result<AlgebraMap> {
    let expected = match variant {
        Kind::Homo => 1,
        Kind::Anti => -1,
    };
    let q = &(a * a) - &(b * b);
    if q != Scalar::from_int(expected) {
        return Err(Error::ConstraintViolated {
            found: q.to_string(),
            expected,
        });
    }
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    let s = even_part(c);
    let fx = &(&x.scale(a) + &y.scale(b)) + &s;
    let fy = &(&y.scale(a) + &x.scale(b)) + &s;
    let f = AlgebraMap::new(fx, fy, variant)?;
    debug_assert!(f.commutes_with_alpha());
    Ok(f)
}

/// Recovers family parameters from a map by an exact linear solve in the
/// monomial basis.
pub fn match_family(f: &AlgebraMap) -> Result<FamilyParams> {
    let deg = f
        .img_x()
        .degree()
        .unwrap_or(0)
        .max(f.img_y().degree().unwrap_or(0));
    let n = (deg / 2) as usize;
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    let d2 = {
        let d = &x - &y;
        &d * &d
    };
    let mut evens = vec![WeylPoly::one()];
    for j in 1..=n {
        let next = &evens[j - 1] * &d2;
        evens.push(next);
    }
    // unknowns: a, b, c_0..c_n
    let ncols = 2 + evens.len();
    let columns_x: Vec<&WeylPoly> = [&x, &y].into_iter().chain(evens.iter()).collect();
    let columns_y: Vec<&WeylPoly> = [&y, &x].into_iter().chain(evens.iter()).collect();

    let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut row_for = |key: (usize, Monomial), rows: &mut Vec<Vec<Scalar>>, rhs: &mut Vec<Scalar>| {
        *index.entry(key).or_insert_with(|| {
            rows.push(vec![Scalar::zero(); ncols]);
            rhs.push(Scalar::zero());
            rows.len() - 1
        })
    };
    for (side, (cols, target)) in [(&columns_x, f.img_x()), (&columns_y, f.img_y())]
        .into_iter()
        .enumerate()
    {
        for (col, poly) in cols.iter().enumerate() {
            for (m, c) in poly.terms() {
                let r = row_for((side, *m), &mut rows, &mut rhs);
                rows[r][col] = c.clone();
            }
        }
        for (m, c) in target.terms() {
            let r = row_for((side, *m), &mut rows, &mut rhs);
            rhs[r] = c.clone();
        }
    }
    let Some(sol) = linalg::solve(rows, rhs, ncols) else {
        return Err(Error::NotFamilyForm(format!(
            "no (a, b, c) reproduces images ({}, {})",
            f.img_x(),
            f.img_y()
        )));
    };
    let mut v = sol.values.into_iter();
    let a = v.next().expect("a");
    let b = v.next().expect("b");
    let mut c: Vec<Scalar> = v.collect();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    let q = &(&a * &a) - &(&b * &b);
    let expected = match f.kind() {
        Kind::Homo => 1,
        Kind::Anti => -1,
    };
    if q != Scalar::from_int(expected) {
        return Err(Error::NotFamilyForm(format!(
            "template matches but a^2 - b^2 = {q} for a {} map",
            f.kind()
        )));
    }
    Ok(FamilyParams {
        a,
        b,
        c,
        kind: f.kind(),
    })
}

/// Closed-form inverse. With `s = a^2 - b^2`, the inverse is the family
/// member `(s a, -s b, c')` where `c'_j = -s (a - b) (a + b)^(2j) c_j`,
/// obtained from `f(X - Y) = (a - b)(X - Y)`.
pub fn alpha_family_invert(f: &AlgebraMap) -> Result<AlgebraMap> {
    let FamilyParams { a, b, c, kind } = match_family(f)?;
    let s = match kind {
        Kind::Homo => Scalar::one(),
        Kind::Anti => Scalar::from_int(-1),
    };
    let diff = &a - &b;
    let sum2 = {
        let t = &a + &b;
        &t * &t
    };
    let mut factor = -(&s * &diff);
    let mut c_inv = Vec::with_capacity(c.len());
    for cj in &c {
        c_inv.push(&factor * cj);
        factor = &factor * &sum2;
    }
    alpha_family(&(&s * &a), &-(&s * &b), &c_inv, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn identity_and_alpha_members() {
        assert!(alpha_family(&q(1, 1), &q(0, 1), &[], Kind::Homo).unwrap().is_identity());
        assert_eq!(
            alpha_family(&q(0, 1), &q(1, 1), &[], Kind::Anti).unwrap(),
            AlgebraMap::alpha()
        );
    }

    #[test]
    fn wrong_constraint_rejected() {
        let r = alpha_family(&q(1, 1), &q(1, 1), &[], Kind::Homo);
        assert!(matches!(r, Err(Error::ConstraintViolated { .. })));
        let r = alpha_family(&q(1, 1), &q(0, 1), &[], Kind::Anti);
        assert!(matches!(r, Err(Error::ConstraintViolated { .. })));
    }

    #[test]
    fn five_quarters_member() {
        let f = alpha_family(&q(5, 4), &q(3, 4), &[q(0, 1), q(1, 1)], Kind::Homo).unwrap();
        assert!(f.commutes_with_alpha());
        let params = match_family(&f).unwrap();
        assert_eq!(params.a, q(5, 4));
        assert_eq!(params.c, vec![q(0, 1), q(1, 1)]);
        let g = alpha_family_invert(&f).unwrap();
        assert!(g.compose(&f).is_identity());
        assert!(f.compose(&g).is_identity());
    }

    #[test]
    fn inverse_of_identity_and_alpha() {
        assert!(alpha_family_invert(&AlgebraMap::identity()).unwrap().is_identity());
        assert_eq!(alpha_family_invert(&AlgebraMap::alpha()).unwrap(), AlgebraMap::alpha());
    }

    #[test]
    fn anti_member_inverse() {
        // a^2 - b^2 = -1 with a = 3/4, b = 5/4
        let f = alpha_family(&q(3, 4), &q(5, 4), &[q(2, 1), q(0, 1), q(-1, 3)], Kind::Anti).unwrap();
        let g = alpha_family_invert(&f).unwrap();
        assert!(g.compose(&f).is_identity());
    }

    #[test]
    fn non_member_reported() {
        let f = AlgebraMap::new(WeylPoly::x(), &WeylPoly::y() + &WeylPoly::x().pow(2), Kind::Homo).unwrap();
        assert!(matches!(match_family(&f), Err(Error::NotFamilyForm(_))));
    }
}
