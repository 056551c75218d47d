//! Tame factorization of plane automorphisms into affine and elementary
//! triangular letters by leading-form peeling.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{jacobian, CommPoly, PlaneMap};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "letter", rename_all = "lowercase")]
pub enum FactorLetter {
    /// `x -> a x + b y + e`, `y -> c x + d y + f` with `ad - bc != 0`.
    Affine {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
        e: Scalar,
        f: Scalar,
    },
    /// `x -> x + p(y)`, `y -> y`.
    Triangular { p: UniPoly },
}

impl FactorLetter {
    pub fn linear(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        FactorLetter::Affine {
            a,
            b,
            c,
            d,
            e: Scalar::zero(),
            f: Scalar::zero(),
        }
    }

    pub fn swap() -> Self {
        FactorLetter::linear(Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero())
    }

    /// `x -> (x + y)/2`, `y -> y - x`.
    pub fn phi() -> Self {
        FactorLetter::linear(
            Scalar::ratio(1, 2),
            Scalar::ratio(1, 2),
            Scalar::from_int(-1),
            Scalar::one(),
        )
    }

    /// The (constant) Jacobian determinant of the letter.
    pub fn jacobian(&self) -> Scalar {
        match self {
            FactorLetter::Affine { a, b, c, d, .. } => &(a * d) - &(b * c),
            FactorLetter::Triangular { .. } => Scalar::one(),
        }
    }

    pub fn to_map(&self) -> PlaneMap {
        let (x, y) = (CommPoly::x(), CommPoly::y());
        match self {
            FactorLetter::Affine { a, b, c, d, e, f } => PlaneMap::new(
                &(&x.scale(a) + &y.scale(b)) + &CommPoly::constant(e.clone()),
                &(&x.scale(c) + &y.scale(d)) + &CommPoly::constant(f.clone()),
            ),
            FactorLetter::Triangular { p } => PlaneMap::new(&x + &p.eval_comm(&y), y),
        }
    }

    pub fn inverse(&self) -> Result<FactorLetter> {
        match self {
            FactorLetter::Affine { a, b, c, d, e, f } => {
                let det = &(a * d) - &(b * c);
                let inv = det.inv().map_err(|_| {
                    Error::NotInvertible("affine letter has zero determinant".into())
                })?;
                let (ia, ib, ic, id) = (d * &inv, -(b * &inv), -(c * &inv), a * &inv);
                let ie = -(&(&ia * e) + &(&ib * f));
                let iff = -(&(&ic * e) + &(&id * f));
                Ok(FactorLetter::Affine {
                    a: ia,
                    b: ib,
                    c: ic,
                    d: id,
                    e: ie,
                    f: iff,
                })
            }
            FactorLetter::Triangular { p } => Ok(FactorLetter::Triangular { p: -p }),
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            FactorLetter::Affine { a, b, c, d, e, f } => {
                a.is_one() && b.is_zero() && c.is_zero() && d.is_one() && e.is_zero() && f.is_zero()
            }
            FactorLetter::Triangular { p } => p.is_zero(),
        }
    }

    /// Rewrites a triangular letter of degree at most one as an affine letter.
    fn normalized(self) -> FactorLetter {
        match self {
            FactorLetter::Triangular { p } if p.degree().unwrap_or(0) <= 1 => FactorLetter::Affine {
                a: Scalar::one(),
                b: p.coeff(1),
                c: Scalar::zero(),
                d: Scalar::one(),
                e: p.coeff(0),
                f: Scalar::zero(),
            },
            other => other,
        }
    }
}

/// Reads an affine letter off a map whose images have degree at most one.
fn affine_from_map(g: &PlaneMap) -> FactorLetter {
    let (p, q) = (&g.imgx, &g.imgy);
    FactorLetter::Affine {
        a: p.coeff(1, 0),
        b: p.coeff(0, 1),
        c: q.coeff(1, 0),
        d: q.coeff(0, 1),
        e: p.coeff(0, 0),
        f: q.coeff(0, 0),
    }
}

fn merge(left: &FactorLetter, right: &FactorLetter) -> Option<FactorLetter> {
    match (left, right) {
        (FactorLetter::Affine { .. }, FactorLetter::Affine { .. }) => {
            Some(affine_from_map(&left.to_map().compose(&right.to_map())))
        }
        (FactorLetter::Triangular { p }, FactorLetter::Triangular { p: q }) => {
            Some(FactorLetter::Triangular { p: p + q }.normalized())
        }
        _ => None,
    }
}

/// A product `l1 ∘ l2 ∘ ... ∘ ln` of affine and triangular letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FactorWord {
    pub letters: Vec<FactorLetter>,
}

impl FactorWord {
    pub fn empty() -> Self {
        FactorWord::default()
    }

    pub fn new(letters: Vec<FactorLetter>) -> Self {
        FactorWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The Jacobian of the recomposed map, by the chain rule.
    pub fn jacobian(&self) -> Scalar {
        self.letters
            .iter()
            .fold(Scalar::one(), |acc, l| &acc * &l.jacobian())
    }

    pub fn concat(&self, other: &FactorWord) -> FactorWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        FactorWord { letters }
    }

    pub fn inverse(&self) -> Result<FactorWord> {
        Ok(FactorWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(FactorLetter::inverse)
                .collect::<Result<_>>()?,
        })
    }

    /// Merges neighbouring letters of the same type, folds low-degree
    /// triangular letters into affine ones and drops identities.
    pub fn simplified(&self) -> FactorWord {
        let mut out: Vec<FactorLetter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let mut cur = l.clone().normalized();
            while let Some(prev) = out.last() {
                match merge(prev, &cur) {
                    Some(m) => {
                        out.pop();
                        cur = m;
                    }
                    None => break,
                }
            }
            if !cur.is_identity() {
                out.push(cur);
            }
        }
        FactorWord { letters: out }
    }
}

pub fn recompose(w: &FactorWord) -> PlaneMap {
    w.letters
        .iter()
        .fold(PlaneMap::identity(), |acc, l| acc.compose(&l.to_map()))
}

impl fmt::Display for FactorLetter {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorLetter::Affine { a, b, c, d, e, f } => {
                write!(fm, "aff({a}, {b}, {c}, {d}; {e}, {f})")
            }
            FactorLetter::Triangular { p } => write!(fm, "tri({p})"),
        }
    }
}

impl fmt::Display for FactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn top_text(p: &CommPoly) -> String {
    p.leading_form().map_or_else(|_| "0".to_string(), |l| l.to_string())
}

/// Factors an automorphism by peeling degree from the right.
///
/// Each step either swaps the images (when `deg q > deg p`) or subtracts
/// `c q^k` from `p` when the top form of `p` is `c` times the `k`-th power
/// of the top form of `q`. The remaining affine map is the first letter.
pub fn jvdk_factor(f: &PlaneMap) -> Result<FactorWord> {
    // A complete peel ending in an invertible affine map proves `f` is an
    // automorphism, so the Jacobian is only needed to explain a failure.
    let stuck = match peel(f) {
        Ok(w) => {
            debug_assert_eq!(recompose(&w), *f);
            return Ok(w);
        }
        Err(g) => g,
    };
    let jac = jacobian(f);
    if !jac.as_constant().is_some_and(|c| !c.is_zero()) {
        return Err(Error::JacobianNotConstant {
            jacobian: jac.to_string(),
        });
    }
    Err(Error::PeelingStuck {
        top_p: top_text(&stuck.imgx),
        top_q: top_text(&stuck.imgy),
    })
}

/// The factor word of `f`, or the map left when peeling stops.
fn peel(f: &PlaneMap) -> std::result::Result<FactorWord, PlaneMap> {
    let mut g = f.clone();
    let mut peeled: Vec<FactorLetter> = Vec::new();
    // Powers of the current second image, reset on every swap.
    let mut qpow: Vec<CommPoly> = vec![CommPoly::one()];
    loop {
        let dp = g.imgx.degree().unwrap_or(0);
        let dq = g.imgy.degree().unwrap_or(0);
        if dp <= 1 && dq <= 1 {
            break;
        }
        if dq > dp {
            g = PlaneMap::new(g.imgy, g.imgx);
            qpow.truncate(1);
            peeled.push(FactorLetter::swap());
            continue;
        }
        if dq == 0 || !dp.is_multiple_of(dq) {
            return Err(g);
        }
        let k = dp / dq;
        while qpow.len() <= k as usize {
            let next = &qpow[qpow.len() - 1] * &g.imgy;
            qpow.push(next);
        }
        let qk = &qpow[k as usize];
        let (Ok(top_p), Ok(top_qk)) = (g.imgx.leading_form(), qk.leading_form()) else {
            return Err(g);
        };
        let (m, cq) = top_qk.leading_term().expect("nonzero");
        let c = &g.imgx.coeff(m.x, m.y) / cq;
        if c.is_zero() || top_p != top_qk.scale(&c) {
            return Err(g);
        }
        g = PlaneMap::new(&g.imgx - &qk.scale(&c), g.imgy);
        peeled.push(FactorLetter::Triangular {
            p: UniPoly::monomial(k as usize, c),
        });
    }
    let last = affine_from_map(&g);
    if jacobian(&g).is_zero() {
        return Err(g);
    }
    let mut letters = vec![last];
    letters.extend(peeled.into_iter().rev());
    Ok(FactorWord { letters }.simplified())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> CommPoly {
        s.parse().unwrap()
    }

    fn map(a: &str, b: &str) -> PlaneMap {
        PlaneMap::new(p(a), p(b))
    }

    #[test]
    fn swap_is_single_affine() {
        let w = jvdk_factor(&PlaneMap::swap()).unwrap();
        assert_eq!(w.letters, vec![FactorLetter::swap()]);
    }

    #[test]
    fn triangular_is_single_letter() {
        let w = jvdk_factor(&map("x + y^2", "y")).unwrap();
        assert_eq!(
            w.letters,
            vec![FactorLetter::Triangular {
                p: "t^2".parse().unwrap()
            }]
        );
    }

    #[test]
    fn non_automorphism_rejected() {
        let r = jvdk_factor(&map("x^2", "y"));
        assert!(matches!(r, Err(Error::JacobianNotConstant { ref jacobian }) if jacobian == "2*x"));
    }

    #[test]
    fn one_peeling_step() {
        let f = map("y", "x + y^2");
        let w = jvdk_factor(&f).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(recompose(&w), f);
    }

    #[test]
    fn deeper_word_round_trips() {
        let f = map("x + (y + x^2)^3", "y + x^2");
        let w = jvdk_factor(&f).unwrap();
        assert_eq!(recompose(&w), f);
        let inv = recompose(&w.inverse().unwrap());
        assert!(inv.compose(&f).is_identity());
    }

    #[test]
    fn affine_inverse() {
        let l = FactorLetter::Affine {
            a: Scalar::from_int(2),
            b: Scalar::one(),
            c: Scalar::one(),
            d: Scalar::one(),
            e: Scalar::from_int(3),
            f: Scalar::ratio(-1, 2),
        };
        let m = l.to_map().compose(&l.inverse().unwrap().to_map());
        assert!(m.is_identity());
    }
}
