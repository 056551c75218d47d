//! Exponent pairs shared by the Weyl algebra and the commutative plane, and
//! the sparse term-map helpers both polynomial types are built on.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// The basis element `X^x Y^y` (normal order in the Weyl algebra).
///
/// Ordered graded-lexicographically: total degree first, then the X exponent.
/// Iterating a term map in reverse therefore yields canonical print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Terms = BTreeMap<Monomial, Scalar>;

/// Adds `c * m` into `terms`, dropping the entry if it cancels.
pub(crate) fn add_term(terms: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add_terms(terms: &mut Terms, other: &Terms, scale: Option<&Scalar>) {
    for (m, c) in other {
        let c = match scale {
            Some(s) => c * s,
            None => c.clone(),
        };
        add_term(terms, *m, c);
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial, names: (&str, &str)) -> fmt::Result {
    let mut first = true;
    for (e, name) in [(m.x, names.0), (m.y, names.1)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text: terms in descending graded-lex order, `+`/`-` joined,
/// unit coefficients elided, two-part coefficients parenthesized.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &Terms,
    names: (&str, &str),
) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (idx, (m, c)) in terms.iter().rev().enumerate() {
        let constant = *m == Monomial::ONE;
        if c.is_compound() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if constant && idx == 0 {
                write!(f, "{c}")?;
            } else if constant {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*")?;
                write_monomial(f, *m, names)?;
            }
            continue;
        }
        let neg = c.is_negative_simple();
        let abs = if neg { -c } else { c.clone() };
        match (idx, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if constant {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_monomial(f, *m, names)?;
        }
    }
    Ok(())
}

/// Coefficients over one common denominator: `(a + b*sqrt2) / den`.
struct Cleared {
    den: BigInt,
    surd: bool,
    terms: Vec<(Monomial, BigInt, BigInt)>,
}

fn clear_denominators(terms: &Terms) -> Cleared {
    let mut den = BigInt::one();
    let mut surd = false;
    for c in terms.values() {
        den = den.lcm(c.rat().denom());
        if !c.surd().is_zero() {
            surd = true;
            den = den.lcm(c.surd().denom());
        }
    }
    let scale = |r: &BigRational| r.numer() * (&den / r.denom());
    let terms = terms
        .iter()
        .map(|(m, c)| (*m, scale(c.rat()), scale(c.surd())))
        .collect();
    Cleared { den, surd, terms }
}

/// Multiplies two term maps in integer arithmetic, normalizing each output
/// coefficient once. `expand(a, b, emit)` lists the monomials of `a * b`
/// with integer multipliers (`None` for 1).
pub(crate) fn mul_terms<F>(lhs: &Terms, rhs: &Terms, mut expand: F) -> Terms
where
    F: FnMut(Monomial, Monomial, &mut dyn FnMut(Monomial, Option<&BigInt>)),
{
    let (l, r) = (clear_denominators(lhs), clear_denominators(rhs));
    let surd = l.surd || r.surd;
    let mut acc: HashMap<Monomial, (BigInt, BigInt)> = HashMap::new();
    for (ma, a1, b1) in &l.terms {
        for (mb, a2, b2) in &r.terms {
            let (ra, rb) = if surd {
                (a1 * a2 + ((b1 * b2) << 1), a1 * b2 + b1 * a2)
            } else {
                (a1 * a2, BigInt::zero())
            };
            expand(*ma, *mb, &mut |m, k| {
                let e = acc.entry(m).or_default();
                match k {
                    None => {
                        e.0 += &ra;
                        if surd {
                            e.1 += &rb;
                        }
                    }
                    Some(k) => {
                        e.0 += &ra * k;
                        if surd {
                            e.1 += &rb * k;
                        }
                    }
                }
            });
        }
    }
    let den = &l.den * &r.den;
    acc.into_iter()
        .filter(|(_, (a, b))| !a.is_zero() || !b.is_zero())
        .map(|(m, (a, b))| {
            let c = Scalar::new(BigRational::new(a, den.clone()), BigRational::new(b, den.clone()));
            (m, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let mut v = vec![
            Monomial::new(0, 2),
            Monomial::new(1, 0),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
            Monomial::ONE,
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Monomial::ONE,
                Monomial::new(1, 0),
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0),
            ]
        );
    }

    #[test]
    fn add_term_cancels() {
        let mut t = Terms::new();
        add_term(&mut t, Monomial::new(1, 0), Scalar::from_int(2));
        add_term(&mut t, Monomial::new(1, 0), Scalar::from_int(-2));
        assert!(t.is_empty());
    }
}
