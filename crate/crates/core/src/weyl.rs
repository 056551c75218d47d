//! The first Weyl algebra `A1 = K<X, Y | YX - XY = 1>` in normal order.
//!
//! An element is stored as a sparse map `X^i Y^j -> c` with every X to the
//! left of every Y. Products are normal-ordered with the closed formula
//!
//! ```text
//! Y^m X^n = sum_k k! C(m,k) C(n,k) X^(n-k) Y^(m-k)
//! ```
//!
//! applied to the middle of each cross product `X^a Y^b . X^c Y^d`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{add_term, add_terms, mul_terms, write_terms, Monomial, Terms};
use crate::scalar::Scalar;

/// Whether a map respects (`Homo`) or reverses (`Anti`) the order of products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Homo,
    Anti,
}

impl Kind {
    /// Kind of a composite: two reversals cancel.
    pub fn compose(self, other: Kind) -> Kind {
        if self == other {
            Kind::Homo
        } else {
            Kind::Anti
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Homo => "homo",
            Kind::Anti => "anti",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Kind, String> {
        match s {
            "homo" => Ok(Kind::Homo),
            "anti" => Ok(Kind::Anti),
            _ => Err(format!("unknown kind `{s}` (expected homo or anti)")),
        }
    }
}

/// A normal-ordered element of the first Weyl algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylPoly {
    terms: Terms,
}

impl WeylPoly {
    pub fn zero() -> Self {
        WeylPoly::default()
    }

    pub fn one() -> Self {
        WeylPoly::constant(Scalar::one())
    }

    pub fn x() -> Self {
        WeylPoly::monomial(1, 0, Scalar::one())
    }

    pub fn y() -> Self {
        WeylPoly::monomial(0, 1, Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        WeylPoly::monomial(0, 0, c)
    }

    /// `c * X^i Y^j`.
    pub fn monomial(i: u32, j: u32, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::new(i, j), c);
        WeylPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut terms = Terms::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        WeylPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_default()
    }

    /// The constant term if the element is a scalar.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Bernstein degree: the largest `i + j` among stored terms, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// X-degree and Y-degree maxima over stored terms.
    pub fn partial_degrees(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), m| (a.max(m.x), b.max(m.y)))
    }

    /// Sum of the terms of maximal total degree.
    pub fn leading_form(&self) -> Result<WeylPoly> {
        let d = self.degree().ok_or(Error::ZeroElement)?;
        Ok(WeylPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// Graded-lex largest term.
    pub fn leading_term(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &Scalar) -> WeylPoly {
        if c.is_zero() {
            return WeylPoly::zero();
        }
        WeylPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> WeylPoly {
        let mut acc = WeylPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &WeylPoly) -> WeylPoly {
        &(self * other) - &(other * self)
    }

    /// Replaces `X -> img_x`, `Y -> img_y`. `Homo` sends `X^i Y^j` to
    /// `img_x^i img_y^j`; `Anti` sends it to `img_y^j img_x^i`.
    pub fn substitute(&self, img_x: &WeylPoly, img_y: &WeylPoly, kind: Kind) -> WeylPoly {
        let (max_x, max_y) = self.partial_degrees();
        let yp = powers(img_y, max_y);
        // rows[i] = sum_j c_ij img_y^j, then Horner in img_x.
        let mut rows: Vec<Terms> = vec![Terms::new(); max_x as usize + 1];
        for (m, c) in &self.terms {
            add_terms(&mut rows[m.x as usize], &yp[m.y as usize].terms, Some(c));
        }
        let mut acc = WeylPoly::zero();
        for row in rows.into_iter().rev() {
            let prod = match kind {
                Kind::Homo => img_x * &acc,
                Kind::Anti => &acc * img_x,
            };
            let mut terms = prod.terms;
            add_terms(&mut terms, &row, None);
            acc = WeylPoly { terms };
        }
        acc
    }

    pub fn display_with<'a>(&'a self, x: &'a str, y: &'a str) -> impl fmt::Display + 'a {
        Named {
            poly: self,
            names: (x, y),
        }
    }
}

fn powers(p: &WeylPoly, n: u32) -> Vec<WeylPoly> {
    let mut v = Vec::with_capacity(n as usize + 1);
    v.push(WeylPoly::one());
    for k in 1..=n as usize {
        let next = &v[k - 1] * p;
        v.push(next);
    }
    v
}

/// Coefficients `k! C(m,k) C(n,k)` for `k = 0..=min(m, n)`.
fn reorder_ints(m: u32, n: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m.min(n) as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=m.min(n) {
        out.push(c.clone());
        let (mk, nk) = (BigInt::from(m - k), BigInt::from(n - k));
        c = c * mk * nk / BigInt::from(k + 1);
    }
    out
}

/// Normal form of `Y^m X^n`.
pub fn reorder(m: u32, n: u32) -> WeylPoly {
    WeylPoly::from_terms(
        reorder_ints(m, n).into_iter().enumerate().map(|(k, c)| {
            let c = Scalar::from_rational(BigRational::from_integer(c));
            (Monomial::new(n - k as u32, m - k as u32), c)
        }),
    )
}

impl<'a> Mul<&'a WeylPoly> for &'a WeylPoly {
    type Output = WeylPoly;

    fn mul(self, rhs: &WeylPoly) -> WeylPoly {
        let mut cache: HashMap<(u32, u32), Vec<BigInt>> = HashMap::new();
        let terms = mul_terms(&self.terms, &rhs.terms, |a, b, emit| {
            emit(Monomial::new(a.x + b.x, a.y + b.y), None);
            if a.y == 0 || b.x == 0 {
                return;
            }
            let ks = cache
                .entry((a.y, b.x))
                .or_insert_with(|| reorder_ints(a.y, b.x));
            for (k, kc) in ks.iter().enumerate().skip(1) {
                let k = k as u32;
                emit(Monomial::new(a.x + b.x - k, a.y + b.y - k), Some(kc));
            }
        });
        WeylPoly { terms }
    }
}

impl<'a> Add<&'a WeylPoly> for &'a WeylPoly {
    type Output = WeylPoly;
    fn add(self, rhs: &WeylPoly) -> WeylPoly {
        let mut terms = self.terms.clone();
        add_terms(&mut terms, &rhs.terms, None);
        WeylPoly { terms }
    }
}

impl<'a> Sub<&'a WeylPoly> for &'a WeylPoly {
    type Output = WeylPoly;
    fn sub(self, rhs: &WeylPoly) -> WeylPoly {
        let mut terms = self.terms.clone();
        add_terms(&mut terms, &rhs.terms, Some(&Scalar::from_int(-1)));
        WeylPoly { terms }
    }
}

impl Neg for &WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        WeylPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<WeylPoly> for WeylPoly {
            type Output = WeylPoly;
            fn $m(self, rhs: WeylPoly) -> WeylPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a WeylPoly> for WeylPoly {
            type Output = WeylPoly;
            fn $m(self, rhs: &WeylPoly) -> WeylPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<WeylPoly> for &'a WeylPoly {
            type Output = WeylPoly;
            fn $m(self, rhs: WeylPoly) -> WeylPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<Scalar> for WeylPoly {
    fn from(c: Scalar) -> Self {
        WeylPoly::constant(c)
    }
}

struct Named<'a> {
    poly: &'a WeylPoly,
    names: (&'a str, &'a str),
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.poly.terms, self.names)
    }
}

impl fmt::Display for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, ("X", "Y"))
    }
}

impl fmt::Debug for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylPoly({self})")
    }
}

impl FromStr for WeylPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<WeylPoly> {
        crate::parse::parse_weyl(s)
    }
}

impl Serialize for WeylPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeylPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> WeylPoly {
        WeylPoly::x()
    }
    fn y() -> WeylPoly {
        WeylPoly::y()
    }

    #[test]
    fn yx_is_xy_plus_one() {
        assert_eq!(&y() * &x(), &(&x() * &y()) + &WeylPoly::one());
        assert_eq!((&x() * &y()).to_string(), "X*Y");
    }

    #[test]
    fn reorder_small_cases() {
        assert_eq!(reorder(1, 1).to_string(), "X*Y + 1");
        assert_eq!(reorder(0, 5), x().pow(5));
        assert_eq!(reorder(2, 2).to_string(), "X^2*Y^2 + 4*X*Y + 2");
        assert_eq!(&y().pow(2) * &x().pow(2), reorder(2, 2));
    }

    #[test]
    fn commutators() {
        assert_eq!(y().commutator(&x()), WeylPoly::one());
        let u = &x() + &(&y() * &x());
        assert!(u.commutator(&u).is_zero());
        assert_eq!(y().pow(2).commutator(&x()), y().scale(&Scalar::from_int(2)));
    }

    #[test]
    fn substitution_examples() {
        let xy = &x() * &y();
        let img_y = &y() + &x().pow(2);
        assert_eq!(
            xy.substitute(&x(), &img_y, Kind::Homo),
            &xy + &x().pow(3)
        );
        let x2y = &x().pow(2) * &y();
        assert_eq!(
            x2y.substitute(&y(), &x(), Kind::Anti),
            &x() * &y().pow(2)
        );
        let rel = &(&y() * &x()) - &(&x() * &y());
        assert_eq!(rel.substitute(&x(), &img_y, Kind::Homo), WeylPoly::one());
    }

    #[test]
    fn degrees_and_leading_form() {
        assert_eq!(reorder(1, 1).degree(), Some(2));
        assert_eq!(WeylPoly::one().degree(), Some(0));
        assert_eq!(WeylPoly::zero().degree(), None);
        assert_eq!(
            reorder(2, 2).leading_form().unwrap(),
            &x().pow(2) * &y().pow(2)
        );
        assert_eq!(WeylPoly::zero().leading_form(), Err(Error::ZeroElement));
    }

    #[test]
    fn canonical_text() {
        let p = &(&x() - &y()) * &(&x() - &y());
        assert_eq!(p.to_string(), "X^2 - 2*X*Y + Y^2 - 1");
        let q = &x().scale(&Scalar::sqrt2()) + &WeylPoly::constant(&Scalar::one() + &Scalar::sqrt2());
        assert_eq!(q.to_string(), "sqrt2*X + (1 + sqrt2)");
        assert_eq!(WeylPoly::zero().to_string(), "0");
    }
}
