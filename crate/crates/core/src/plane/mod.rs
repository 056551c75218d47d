//! The commutative plane K[x, y]: polynomials, polynomial maps, Jacobians,
//! tame factorization and classification of involutions.

mod factor;
mod involution;

pub use factor::{jvdk_factor, recompose, FactorLetter, FactorWord};
pub use involution::{alpha_jc_check, involution_classify, is_plane_involution, Classification};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{add_term, add_terms, mul_terms, write_terms, Monomial, Terms};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;

/// A polynomial `sum c_ij x^i y^j` in commuting variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CommPoly {
    terms: Terms,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly::default()
    }

    pub fn one() -> Self {
        CommPoly::constant(Scalar::one())
    }

    pub fn x() -> Self {
        CommPoly::monomial(1, 0, Scalar::one())
    }

    pub fn y() -> Self {
        CommPoly::monomial(0, 1, Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        CommPoly::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::new(i, j), c);
        CommPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut terms = Terms::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        CommPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

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

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The homogeneous component of top degree.
    pub fn leading_form(&self) -> Result<CommPoly> {
        let d = self.degree().ok_or(Error::ZeroElement)?;
        Ok(CommPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &Scalar) -> CommPoly {
        if c.is_zero() {
            return CommPoly::zero();
        }
        CommPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CommPoly {
        let mut acc = CommPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative_x(&self) -> CommPoly {
        CommPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Monomial::new(m.x - 1, m.y), c * &Scalar::from_int(m.x as i64))),
        )
    }

    pub fn derivative_y(&self) -> CommPoly {
        CommPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (Monomial::new(m.x, m.y - 1), c * &Scalar::from_int(m.y as i64))),
        )
    }

    /// `self(p, q)`.
    pub fn substitute(&self, p: &CommPoly, q: &CommPoly) -> CommPoly {
        let (mx, my) = self
            .terms
            .keys()
            .fold((0, 0), |(a, b), m| (a.max(m.x), b.max(m.y)));
        // Horner in p over rows that are polynomials in q.
        let qp = powers(q, my);
        let mut rows: Vec<Terms> = vec![Terms::new(); mx as usize + 1];
        for (m, c) in &self.terms {
            add_terms(&mut rows[m.x as usize], &qp[m.y as usize].terms, Some(c));
        }
        let mut acc = CommPoly::zero();
        for row in rows.into_iter().rev() {
            let mut terms = (p * &acc).terms;
            add_terms(&mut terms, &row, None);
            acc = CommPoly { terms };
        }
        acc
    }

    /// Reads a polynomial in `x` alone as a one-variable polynomial.
    /// Terms involving `y` are ignored.
    pub fn to_univariate_in_x(&self) -> UniPoly {
        let n = self.terms.keys().map(|m| m.x).max().map_or(0, |d| d as usize + 1);
        let mut v = vec![Scalar::zero(); n];
        for (m, c) in &self.terms {
            if m.y == 0 {
                v[m.x as usize] = c.clone();
            }
        }
        UniPoly::new(v)
    }

    /// `Some(p)` when `self = p(y)`.
    pub fn as_univariate_in_y(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|m| m.x > 0) {
            return None;
        }
        let n = self.terms.keys().map(|m| m.y).max().map_or(0, |d| d as usize + 1);
        let mut v = vec![Scalar::zero(); n];
        for (m, c) in &self.terms {
            v[m.y as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }
}

fn powers(p: &CommPoly, n: u32) -> Vec<CommPoly> {
    let mut v = Vec::with_capacity(n as usize + 1);
    v.push(CommPoly::one());
    for k in 1..=n as usize {
        let next = &v[k - 1] * p;
        v.push(next);
    }
    v
}

impl<'a> Mul<&'a CommPoly> for &'a CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        let terms = mul_terms(&self.terms, &rhs.terms, |a, b, emit| {
            emit(Monomial::new(a.x + b.x, a.y + b.y), None)
        });
        CommPoly { terms }
    }
}

impl<'a> Add<&'a CommPoly> for &'a CommPoly {
    type Output = CommPoly;
    fn add(self, rhs: &CommPoly) -> CommPoly {
        let mut terms = self.terms.clone();
        add_terms(&mut terms, &rhs.terms, None);
        CommPoly { terms }
    }
}

impl<'a> Sub<&'a CommPoly> for &'a CommPoly {
    type Output = CommPoly;
    fn sub(self, rhs: &CommPoly) -> CommPoly {
        let mut terms = self.terms.clone();
        add_terms(&mut terms, &rhs.terms, Some(&Scalar::from_int(-1)));
        CommPoly { terms }
    }
}

impl Neg for &CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        CommPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for CommPoly {
    type Output = CommPoly;
    fn neg(self) -> CommPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<CommPoly> for CommPoly {
            type Output = CommPoly;
            fn $m(self, rhs: CommPoly) -> CommPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a CommPoly> for CommPoly {
            type Output = CommPoly;
            fn $m(self, rhs: &CommPoly) -> CommPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<CommPoly> for &'a CommPoly {
            type Output = CommPoly;
            fn $m(self, rhs: CommPoly) -> CommPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, ("x", "y"))
    }
}

impl fmt::Debug for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommPoly({self})")
    }
}

impl FromStr for CommPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<CommPoly> {
        crate::parse::parse_comm(s)
    }
}

impl Serialize for CommPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CommPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A polynomial map of the plane, given by the images of x and y.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneMap {
    pub imgx: CommPoly,
    pub imgy: CommPoly,
}

impl PlaneMap {
    pub fn new(imgx: CommPoly, imgy: CommPoly) -> Self {
        PlaneMap { imgx, imgy }
    }

    pub fn identity() -> Self {
        PlaneMap::new(CommPoly::x(), CommPoly::y())
    }

    /// `x <-> y`.
    pub fn swap() -> Self {
        PlaneMap::new(CommPoly::y(), CommPoly::x())
    }

    pub fn apply(&self, u: &CommPoly) -> CommPoly {
        u.substitute(&self.imgx, &self.imgy)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PlaneMap) -> PlaneMap {
        PlaneMap::new(self.apply(&other.imgx), self.apply(&other.imgy))
    }

    pub fn is_identity(&self) -> bool {
        self.imgx == CommPoly::x() && self.imgy == CommPoly::y()
    }

    pub fn degree(&self) -> u32 {
        self.imgx
            .degree()
            .unwrap_or(0)
            .max(self.imgy.degree().unwrap_or(0))
    }
}

impl fmt::Display for PlaneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.imgx, self.imgy)
    }
}

pub fn jacobian(f: &PlaneMap) -> CommPoly {
    &(&f.imgx.derivative_x() * &f.imgy.derivative_y())
        - &(&f.imgx.derivative_y() * &f.imgy.derivative_x())
}
