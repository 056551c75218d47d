//! Polynomials in one variable `t`, used for centralizer witnesses `h(t)`
//! and for the bodies of triangular generators.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{write_terms, Monomial, Terms};
use crate::plane::CommPoly;
use crate::scalar::Scalar;
use crate::weyl::WeylPoly;

/// Dense coefficient vector, lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: Scalar) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `h(u)` in the Weyl algebra; powers of one element commute, so order is moot.
    pub fn eval_weyl(&self, u: &WeylPoly) -> WeylPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(WeylPoly::zero(), |acc, c| &(&acc * u) + &WeylPoly::constant(c.clone()))
    }

    pub fn eval_comm(&self, u: &CommPoly) -> CommPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(CommPoly::zero(), |acc, c| &(&acc * u) + &CommPoly::constant(c.clone()))
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Named { poly: self, var }
    }

    fn as_terms(&self) -> Terms {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::new(k as u32, 0), c.clone()))
            .collect()
    }
}

struct Named<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.poly.as_terms(), (self.var, "_"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.as_terms(), ("t", "_"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &-rhs
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl FromStr for UniPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<UniPoly> {
        crate::parse::parse_univariate(s)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_prints() {
        let p = UniPoly::new(vec![
            Scalar::zero(),
            Scalar::from_int(2),
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
        ]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "t^3 + 2*t");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluates_in_weyl() {
        let p = UniPoly::new(vec![Scalar::one(), Scalar::zero(), Scalar::one()]);
        let x = WeylPoly::x();
        assert_eq!(p.eval_weyl(&x), &x.pow(2) + &WeylPoly::one());
    }
}
