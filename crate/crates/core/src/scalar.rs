//! Exact arithmetic in the real quadratic field Q(sqrt 2).
//!
//! Every coefficient in the crate is a [`Scalar`] `r + s*sqrt2` with
//! arbitrary-precision rational parts. Equality is structural: since sqrt 2
//! is irrational, `r + s*sqrt2 == 0` iff `r == s == 0`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `rat + surd*sqrt2` of Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: BigRational,
    surd: BigRational,
}

/// Field operation selector for [`Scalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn new(rat: BigRational, surd: BigRational) -> Self {
        Scalar { rat, surd }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a rational scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn surd(&self) -> &BigRational {
        &self.surd
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// Galois conjugate `rat - surd*sqrt2`.
    pub fn conj(&self) -> Scalar {
        Scalar::new(self.rat.clone(), -&self.surd)
    }

    /// Field norm `rat^2 - 2*surd^2`; zero only for the zero scalar.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        &self.rat * &self.rat - two * &self.surd * &self.surd
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.surd.is_zero() {
            return Ok(Scalar::from_rational(self.rat.recip()));
        }
        let n = self.norm();
        Ok(Scalar::new(&self.rat / &n, -(&self.surd / &n)))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Exact field arithmetic, the only fallible case being division by zero.
    pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
        match op {
            ArithOp::Add => Ok(a + b),
            ArithOp::Sub => Ok(a - b),
            ArithOp::Mul => Ok(a * b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when printing this scalar as a coefficient needs parentheses.
    pub(crate) fn is_compound(&self) -> bool {
        !self.rat.is_zero() && !self.surd.is_zero()
    }

    /// Sign used when printing a single-part scalar inside a sum.
    pub(crate) fn is_negative_simple(&self) -> bool {
        !self.is_compound() && (self.rat.is_negative() || self.surd.is_negative())
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn fmt_surd(s: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if s.is_one() {
        f.write_str("sqrt2")
    } else if (-s).is_one() {
        f.write_str("-sqrt2")
    } else {
        fmt_rational(s, f)?;
        f.write_str("*sqrt2")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (_, true) => fmt_rational(&self.rat, f),
            (true, false) => fmt_surd(&self.surd, f),
            (false, false) => {
                fmt_rational(&self.rat, f)?;
                if self.surd.is_negative() {
                    f.write_str(" - ")?;
                    fmt_surd(&-&self.surd, f)
                } else {
                    f.write_str(" + ")?;
                    fmt_surd(&self.surd, f)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        crate::parse::parse_scalar(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rat + &rhs.rat, &self.surd + &rhs.surd)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rat - &rhs.rat, &self.surd - &rhs.surd)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return Scalar::from_rational(&self.rat * &rhs.rat);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
        let rat = &self.rat * &rhs.rat + two * &self.surd * &rhs.surd;
        let surd = &self.rat * &rhs.surd + &self.surd * &rhs.rat;
        Scalar::new(rat, surd)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.rat, -&self.surd)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rat, -self.surd)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rat += &rhs.rat;
        if !rhs.surd.is_zero() {
            self.surd += &rhs.surd;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.rat -= &rhs.rat;
        if !rhs.surd.is_zero() {
            self.surd -= &rhs.surd;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational_text(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Scalar", 2)?;
        st.serialize_field("rat", &rational_text(&self.rat))?;
        st.serialize_field("surd", &rational_text(&self.surd))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Parts {
            rat: String,
            surd: String,
        }
        let p = Parts::deserialize(deserializer)?;
        let rat = parse_rational_text(&p.rat)
            .ok_or_else(|| de::Error::custom(format!("bad rational `{}`", p.rat)))?;
        let surd = parse_rational_text(&p.surd)
            .ok_or_else(|| de::Error::custom(format!("bad rational `{}`", p.surd)))?;
        Ok(Scalar::new(rat, surd))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(r: (i64, i64), q: (i64, i64)) -> Scalar {
        Scalar::new(
            BigRational::new(r.0.into(), r.1.into()),
            BigRational::new(q.0.into(), q.1.into()),
        )
    }

    #[test]
    fn sqrt2_squared_is_two() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
    }

    #[test]
    fn inverse_of_sqrt2() {
        let inv = Scalar::sqrt2().inv().unwrap();
        assert_eq!(inv, s((0, 1), (1, 2)));
        assert!((&inv * &Scalar::sqrt2()).is_one());
    }

    #[test]
    fn division_by_zero_is_reported() {
        let r = Scalar::arith(&Scalar::one(), &Scalar::zero(), ArithOp::Div);
        assert!(matches!(r, Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(s((1, 2), (3, 4)).to_string(), "1/2 + 3/4*sqrt2");
        assert_eq!(s((1, 2), (-3, 4)).to_string(), "1/2 - 3/4*sqrt2");
        assert_eq!(s((0, 1), (-1, 1)).to_string(), "-sqrt2");
        assert_eq!(s((-7, 1), (0, 1)).to_string(), "-7");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn serde_parts_are_strings() {
        let v = serde_json::to_value(s((1, 2), (-3, 4))).unwrap();
        assert_eq!(v, serde_json::json!({"rat": "1/2", "surd": "-3/4"}));
        let back: Scalar = serde_json::from_value(v).unwrap();
        assert_eq!(back, s((1, 2), (-3, 4)));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| s((a, b), (c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn nonzero_has_nonzero_norm_and_inverse(a in arb_scalar()) {
            prop_assume!(!a.is_zero());
            prop_assert!(!a.norm().is_zero());
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }

        #[test]
        fn display_round_trips(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
