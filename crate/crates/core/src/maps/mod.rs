//! Endomorphisms and anti-endomorphisms of the Weyl algebra, involutions,
//! generator words, and the closed family of maps commuting with the
//! exchange involution.

mod family;
mod word;

pub use family::{alpha_family, alpha_family_invert, match_family, FamilyParams};
pub use word::{word_invert, word_to_map, Generator, GeneratorWord, Letter};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::{Kind, WeylPoly};

/// A map of A1 given by the images of X and Y.
///
/// Construction through [`AlgebraMap::new`] checks the defining relation:
/// `[imgY, imgX] = 1` for homomorphisms and `-1` for anti-homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraMap {
    #[serde(rename = "imgX")]
    img_x: WeylPoly,
    #[serde(rename = "imgY")]
    img_y: WeylPoly,
    kind: Kind,
}

impl AlgebraMap {
    pub fn new(img_x: WeylPoly, img_y: WeylPoly, kind: Kind) -> Result<Self> {
        let expected = match kind {
            Kind::Homo => 1,
            Kind::Anti => -1,
        };
        let c = img_y.commutator(&img_x);
        if c != WeylPoly::constant(Scalar::from_int(expected)) {
            return Err(Error::InvalidRelation {
                commutator: c.to_string(),
                expected,
            });
        }
        Ok(AlgebraMap { img_x, img_y, kind })
    }

    /// Builds without validation; for images already known to satisfy the relation.
    pub(crate) fn new_unchecked(img_x: WeylPoly, img_y: WeylPoly, kind: Kind) -> Self {
        AlgebraMap { img_x, img_y, kind }
    }

    pub fn identity() -> Self {
        AlgebraMap::new_unchecked(WeylPoly::x(), WeylPoly::y(), Kind::Homo)
    }

    /// The exchange involution `X <-> Y`.
    pub fn alpha() -> Self {
        AlgebraMap::new_unchecked(WeylPoly::y(), WeylPoly::x(), Kind::Anti)
    }

    /// `X -> X`, `Y -> -Y`, anti.
    pub fn beta() -> Self {
        AlgebraMap::new_unchecked(WeylPoly::x(), -WeylPoly::y(), Kind::Anti)
    }

    pub fn img_x(&self) -> &WeylPoly {
        &self.img_x
    }

    pub fn img_y(&self) -> &WeylPoly {
        &self.img_y
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn apply(&self, u: &WeylPoly) -> WeylPoly {
        u.substitute(&self.img_x, &self.img_y, self.kind)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap::new_unchecked(
            self.apply(&other.img_x),
            self.apply(&other.img_y),
            self.kind.compose(other.kind),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.kind == Kind::Homo && self.img_x == WeylPoly::x() && self.img_y == WeylPoly::y()
    }

    /// Agreement on generators, which determines the map.
    pub fn same_on_generators(&self, other: &AlgebraMap) -> bool {
        self.img_x == other.img_x && self.img_y == other.img_y
    }

    /// `self ∘ α = α ∘ self` on X and Y.
    pub fn commutes_with_alpha(&self) -> bool {
        self.commutes_with(&AlgebraMap::alpha())
    }

    pub fn commutes_with(&self, other: &AlgebraMap) -> bool {
        self.compose(other).same_on_generators(&other.compose(self))
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.img_x, self.img_y, self.kind)
    }
}

/// True iff `f` is an anti-map whose square fixes both generators.
pub fn check_involution(f: &AlgebraMap) -> bool {
    f.kind == Kind::Anti && f.compose(f).is_identity()
}

/// An order-2 anti-automorphism of A1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlgebraMap", into = "AlgebraMap")]
pub struct Involution(AlgebraMap);

impl Involution {
    pub fn new(map: AlgebraMap) -> Result<Self> {
        if check_involution(&map) {
            Ok(Involution(map))
        } else {
            Err(Error::NotInvolutive)
        }
    }

    pub fn alpha() -> Self {
        Involution(AlgebraMap::alpha())
    }

    pub fn beta() -> Self {
        Involution(AlgebraMap::beta())
    }

    pub fn map(&self) -> &AlgebraMap {
        &self.0
    }

    pub fn apply(&self, u: &WeylPoly) -> WeylPoly {
        self.0.apply(u)
    }

    pub fn is_symmetric(&self, u: &WeylPoly) -> bool {
        self.apply(u) == *u
    }

    pub fn is_skew(&self, u: &WeylPoly) -> bool {
        self.apply(u) == -u
    }

    /// `(S, K)` with `S = (u + ι(u))/2` symmetric and `K = (u - ι(u))/2` skew.
    pub fn sym_skew_decompose(&self, u: &WeylPoly) -> (WeylPoly, WeylPoly) {
        let iu = self.apply(u);
        let half = Scalar::ratio(1, 2);
        ((u + &iu).scale(&half), (u - &iu).scale(&half))
    }
}

impl TryFrom<AlgebraMap> for Involution {
    type Error = Error;
    fn try_from(m: AlgebraMap) -> Result<Self> {
        Involution::new(m)
    }
}

impl From<Involution> for AlgebraMap {
    fn from(i: Involution) -> Self {
        i.0
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `word_to_map(invert(w)) ∘ ι ∘ word_to_map(w)`, i.e. `g⁻¹ ι g` for `g = w`.
///
/// A conjugate of an involution is an involution, so the result is not
/// re-checked; squaring it would cost far more than building it.
pub fn conjugate_involution(iota: &Involution, w: &GeneratorWord) -> Result<Involution> {
    let g = word_to_map(w);
    let g_inv = word_to_map(&word_invert(w));
    let m = g_inv.compose(iota.map()).compose(&g);
    debug_assert_eq!(m.kind(), Kind::Anti);
    Ok(Involution(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> WeylPoly {
        s.parse().unwrap()
    }

    #[test]
    fn make_map_examples() {
        assert!(AlgebraMap::new(p("Y"), p("X"), Kind::Anti).is_ok());
        assert!(AlgebraMap::new(p("X"), p("Y + X^2"), Kind::Homo).is_ok());
        assert!(matches!(
            AlgebraMap::new(p("X"), p("X"), Kind::Homo),
            Err(Error::InvalidRelation { .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let a = AlgebraMap::alpha();
        assert_eq!(a.apply(&p("X + Y")), p("X + Y"));
        assert_eq!(AlgebraMap::beta().apply(&p("Y")), p("-Y"));
        assert_eq!(a.apply(&p("X*Y + 1")), p("X*Y + 1"));
    }

    #[test]
    fn compose_examples() {
        let a = AlgebraMap::alpha();
        assert!(a.compose(&a).is_identity());
        let phi = AlgebraMap::new(p("(X + Y)/2"), p("Y - X"), Kind::Homo).unwrap();
        let phi_inv = AlgebraMap::new(p("X - Y/2"), p("X + Y/2"), Kind::Homo).unwrap();
        assert!(phi.compose(&phi_inv).is_identity());
        assert_eq!(phi_inv.compose(&a).compose(&phi), AlgebraMap::beta());
        assert_eq!(AlgebraMap::identity().compose(&a).kind(), Kind::Anti);
    }

    #[test]
    fn involution_checks() {
        assert!(check_involution(&AlgebraMap::alpha()));
        assert!(check_involution(&AlgebraMap::beta()));
        let sigma = AlgebraMap::new(p("Y"), p("X + 1"), Kind::Anti).unwrap();
        assert!(!check_involution(&sigma));
        assert!(!check_involution(&AlgebraMap::identity()));
    }

    #[test]
    fn sym_skew_examples() {
        let a = Involution::alpha();
        assert_eq!(a.sym_skew_decompose(&p("X + Y")), (p("X + Y"), WeylPoly::zero()));
        assert_eq!(a.sym_skew_decompose(&p("Y - X")), (WeylPoly::zero(), p("Y - X")));
        assert_eq!(
            a.sym_skew_decompose(&p("X")),
            (p("(X + Y)/2"), p("(X - Y)/2"))
        );
    }

    #[test]
    fn conjugation_examples() {
        let a = Involution::alpha();
        assert_eq!(conjugate_involution(&a, &GeneratorWord::empty()).unwrap(), a);
        let phi = GeneratorWord::from_generators(vec![Generator::phi()]);
        assert_eq!(conjugate_involution(&a, &phi).unwrap(), Involution::beta());
    }

    #[test]
    fn map_serializes_with_canonical_text() {
        let v = serde_json::to_value(AlgebraMap::beta()).unwrap();
        assert_eq!(v, serde_json::json!({"imgX": "X", "imgY": "-Y", "kind": "anti"}));
    }
}
