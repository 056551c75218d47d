//! Checkable sufficient conditions for an endomorphism of A1 to be an
//! automorphism: centralizers, bounded membership in the image subalgebra,
//! involution compatibility checks, and certificate-producing pipelines.

mod pipeline;
mod search;

pub use pipeline::{symmetric_image_pipeline, PipelineReport, PipelineTrace};
pub use search::{extension_search, symmetrize_search, Parity, SearchPool, Which};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::maps::{word_invert, word_to_map, AlgebraMap, GeneratorWord, Involution};
use crate::monomial::Monomial;
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::{Kind, WeylPoly};

/// Images `P = f(X)`, `Q = f(Y)` of an endomorphism, with `[Q, P] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ImagePair {
    #[serde(rename = "P")]
    p: WeylPoly,
    #[serde(rename = "Q")]
    q: WeylPoly,
}

impl ImagePair {
    pub fn new(p: WeylPoly, q: WeylPoly) -> Result<Self> {
        let c = q.commutator(&p);
        if !c.as_constant().is_some_and(|v| v.is_one()) {
            return Err(Error::InvalidPair {
                commutator: c.to_string(),
            });
        }
        Ok(ImagePair { p, q })
    }

    pub fn identity() -> Self {
        ImagePair {
            p: WeylPoly::x(),
            q: WeylPoly::y(),
        }
    }

    /// The pair `(f(X), f(Y))` of a homomorphism.
    pub fn from_map(f: &AlgebraMap) -> Result<Self> {
        if f.kind() != Kind::Homo {
            return Err(Error::InvalidPair {
                commutator: "-1 (anti map)".into(),
            });
        }
        ImagePair::new(f.img_x().clone(), f.img_y().clone())
    }

    pub fn p(&self) -> &WeylPoly {
        &self.p
    }

    pub fn q(&self) -> &WeylPoly {
        &self.q
    }

    pub fn to_map(&self) -> AlgebraMap {
        AlgebraMap::new(self.p.clone(), self.q.clone(), Kind::Homo).expect("validated pair")
    }

    /// `(deg P, deg Q)`.
    pub fn degrees(&self) -> (u32, u32) {
        (
            self.p.degree().unwrap_or(0),
            self.q.degree().unwrap_or(0),
        )
    }
}

/// Outcome of a bounded search. `NotFoundUpTo` is never a refutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bounded<T> {
    Found(T),
    NotFoundUpTo(u32),
}

impl<T> Bounded<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Bounded::Found(t) => Some(t),
            Bounded::NotFoundUpTo(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Bounded::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Bounded<U> {
        match self {
            Bounded::Found(t) => Bounded::Found(f(t)),
            Bounded::NotFoundUpTo(d) => Bounded::NotFoundUpTo(d),
        }
    }
}

/// An element `sum c_ij P^i Q^j` of the image subalgebra, stored as a
/// normal-ordered polynomial in abstract generators `P`, `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffTable(WeylPoly);

impl CoeffTable {
    pub fn new(poly: WeylPoly) -> Self {
        CoeffTable(poly)
    }

    pub fn poly(&self) -> &WeylPoly {
        &self.0
    }

    /// `(i, j, c_ij)` in canonical order.
    pub fn entries(&self) -> Vec<(u32, u32, Scalar)> {
        self.0
            .terms()
            .rev()
            .map(|(m, c)| (m.x, m.y, c.clone()))
            .collect()
    }

    pub fn evaluate(&self, pair: &ImagePair) -> WeylPoly {
        self.0.substitute(&pair.p, &pair.q, Kind::Homo)
    }
}

impl fmt::Display for CoeffTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display_with("P", "Q"))
    }
}

#[derive(Serialize)]
struct Entry {
    i: u32,
    j: u32,
    c: String,
}

impl Serialize for CoeffTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .entries()
            .into_iter()
            .map(|(i, j, c)| Entry { i, j, c: c.to_string() })
            .collect();
        let mut st = s.serialize_struct("CoeffTable", 2)?;
        st.serialize_field("expr", &self.to_string())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Surjectivity witness: `X` and `Y` written in `P`, `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismCertificate {
    #[serde(rename = "exprX")]
    pub expr_x: CoeffTable,
    #[serde(rename = "exprY")]
    pub expr_y: CoeffTable,
}

impl AutomorphismCertificate {
    pub fn verify(&self, pair: &ImagePair) -> bool {
        self.expr_x.evaluate(pair) == WeylPoly::x() && self.expr_y.evaluate(pair) == WeylPoly::y()
    }
}

/// `h` with `C = h(P)`, by leading-form elimination.
pub fn centralizer_poly(p: &WeylPoly, c: &WeylPoly) -> Result<UniPoly> {
    let dp = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Err(Error::ConstantElement),
    };
    if !c.commutator(p).is_zero() {
        return Err(Error::NotCentralizing);
    }
    let mut powers = vec![WeylPoly::one()];
    let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
    let mut rem = c.clone();
    while let Some(d) = rem.degree() {
        let stuck = |rem: &WeylPoly| Error::NotInPolynomialAlgebra {
            remainder: rem.to_string(),
        };
        if d % dp != 0 {
            return Err(stuck(&rem));
        }
        let k = (d / dp) as usize;
        while powers.len() <= k {
            let next = powers.last().expect("nonempty") * p;
            powers.push(next);
        }
        let pk = &powers[k];
        let lf_pk = pk.leading_form()?;
        let (m, c_pk) = lf_pk.leading_term().expect("nonzero power");
        let ratio = rem.coeff(m.x, m.y).checked_div(c_pk)?;
        if ratio.is_zero() || rem.leading_form()? != lf_pk.scale(&ratio) {
            return Err(stuck(&rem));
        }
        rem = &rem - &pk.scale(&ratio);
        *coeffs.entry(k).or_default() += &ratio;
    }
    let n = coeffs.keys().next_back().map_or(0, |k| k + 1);
    Ok(UniPoly::new(
        (0..n)
            .map(|k| coeffs.get(&k).cloned().unwrap_or_default())
            .collect(),
    ))
}

/// `3 max(deg P, deg Q) deg(w) + 6`.
pub fn default_bound(w: &WeylPoly, pair: &ImagePair) -> u32 {
    let (dp, dq) = pair.degrees();
    3 * dp.max(dq) * w.degree().unwrap_or(0) + 6
}

/// Lazily computed products `P^i Q^j`.
struct ProductCache<'a> {
    pair: &'a ImagePair,
    p_pow: Vec<WeylPoly>,
    q_pow: Vec<WeylPoly>,
    products: HashMap<(u32, u32), WeylPoly>,
}

impl<'a> ProductCache<'a> {
    fn new(pair: &'a ImagePair) -> Self {
        ProductCache {
            pair,
            p_pow: vec![WeylPoly::one()],
            q_pow: vec![WeylPoly::one()],
            products: HashMap::new(),
        }
    }

    fn get(&mut self, i: u32, j: u32) -> &WeylPoly {
        while self.p_pow.len() <= i as usize {
            let next = self.p_pow.last().expect("nonempty") * &self.pair.p;
            self.p_pow.push(next);
        }
        while self.q_pow.len() <= j as usize {
            let next = self.q_pow.last().expect("nonempty") * &self.pair.q;
            self.q_pow.push(next);
        }
        let (pp, qp) = (&self.p_pow, &self.q_pow);
        self.products
            .entry((i, j))
            .or_insert_with(|| &pp[i as usize] * &qp[j as usize])
    }
}

fn columns(pair: &ImagePair, bound: u32) -> Vec<(u32, u32)> {
    let (dp, dq) = pair.degrees();
    let mut cols = Vec::new();
    for i in 0..=bound / dp {
        for j in 0..=(bound - i * dp) / dq {
            cols.push((i, j));
        }
    }
    cols
}

fn build_system(
    cache: &mut ProductCache<'_>,
    cols: &[(u32, u32)],
    target: &WeylPoly,
) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut row_of = |m: Monomial, rows: &mut Vec<Vec<Scalar>>, rhs: &mut Vec<Scalar>| {
        *index.entry(m).or_insert_with(|| {
            rows.push(vec![Scalar::zero(); cols.len()]);
            rhs.push(Scalar::zero());
            rows.len() - 1
        })
    };
    for (col, &(i, j)) in cols.iter().enumerate() {
        for (m, c) in cache.get(i, j).terms() {
            let r = row_of(*m, &mut rows, &mut rhs);
            rows[r][col] = c.clone();
        }
    }
    for (m, c) in target.terms() {
        let r = row_of(*m, &mut rows, &mut rhs);
        rhs[r] = c.clone();
    }
    (rows, rhs)
}

/// Solves `w = sum c_ij P^i Q^j` over `i deg P + j deg Q <= bound`,
/// widening the radius step by step up to `bound`.
pub fn membership(w: &WeylPoly, pair: &ImagePair, bound: u32) -> Bounded<CoeffTable> {
    let (dp, dq) = pair.degrees();
    let step = dp.max(dq);
    let mut cache = ProductCache::new(pair);
    let mut radius = w.degree().unwrap_or(0).min(bound);
    loop {
        let cols = columns(pair, radius);
        let (rows, rhs) = build_system(&mut cache, &cols, w);
        if let Some(sol) = linalg::solve(rows, rhs, cols.len()) {
            let table = CoeffTable(WeylPoly::from_terms(
                cols.iter()
                    .zip(sol.values)
                    .map(|(&(i, j), c)| (Monomial::new(i, j), c)),
            ));
            assert_eq!(
                table.evaluate(pair),
                *w,
                "membership table failed to reproduce its target"
            );
            return Bounded::Found(table);
        }
        if radius >= bound {
            return Bounded::NotFoundUpTo(bound);
        }
        radius = (radius + step).min(bound);
    }
}

/// `(columns, rank)` of the products `P^i Q^j` within the radius; equal
/// values mean the products are linearly independent.
pub fn product_rank(pair: &ImagePair, bound: u32) -> (usize, usize) {
    let mut cache = ProductCache::new(pair);
    let cols = columns(pair, bound);
    let (rows, rhs) = build_system(&mut cache, &cols, &WeylPoly::zero());
    let sol = linalg::solve(rows, rhs, cols.len()).expect("homogeneous system");
    (cols.len(), sol.rank)
}

/// A certificate iff both generators lie in the image within the bound.
pub fn automorphism_decision(pair: &ImagePair, bound: u32) -> Bounded<AutomorphismCertificate> {
    let Bounded::Found(expr_x) = membership(&WeylPoly::x(), pair, bound) else {
        return Bounded::NotFoundUpTo(bound);
    };
    let Bounded::Found(expr_y) = membership(&WeylPoly::y(), pair, bound) else {
        return Bounded::NotFoundUpTo(bound);
    };
    Bounded::Found(AutomorphismCertificate { expr_x, expr_y })
}

/// `f ∘ γ = δ ∘ f` on X and Y.
pub fn gamma_delta_check(f: &AlgebraMap, gamma: &Involution, delta: &Involution) -> bool {
    f.compose(gamma.map())
        .same_on_generators(&delta.map().compose(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GhClass {
    AlphaEndo,
    AlphaAntiEndo,
    Neither,
}

impl GhClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GhClass::AlphaEndo => "alpha-endo",
            GhClass::AlphaAntiEndo => "alpha-anti-endo",
            GhClass::Neither => "neither",
        }
    }
}

/// Classifies `h ∘ f ∘ g⁻¹` by kind and α-commutation.
pub fn gh_check(f: &AlgebraMap, g: &GeneratorWord, h: &GeneratorWord) -> GhClass {
    let m = word_to_map(h)
        .compose(f)
        .compose(&word_to_map(&word_invert(g)));
    match (m.commutes_with_alpha(), m.kind()) {
        (false, _) => GhClass::Neither,
        (true, Kind::Homo) => GhClass::AlphaEndo,
        (true, Kind::Anti) => GhClass::AlphaAntiEndo,
    }
}

/// Membership witnesses for `E(P)` and `E(Q)` in the image subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Restriction {
    #[serde(rename = "epsP")]
    pub eps_p: CoeffTable,
    #[serde(rename = "epsQ")]
    pub eps_q: CoeffTable,
}

pub fn restriction_check(pair: &ImagePair, e: &Involution, bound: u32) -> Bounded<Restriction> {
    let Bounded::Found(eps_p) = membership(&e.apply(&pair.p), pair, bound) else {
        return Bounded::NotFoundUpTo(bound);
    };
    let Bounded::Found(eps_q) = membership(&e.apply(&pair.q), pair, bound) else {
        return Bounded::NotFoundUpTo(bound);
    };
    Bounded::Found(Restriction { eps_p, eps_q })
}

/// `E(X)`, `E(Y)` with X, Y replaced by P, Q (products in written order).
pub fn corresponding_involution_on_t(e: &Involution, pair: &ImagePair) -> (WeylPoly, WeylPoly) {
    let m = e.map();
    (
        m.img_x().substitute(&pair.p, &pair.q, Kind::Homo),
        m.img_y().substitute(&pair.p, &pair.q, Kind::Homo),
    )
}
