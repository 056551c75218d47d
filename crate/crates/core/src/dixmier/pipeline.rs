//! Automorphism certificates for pairs with one image symmetric or skew
//! under an involution.
//!
//! With `A` the selected image and `B` the other one, the part of `B` with
//! the same parity as `A` commutes with `A`, hence equals `h(A)`. The
//! remainder `R = B - h(A)` has the opposite parity, `A` and `R` generate
//! A1, and membership of X and Y in `K<A, R>` lifts back to `K<P, Q>`.

use serde::Serialize;

use super::search::{Parity, Which};
use super::{automorphism_decision, centralizer_poly, gamma_delta_check, AutomorphismCertificate, Bounded, CoeffTable, ImagePair};
use crate::error::{Error, Result};
use crate::maps::{match_family, AlgebraMap, FamilyParams, Involution};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::{Kind, WeylPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineTrace {
    /// The selected image, `S1` in the symmetric case.
    pub selected: WeylPoly,
    /// The part of the other image commuting with `selected`.
    pub commuting_part: WeylPoly,
    /// `commuting_part = h(selected)`.
    pub h: UniPoly,
    /// Other image minus `h(selected)`, `K2` in the symmetric case.
    pub remainder: WeylPoly,
    /// `[commuting_part, selected]`, always 0.
    pub commuting_bracket: WeylPoly,
    /// `[Q', P']` for the reduced pair, always 1.
    pub reduced_bracket: WeylPoly,
    /// `((S - K)/sqrt2, (S + K)/sqrt2)` up to sign, from the symmetric and
    /// skew members of the reduced pair.
    pub gauge: AlgebraMap,
    /// `gauge ∘ α = E ∘ gauge`.
    pub gauge_intertwines: bool,
    /// Family parameters of `gauge` when `E` is α.
    pub gauge_family: Option<FamilyParams>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub trace: PipelineTrace,
    pub decision: Bounded<AutomorphismCertificate>,
}

fn parity_holds(e: &Involution, u: &WeylPoly, parity: Parity) -> bool {
    match parity {
        Parity::Sym => e.is_symmetric(u),
        Parity::Skew => e.is_skew(u),
    }
}

fn lift(table: &CoeffTable, which: Which, h: &UniPoly) -> CoeffTable {
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    let poly = match which {
        Which::P => table.poly().substitute(&x, &(&y - &h.eval_weyl(&x)), Kind::Homo),
        Which::Q => table.poly().substitute(&(&x - &h.eval_weyl(&y)), &y, Kind::Homo),
    };
    CoeffTable::new(poly)
}

pub fn symmetric_image_pipeline(
    pair: &ImagePair,
    e: &Involution,
    bound: u32,
    which: Which,
    parity: Parity,
) -> Result<PipelineReport> {
    let (a, b) = match which {
        Which::P => (pair.p(), pair.q()),
        Which::Q => (pair.q(), pair.p()),
    };
    if !parity_holds(e, a, parity) {
        return Err(Error::ParityViolated {
            parity: parity.to_string(),
        });
    }
    let (sym_b, skew_b) = e.sym_skew_decompose(b);
    let commuting_part = match parity {
        Parity::Sym => sym_b,
        Parity::Skew => skew_b,
    };
    let commuting_bracket = commuting_part.commutator(a);
    let h = centralizer_poly(a, &commuting_part)?;
    let remainder = b - &h.eval_weyl(a);
    let reduced = match which {
        Which::P => ImagePair::new(a.clone(), remainder.clone()),
        Which::Q => ImagePair::new(remainder.clone(), a.clone()),
    }?;
    let reduced_bracket = reduced.q().commutator(reduced.p());

    let (s, k) = match parity {
        Parity::Sym => (a, &remainder),
        Parity::Skew => (&remainder, a),
    };
    let r2 = Scalar::sqrt2().inv()?;
    let (minus, plus) = ((s - k).scale(&r2), (s + k).scale(&r2));
    let gauge = if k.commutator(s).as_constant().is_some_and(|c| c.is_one()) {
        AlgebraMap::new(minus, plus, Kind::Homo)?
    } else {
        AlgebraMap::new(plus, minus, Kind::Homo)?
    };
    let gauge_intertwines = gamma_delta_check(&gauge, &Involution::alpha(), e);
    let gauge_family = if *e == Involution::alpha() {
        match_family(&gauge).ok()
    } else {
        None
    };

    let decision = automorphism_decision(&reduced, bound).map(|cert| AutomorphismCertificate {
        expr_x: lift(&cert.expr_x, which, &h),
        expr_y: lift(&cert.expr_y, which, &h),
    });
    if let Bounded::Found(cert) = &decision {
        assert!(cert.verify(pair), "lifted certificate failed to verify");
    }
    Ok(PipelineReport {
        trace: PipelineTrace {
            selected: a.clone(),
            commuting_part,
            h,
            remainder,
            commuting_bracket,
            reduced_bracket,
            gauge,
            gauge_intertwines,
            gauge_family,
        },
        decision,
    })
}
