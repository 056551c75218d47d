//! Classification of plane involutions up to conjugacy.

use serde::{Deserialize, Serialize};

use super::factor::{jvdk_factor, recompose, FactorLetter, FactorWord};
use super::{jacobian, CommPoly, PlaneMap};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Classification {
    /// `w⁻¹ ∘ α ∘ w = f` for the recorded conjugator `w`.
    AlphaClass { conjugator: FactorWord },
    /// Order two with Jacobian +1, so not a conjugate of the swap.
    /// The conjugator, when present, satisfies `w⁻¹ ∘ (-x, -y) ∘ w = f`.
    /// `flagged` is always set: such maps contradict the claim that every
    /// plane involution is conjugate to the swap.
    MinusIdentityClass {
        conjugator: Option<FactorWord>,
        flagged: bool,
    },
    NotInvolution,
}

/// `f ∘ f = id` and `f != id`.
///
/// Compares `f` with its inverse read off the factor word, which avoids
/// squaring the degree.
pub fn is_plane_involution(f: &PlaneMap) -> bool {
    if f.is_identity() {
        return false;
    }
    let Ok(w) = jvdk_factor(f) else {
        return false;
    };
    w.inverse().is_ok_and(|inv| recompose(&inv) == *f)
}

fn minus_identity() -> PlaneMap {
    PlaneMap::new(-CommPoly::x(), -CommPoly::y())
}

fn rotated(w: &FactorWord, k: usize) -> FactorWord {
    let mut letters = w.letters[k..].to_vec();
    letters.extend_from_slice(&w.letters[..k]);
    FactorWord::new(letters)
}

/// Conjugates `f` to a map of minimal degree by rotating its factor word,
/// preferring shorter words at equal degree so that adjacent affine letters
/// merge. Returns `(c, g)` with `f = c ∘ g ∘ c⁻¹`.
fn cyclically_reduce(f: &PlaneMap) -> Result<(FactorWord, PlaneMap)> {
    let mut conj = FactorWord::empty();
    let mut cur = f.clone();
    loop {
        let w = jvdk_factor(&cur)?;
        let mut best: Option<((u32, usize), usize, PlaneMap)> = None;
        for k in 1..w.len() {
            let r = rotated(&w, k).simplified();
            let g = recompose(&r);
            let score = (g.degree(), r.len());
            if score < (cur.degree(), w.len()) && best.as_ref().is_none_or(|b| score < b.0) {
                best = Some((score, k, g));
            }
        }
        let Some((_, k, g)) = best else {
            return Ok((conj, cur));
        };
        conj = conj.concat(&FactorWord::new(w.letters[..k].to_vec()));
        cur = g;
    }
}

/// `T = ((x + σ g(x))/2, (y + τ g(y))/2)` satisfies `g ∘ T = T ∘ diag(σ, τ)`.
fn averaging_map(g: &PlaneMap, sigma: i64, tau: i64) -> PlaneMap {
    let half = Scalar::ratio(1, 2);
    let u = (&CommPoly::x() + &g.imgx.scale(&Scalar::from_int(sigma))).scale(&half);
    let v = (&CommPoly::y() + &g.imgy.scale(&Scalar::from_int(tau))).scale(&half);
    PlaneMap::new(u, v)
}

/// `M` with `diag(σ, τ) = M⁻¹ ∘ α ∘ M`, or `None` for `diag(-1, -1)`.
fn diagonal_to_swap(sigma: i64, tau: i64) -> Option<FactorWord> {
    match (sigma, tau) {
        (1, -1) => Some(FactorWord::new(vec![FactorLetter::phi()])),
        (-1, 1) => Some(FactorWord::new(vec![FactorLetter::phi(), FactorLetter::swap()])),
        _ => None,
    }
}

fn conjugates_to(w: &FactorWord, core: &PlaneMap, f: &PlaneMap) -> Result<bool> {
    let m = recompose(w);
    let m_inv = recompose(&w.inverse()?);
    Ok(m_inv.compose(core).compose(&m) == *f)
}

/// Classifies an involution of the plane by its Jacobian and, for
/// Jacobian −1, constructs `w` with `w⁻¹ ∘ α ∘ w = f`.
pub fn involution_classify(f: &PlaneMap) -> Result<Classification> {
    if f.is_identity() {
        return Ok(Classification::NotInvolution);
    }
    if *f == PlaneMap::swap() {
        return Ok(Classification::AlphaClass {
            conjugator: FactorWord::empty(),
        });
    }
    // Any order-two map is an automorphism, hence factors.
    let word = match jvdk_factor(f) {
        Ok(w) => w,
        Err(Error::JacobianNotConstant { .. } | Error::PeelingStuck { .. }) => {
            return Ok(Classification::NotInvolution)
        }
        Err(e) => return Err(e),
    };
    if recompose(&word.inverse()?) != *f {
        return Ok(Classification::NotInvolution);
    }
    let jac = word.jacobian();
    let signs: &[(i64, i64)] = if jac == Scalar::from_int(-1) {
        &[(1, -1), (-1, 1)]
    } else if jac.is_one() {
        &[(-1, -1)]
    } else {
        return Err(Error::ClassificationFailed(format!(
            "order-two map with Jacobian {jac}"
        )));
    };
    let (c, core) = cyclically_reduce(f)?;
    let c_inv = c.inverse()?;
    for &(sigma, tau) in signs {
        let t = averaging_map(&core, sigma, tau);
        let Ok(t_word) = jvdk_factor(&t) else {
            continue;
        };
        // f = (c T) diag (c T)⁻¹
        let base = t_word.inverse()?.concat(&c_inv);
        match diagonal_to_swap(sigma, tau) {
            Some(m) => {
                let w = m.concat(&base).simplified();
                if conjugates_to(&w, &PlaneMap::swap(), f)? {
                    return Ok(Classification::AlphaClass { conjugator: w });
                }
            }
            None => {
                let w = base.simplified();
                let conjugator = conjugates_to(&w, &minus_identity(), f)?.then_some(w);
                return Ok(Classification::MinusIdentityClass {
                    conjugator,
                    flagged: true,
                });
            }
        }
    }
    if jac.is_one() {
        return Ok(Classification::MinusIdentityClass {
            conjugator: None,
            flagged: true,
        });
    }
    Err(Error::ClassificationFailed(format!(
        "no conjugator found for {f} (reduced core {core})"
    )))
}

/// The Jacobian of `f` and whether `f ∘ γ = δ ∘ f` on x and y.
pub fn alpha_jc_check(f: &PlaneMap, gamma: &PlaneMap, delta: &PlaneMap) -> Result<(CommPoly, bool)> {
    if !is_plane_involution(gamma) || !is_plane_involution(delta) {
        return Err(Error::NotInvolution);
    }
    let commutes = f.compose(gamma) == delta.compose(f);
    Ok((jacobian(f), commutes))
}
