//! Deterministic bounded searches over generator words.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Bounded, ImagePair};
use crate::maps::{conjugate_involution, word_to_map, Generator, GeneratorWord, Involution, Letter};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::WeylPoly;

/// The alphabet of a word search, in canonical order: the flip, linear
/// letters, their inverses, then triangular letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPool {
    letters: Vec<Letter>,
}

impl SearchPool {
    pub fn new(linear: Vec<Generator>, triangular: Vec<UniPoly>) -> Self {
        let mut letters = vec![Letter::new(Generator::Flip)];
        letters.extend(linear.iter().cloned().map(Letter::new));
        letters.extend(linear.iter().cloned().map(|g| Letter::new(g).inverse()));
        letters.extend(
            triangular
                .into_iter()
                .map(|p| Letter::new(Generator::triangular(p))),
        );
        SearchPool { letters }
    }

    /// Linear letters `φ`, the quarter turn `(Y, -X)` and the scaling
    /// `(2X, Y/2)`; triangular letters `c t^k` with `c` in
    /// `{-1, -1/2, 1/2, 1}` and `k <= degree`.
    pub fn with_degree(degree: usize) -> Self {
        let s = |n, d| Scalar::ratio(n, d);
        let linear = vec![
            Generator::phi(),
            Generator::Linear {
                a: s(0, 1),
                b: s(1, 1),
                c: s(-1, 1),
                d: s(0, 1),
            },
            Generator::Linear {
                a: s(2, 1),
                b: s(0, 1),
                c: s(0, 1),
                d: s(1, 2),
            },
        ];
        let coeffs = [s(-1, 1), s(-1, 2), s(1, 2), s(1, 1)];
        let triangular = (0..=degree)
            .flat_map(|k| coeffs.iter().map(move |c| UniPoly::monomial(k, c.clone())))
            .collect();
        SearchPool::new(linear, triangular)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    fn word(&self, mut index: u64, len: usize) -> GeneratorWord {
        let n = self.letters.len() as u64;
        let mut letters = vec![self.letters[0].clone(); len];
        for slot in letters.iter_mut().rev() {
            *slot = self.letters[(index % n) as usize].clone();
            index /= n;
        }
        GeneratorWord::new(letters)
    }

    /// First word in enumeration order satisfying `pred`, up to length
    /// `max_len`. Candidates of one length are tested in parallel; the
    /// returned word does not depend on scheduling.
    pub fn find_first<T: Send>(
        &self,
        max_len: usize,
        pred: impl Fn(&GeneratorWord) -> Option<T> + Sync,
    ) -> Option<(GeneratorWord, T)> {
        let n = self.letters.len() as u64;
        for len in 0..=max_len {
            let Some(total) = n.checked_pow(len as u32) else {
                break;
            };
            let hit = (0..total).into_par_iter().find_map_first(|i| {
                let w = self.word(i, len);
                pred(&w).map(|t| (w, t))
            });
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

impl Default for SearchPool {
    fn default() -> Self {
        SearchPool::with_degree(3)
    }
}

/// A word `w` whose conjugate `w⁻¹ α w` exchanges `P` and `Q`.
pub fn extension_search(pair: &ImagePair, max_len: usize, pool: &SearchPool) -> Bounded<GeneratorWord> {
    let hit = pool.find_first(max_len, |w| {
        let gamma = conjugate_involution(&Involution::alpha(), w).ok()?;
        (gamma.apply(pair.p()) == *pair.q() && gamma.apply(pair.q()) == *pair.p()).then_some(())
    });
    match hit {
        Some((w, ())) => Bounded::Found(w),
        None => Bounded::NotFoundUpTo(max_len as u32),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Sym,
    Skew,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Sym => "sym",
            Parity::Skew => "skew",
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "sym" => Ok(Parity::Sym),
            "skew" => Ok(Parity::Skew),
            _ => Err(crate::error::Error::Parse(crate::error::ParseError {
                position: 0,
                expected: vec!["sym".into(), "skew".into()],
                message: format!("unknown parity `{s}`"),
            })),
        }
    }
}

/// Which image of the pair an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Which {
    P,
    Q,
}

impl Which {
    pub fn as_str(self) -> &'static str {
        match self {
            Which::P => "P",
            Which::Q => "Q",
        }
    }
}

impl std::fmt::Display for Which {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Which {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "P" | "p" => Ok(Which::P),
            "Q" | "q" => Ok(Which::Q),
            _ => Err(crate::error::Error::Parse(crate::error::ParseError {
                position: 0,
                expected: vec!["P".into(), "Q".into()],
                message: format!("unknown image `{s}`"),
            })),
        }
    }
}

impl ImagePair {
    pub fn select(&self, which: Which) -> &WeylPoly {
        match which {
            Which::P => self.p(),
            Which::Q => self.q(),
        }
    }
}

/// A word whose map sends the selected image to an α-symmetric or
/// α-skew element.
pub fn symmetrize_search(
    pair: &ImagePair,
    which: Which,
    max_len: usize,
    pool: &SearchPool,
) -> Bounded<(GeneratorWord, Parity)> {
    let target = pair.select(which);
    let alpha = Involution::alpha();
    let hit = pool.find_first(max_len, |w| {
        let u = word_to_map(w).apply(target);
        let au = alpha.apply(&u);
        if au == u {
            Some(Parity::Sym)
        } else if au == -&u {
            Some(Parity::Skew)
        } else {
            None
        }
    });
    match hit {
        Some(found) => Bounded::Found(found),
        None => Bounded::NotFoundUpTo(max_len as u32),
    }
}
