use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraMap;
use crate::error::{Error, ParseError, Result};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::{Kind, WeylPoly};

/// Generators of the group of automorphisms and anti-automorphisms of A1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "letter", rename_all = "lowercase")]
pub enum Generator {
    /// `X -> aX + bY`, `Y -> cX + dY` with `ad - bc = 1`.
    Linear {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    },
    /// `X -> X + p(Y)`, `Y -> Y`.
    Triangular { p: UniPoly },
    /// The exchange anti-automorphism.
    Flip,
}

impl Generator {
    pub fn linear(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        let det = &(&a * &d) - &(&b * &c);
        if !det.is_one() {
            return Err(Error::NotInvertible(format!(
                "linear generator has ad - bc = {det}, expected 1"
            )));
        }
        Ok(Generator::Linear { a, b, c, d })
    }

    pub fn triangular(p: UniPoly) -> Self {
        Generator::Triangular { p }
    }

    /// `X -> (X + Y)/2`, `Y -> Y - X`.
    pub fn phi() -> Self {
        Generator::Linear {
            a: Scalar::ratio(1, 2),
            b: Scalar::ratio(1, 2),
            c: Scalar::from_int(-1),
            d: Scalar::one(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Generator::Flip => Kind::Anti,
            _ => Kind::Homo,
        }
    }

    pub fn to_map(&self, inverted: bool) -> AlgebraMap {
        let (x, y) = (WeylPoly::x(), WeylPoly::y());
        match self {
            Generator::Linear { a, b, c, d } => {
                let (a, b, c, d) = if inverted {
                    (d.clone(), -b, -c, a.clone())
                } else {
                    (a.clone(), b.clone(), c.clone(), d.clone())
                };
                AlgebraMap::new_unchecked(&x.scale(&a) + &y.scale(&b), &x.scale(&c) + &y.scale(&d), Kind::Homo)
            }
            Generator::Triangular { p } => {
                let p = if inverted { -p } else { p.clone() };
                AlgebraMap::new_unchecked(&x + &p.eval_weyl(&y), y, Kind::Homo)
            }
            Generator::Flip => AlgebraMap::alpha(),
        }
    }
}

/// A generator with a formal inversion flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    #[serde(flatten)]
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            generator: self.generator.clone(),
            inverted: !self.inverted,
        }
    }

    pub fn to_map(&self) -> AlgebraMap {
        self.generator.to_map(self.inverted)
    }
}

/// A product `l1 ∘ l2 ∘ ... ∘ ln` of generator letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord { letters }
    }

    pub fn from_generators(gens: Vec<Generator>) -> Self {
        GeneratorWord::new(gens.into_iter().map(Letter::new).collect())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Homo when the word contains an even number of flips.
    pub fn kind(&self) -> Kind {
        self.letters
            .iter()
            .fold(Kind::Homo, |k, l| k.compose(l.generator.kind()))
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GeneratorWord { letters }
    }
}

/// Composite map of the word's letters, leftmost letter outermost.
pub fn word_to_map(w: &GeneratorWord) -> AlgebraMap {
    w.letters
        .iter()
        .fold(AlgebraMap::identity(), |acc, l| acc.compose(&l.to_map()))
}

/// Reverses the word and inverts each letter.
pub fn word_invert(w: &GeneratorWord) -> GeneratorWord {
    GeneratorWord {
        letters: w.letters.iter().rev().map(Letter::inverse).collect(),
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Generator::Linear { a, b, c, d } => write!(f, "lin({a}, {b}, {c}, {d})")?,
            Generator::Triangular { p } => write!(f, "tri({p})")?,
            Generator::Flip => f.write_str("flip")?,
        }
        if self.inverted {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn word_error(pos: usize, msg: &str, expected: &[&str]) -> Error {
    Error::Parse(ParseError {
        position: pos,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        message: msg.to_string(),
    })
}

/// Splits `body` at top-level commas.
fn split_args(body: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&body[start..]);
    out
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Letters are `flip`, `lin(a, b, c, d)`, `tri(p(t))`, each optionally
    /// followed by `^-1`, separated by whitespace or `;`. `id` or an empty
    /// string is the empty word.
    fn from_str(s: &str) -> Result<GeneratorWord> {
        const LETTERS: &[&str] = &["flip", "lin(", "tri(", "id"];
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut letters = Vec::new();
        loop {
            while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b';') {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            let rest = &s[pos..];
            let generator = if rest.starts_with("flip") {
                pos += 4;
                Generator::Flip
            } else if rest.starts_with("id") {
                pos += 2;
                continue;
            } else if rest.starts_with("lin(") || rest.starts_with("tri(") {
                let open = pos + 3;
                let mut depth = 0usize;
                let mut close = None;
                for (i, ch) in s[open..].char_indices() {
                    match ch {
                        '(' => depth += 1,
                        ')' => {
                            depth -= 1;
                            if depth == 0 {
                                close = Some(open + i);
                                break;
                            }
                        }
                        _ => {}
                    }
                }
                let close = close.ok_or_else(|| word_error(s.len(), "unclosed letter", &[")"]))?;
                let body = &s[open + 1..close];
                let g = if rest.starts_with("lin(") {
                    let args = split_args(body);
                    if args.len() != 4 {
                        return Err(word_error(open, "lin takes four scalars", &["a, b, c, d"]));
                    }
                    let v: Vec<Scalar> = args
                        .iter()
                        .map(|a| crate::parse::parse_scalar(a))
                        .collect::<Result<_>>()?;
                    let [a, b, c, d]: [Scalar; 4] = v.try_into().expect("four args");
                    Generator::linear(a, b, c, d)?
                } else {
                    Generator::triangular(crate::parse::parse_univariate(body)?)
                };
                pos = close + 1;
                g
            } else {
                return Err(word_error(pos, "unknown generator letter", LETTERS));
            };
            let inverted = s[pos..].starts_with("^-1");
            if inverted {
                pos += 3;
            }
            letters.push(Letter {
                generator,
                inverted,
            });
        }
        Ok(GeneratorWord { letters })
    }
}
