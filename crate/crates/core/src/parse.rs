//! Expression parser for Weyl, commutative, and one-variable polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' nat)?
//! atom   := var | 'sqrt2' | nat | '(' expr ')' | '-' factor
//! ```
//!
//! Variables are `X`, `Y` (Weyl mode, noncommuting, normal-ordered on the
//! fly), `x`, `y` (commutative mode) or `t` (one-variable mode). A divisor
//! must evaluate to a nonzero constant. Juxtaposition is rejected, so `2X`
//! is an error and products keep their written order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, ParseError, Result};
use crate::plane::CommPoly;
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::WeylPoly;

/// Name of the environment variable capping intermediate degrees.
pub const MAX_DEGREE_ENV: &str = "WEYLKIT_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Weyl,
    Commutative,
    Univariate,
    Constant,
}

impl Mode {
    fn vars(self) -> &'static [&'static str] {
        match self {
            Mode::Weyl => &["X", "Y"],
            Mode::Commutative => &["x", "y"],
            Mode::Univariate => &["t"],
            Mode::Constant => &[],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub max_degree: u32,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl ParseOptions {
    /// Reads the degree cap from `WEYLKIT_MAX_DEGREE`, falling back to 64.
    pub fn from_env() -> Self {
        let max_degree = std::env::var(MAX_DEGREE_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_DEGREE);
        ParseOptions { max_degree }
    }
}

/// Result of [`parse_expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Weyl(WeylPoly),
    Comm(CommPoly),
}

pub fn parse_expr(s: &str, mode: Mode, opts: ParseOptions) -> Result<Parsed> {
    match mode {
        Mode::Weyl => parse_weyl_with(s, opts).map(Parsed::Weyl),
        Mode::Commutative => parse_comm_with(s, opts).map(Parsed::Comm),
        Mode::Univariate | Mode::Constant => {
            Parser::<CommPoly>::new(s, mode, opts).run().map(Parsed::Comm)
        }
    }
}

pub fn parse_weyl(s: &str) -> Result<WeylPoly> {
    parse_weyl_with(s, ParseOptions::default())
}

pub fn parse_weyl_with(s: &str, opts: ParseOptions) -> Result<WeylPoly> {
    Parser::<WeylPoly>::new(s, Mode::Weyl, opts).run()
}

pub fn parse_comm(s: &str) -> Result<CommPoly> {
    parse_comm_with(s, ParseOptions::default())
}

pub fn parse_comm_with(s: &str, opts: ParseOptions) -> Result<CommPoly> {
    Parser::<CommPoly>::new(s, Mode::Commutative, opts).run()
}

/// A polynomial in `t`.
pub fn parse_univariate(s: &str) -> Result<UniPoly> {
    let p = Parser::<CommPoly>::new(s, Mode::Univariate, ParseOptions::default()).run()?;
    Ok(p.to_univariate_in_x())
}

/// A constant expression such as `1/2 + 3/4*sqrt2`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let p = Parser::<CommPoly>::new(s, Mode::Constant, ParseOptions::default()).run()?;
    Ok(p.as_constant().expect("constant mode has no variables"))
}

trait Algebra:
    Clone + for<'a> Add<&'a Self, Output = Self> + for<'a> Sub<&'a Self, Output = Self> + for<'a> Mul<&'a Self, Output = Self> + Neg<Output = Self>
{
    fn constant(c: Scalar) -> Self;
    fn var(index: usize) -> Self;
    fn degree(&self) -> Option<u32>;
    fn as_constant(&self) -> Option<Scalar>;
    fn scale(&self, c: &Scalar) -> Self;
}

impl Algebra for WeylPoly {
    fn constant(c: Scalar) -> Self {
        WeylPoly::constant(c)
    }
    fn var(index: usize) -> Self {
        if index == 0 {
            WeylPoly::x()
        } else {
            WeylPoly::y()
        }
    }
    fn degree(&self) -> Option<u32> {
        WeylPoly::degree(self)
    }
    fn as_constant(&self) -> Option<Scalar> {
        WeylPoly::as_constant(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        WeylPoly::scale(self, c)
    }
}

impl Algebra for CommPoly {
    fn constant(c: Scalar) -> Self {
        CommPoly::constant(c)
    }
    fn var(index: usize) -> Self {
        if index == 0 {
            CommPoly::x()
        } else {
            CommPoly::y()
        }
    }
    fn degree(&self) -> Option<u32> {
        CommPoly::degree(self)
    }
    fn as_constant(&self) -> Option<Scalar> {
        CommPoly::as_constant(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        CommPoly::scale(self, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Parser<'s, A> {
    src: &'s str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    mode: Mode,
    opts: ParseOptions,
    _marker: std::marker::PhantomData<A>,
}

fn err(position: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse(ParseError {
        position,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        message: message.into(),
    })
}

const AFTER_FACTOR: &[&str] = &["^", "*", "/", "+", "-", ")", "end of input"];

impl<'s, A: Algebra> Parser<'s, A> {
    fn new(src: &'s str, mode: Mode, opts: ParseOptions) -> Self {
        Parser {
            src,
            toks: Vec::new(),
            pos: 0,
            mode,
            opts,
            _marker: std::marker::PhantomData,
        }
    }

    fn tokenize(&mut self) -> Result<()> {
        let bytes = self.src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            let tok = match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                    continue;
                }
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'*' => Tok::Star,
                b'/' => Tok::Slash,
                b'^' => Tok::Caret,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'0'..=b'9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = self.src[start..i].parse().expect("digits");
                    self.toks.push((Tok::Num(n), start));
                    continue;
                }
                c if c.is_ascii_alphabetic() => {
                    while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                        i += 1;
                    }
                    self.toks
                        .push((Tok::Ident(self.src[start..i].to_string()), start));
                    continue;
                }
                _ => {
                    return Err(err(
                        start,
                        format!("unexpected character `{}`", self.src[start..].chars().next().unwrap()),
                        &[],
                    ))
                }
            };
            self.toks.push((tok, start));
            i += 1;
        }
        self.toks.push((Tok::End, self.src.len()));
        Ok(())
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn run(mut self) -> Result<A> {
        self.tokenize()?;
        let v = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(err(self.offset(), "unexpected token", AFTER_FACTOR));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<A> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc + &t;
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let f = self.factor()?;
                    self.check_degree(acc.degree().unwrap_or(0) + f.degree().unwrap_or(0))?;
                    acc = acc * &f;
                }
                Tok::Slash => {
                    let at = self.offset();
                    self.bump();
                    let f = self.factor()?;
                    let c = f
                        .as_constant()
                        .ok_or_else(|| err(at, "divisor must be a constant", &[]))?;
                    acc = acc.scale(&c.inv()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let Tok::Num(n) = self.bump() else {
            return Err(err(at, "exponent must be a nonnegative integer literal", &["integer"]));
        };
        let e: u32 = n
            .try_into()
            .map_err(|_| err(at, "exponent too large", &[]))?;
        let d = base.degree().unwrap_or(0);
        self.check_degree(d.saturating_mul(e))?;
        let mut acc = A::constant(Scalar::one());
        for _ in 0..e {
            acc = acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<A> {
        let at = self.offset();
        let vars = self.mode.vars();
        let expected: Vec<&str> = vars
            .iter()
            .copied()
            .chain(["sqrt2", "integer", "(", "-"])
            .collect();
        match self.bump() {
            Tok::Num(n) => Ok(A::constant(Scalar::from_rational(BigRational::from_integer(n)))),
            Tok::Ident(name) if name == "sqrt2" => Ok(A::constant(Scalar::sqrt2())),
            Tok::Ident(name) => match vars.iter().position(|v| *v == name) {
                Some(i) => {
                    let i = if self.mode == Mode::Univariate { 0 } else { i };
                    Ok(A::var(i))
                }
                None => Err(err(at, format!("unknown identifier `{name}`"), &expected)),
            },
            Tok::LParen => {
                let v = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(v),
                    _ => Err(err(close, "unbalanced parenthesis", &[")"])),
                }
            }
            Tok::Minus => Ok(-self.factor()?),
            Tok::End => Err(err(at, "unexpected end of input", &expected)),
            _ => Err(err(at, "unexpected token", &expected)),
        }
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.opts.max_degree {
            Err(Error::DegreeCap {
                degree,
                cap: self.opts.max_degree,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_relation_parses_to_one() {
        assert_eq!(parse_weyl("Y*X - X*Y").unwrap(), WeylPoly::one());
    }

    #[test]
    fn square_of_difference() {
        assert_eq!(parse_weyl("(X-Y)^2").unwrap().to_string(), "X^2 - 2*X*Y + Y^2 - 1");
    }

    #[test]
    fn dangling_operator_reports_end() {
        let Err(Error::Parse(e)) = parse_comm("x^2 +") else {
            panic!("expected a parse error");
        };
        assert_eq!(e.position, 5);
        assert!(e.expected.contains(&"x".to_string()));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_comm("2*x^2 + 1").unwrap().to_string(), "2*x^2 + 1");
        assert_eq!(parse_weyl("-X^2").unwrap().to_string(), "-X^2");
        assert_eq!(parse_weyl("(X+Y)/2").unwrap().to_string(), "1/2*X + 1/2*Y");
    }

    #[test]
    fn rejects_juxtaposition_and_bad_exponents() {
        assert!(parse_weyl("2X").is_err());
        assert!(parse_weyl("X^Y").is_err());
        assert!(parse_weyl("X^-1").is_err());
        assert!(parse_weyl("X/Y").is_err());
        assert!(parse_weyl("x").is_err());
        assert!(matches!(parse_weyl("X/0"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn degree_cap_aborts() {
        let opts = ParseOptions { max_degree: 4 };
        assert!(matches!(
            parse_weyl_with("(X+Y)^5", opts),
            Err(Error::DegreeCap { degree: 5, cap: 4 })
        ));
        assert!(parse_weyl_with("(X+Y)^4", opts).is_ok());
    }

    #[test]
    fn scalars_and_univariate() {
        assert_eq!(parse_scalar("1/2 + 3/4*sqrt2").unwrap().to_string(), "1/2 + 3/4*sqrt2");
        assert_eq!(parse_scalar("1/sqrt2").unwrap().to_string(), "1/2*sqrt2");
        assert!(parse_scalar("X").is_err());
        assert_eq!(parse_univariate("t^3 + 2*t").unwrap().to_string(), "t^3 + 2*t");
    }
}
