//! Random instances for property tests, self-tests and acceptance runs.
//! Coefficients stay small so that composites remain tractable.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::maps::{conjugate_involution, Generator, GeneratorWord, Involution, Letter};
use crate::monomial::Monomial;
use crate::plane::{CommPoly, FactorLetter, FactorWord};
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::weyl::{Kind, WeylPoly};

fn small_rational<R: Rng + ?Sized>(rng: &mut R, num: i64, den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-num..=num)),
        BigInt::from(rng.gen_range(1..=den)),
    )
}

/// A small element of Q(sqrt2); the surd part is nonzero only if `surd`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, surd: bool) -> Scalar {
    let rat = small_rational(rng, 5, 4);
    let s = if surd && rng.gen_bool(0.3) {
        small_rational(rng, 3, 2)
    } else {
        BigRational::from_integer(BigInt::from(0))
    };
    Scalar::new(rat, s)
}

pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, surd: bool) -> Scalar {
    loop {
        let c = scalar(rng, surd);
        if !c.is_zero() {
            return c;
        }
    }
}

fn monomials<R: Rng + ?Sized>(rng: &mut R, max_deg: u32, max_terms: usize) -> Vec<Monomial> {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            let x = rng.gen_range(0..=d);
            Monomial::new(x, d - x)
        })
        .collect()
}

pub fn weyl_poly<R: Rng + ?Sized>(rng: &mut R, max_deg: u32, max_terms: usize, surd: bool) -> WeylPoly {
    let ms = monomials(rng, max_deg, max_terms);
    WeylPoly::from_terms(ms.into_iter().map(|m| (m, scalar(rng, surd))))
}

pub fn comm_poly<R: Rng + ?Sized>(rng: &mut R, max_deg: u32, max_terms: usize) -> CommPoly {
    let ms = monomials(rng, max_deg, max_terms);
    CommPoly::from_terms(ms.into_iter().map(|m| (m, scalar(rng, false))))
}

/// A polynomial of exact degree `deg` with small rational coefficients.
pub fn uni_poly<R: Rng + ?Sized>(rng: &mut R, deg: usize) -> UniPoly {
    let mut c: Vec<Scalar> = (0..deg).map(|_| scalar(rng, false)).collect();
    c.push(nonzero_scalar(rng, false));
    UniPoly::new(c)
}

/// `(a, b, c, d)` with `ad - bc = 1`.
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R) -> [Scalar; 4] {
    let choices = [
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::ratio(1, 2),
        Scalar::ratio(-1, 2),
    ];
    let a = choices.choose(rng).expect("nonempty").clone();
    let b = Scalar::from_int(rng.gen_range(-2..=2));
    let c = Scalar::from_int(rng.gen_range(-2..=2));
    let d = &(&Scalar::one() + &(&b * &c)) * &a.inv().expect("nonzero");
    [a, b, c, d]
}

pub fn linear_generator<R: Rng + ?Sized>(rng: &mut R) -> Generator {
    let [a, b, c, d] = unimodular(rng);
    Generator::linear(a, b, c, d).expect("unit determinant")
}

pub fn triangular_generator<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Generator {
    let deg = rng.gen_range(1..=max_deg.max(1));
    Generator::triangular(uni_poly(rng, deg))
}

/// Shape of random generator words.
#[derive(Clone, Copy, Debug)]
pub struct WordShape {
    pub max_len: usize,
    pub max_triangular: usize,
    pub tri_degree: usize,
    pub flips: bool,
}

impl WordShape {
    pub fn automorphisms(max_len: usize, max_triangular: usize, tri_degree: usize) -> Self {
        WordShape {
            max_len,
            max_triangular,
            tri_degree,
            flips: false,
        }
    }
}

pub fn word<R: Rng + ?Sized>(rng: &mut R, shape: WordShape) -> GeneratorWord {
    let len = rng.gen_range(0..=shape.max_len);
    let mut tri_left = shape.max_triangular;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let roll = rng.gen_range(0..3);
        let g = if roll == 0 && tri_left > 0 {
            tri_left -= 1;
            triangular_generator(rng, shape.tri_degree)
        } else if roll == 1 && shape.flips {
            Generator::Flip
        } else {
            linear_generator(rng)
        };
        let l = Letter::new(g);
        letters.push(if rng.gen_bool(0.5) { l.inverse() } else { l });
    }
    GeneratorWord::new(letters)
}

/// Parameters `(a, b, c)` of a family member: `a = (t + 1/t)/2`,
/// `b = (t - 1/t)/2` for endomorphisms, swapped for anti-endomorphisms.
pub fn family_params<R: Rng + ?Sized>(rng: &mut R, variant: Kind, max_c: usize) -> (Scalar, Scalar, Vec<Scalar>) {
    let t = loop {
        let t = small_rational(rng, 4, 3);
        if t != BigRational::from_integer(BigInt::from(0)) {
            break Scalar::from_rational(t);
        }
    };
    let ti = t.inv().expect("nonzero");
    let half = Scalar::ratio(1, 2);
    let a = &(&t + &ti) * &half;
    let b = &(&t - &ti) * &half;
    let n = rng.gen_range(0..=max_c);
    let c = (0..n).map(|_| scalar(rng, false)).collect();
    match variant {
        Kind::Homo => (a, b, c),
        Kind::Anti => (b, a, c),
    }
}

/// `w⁻¹ ∘ base ∘ w` for a random word `w`, with `base` α or β.
pub fn involution<R: Rng + ?Sized>(rng: &mut R, shape: WordShape) -> Involution {
    let base = if rng.gen_bool(0.5) {
        Involution::alpha()
    } else {
        Involution::beta()
    };
    conjugate_involution(&base, &word(rng, shape)).expect("conjugate of an involution")
}

pub fn affine_letter<R: Rng + ?Sized>(rng: &mut R) -> FactorLetter {
    let [a, b, c, d] = unimodular(rng);
    let scale = if rng.gen_bool(0.5) {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    };
    FactorLetter::Affine {
        a: &a * &scale,
        b: &b * &scale,
        c,
        d,
        e: Scalar::from_int(rng.gen_range(-2..=2)),
        f: Scalar::from_int(rng.gen_range(-2..=2)),
    }
}

/// A word of up to `max_len` letters alternating between affine and
/// triangular letters, with triangular degrees in `2..=max_deg`.
pub fn factor_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_deg: usize) -> FactorWord {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut tri = rng.gen_bool(0.5);
    let letters = (0..len)
        .map(|_| {
            tri = !tri;
            if tri {
                let deg = rng.gen_range(2..=max_deg.max(2));
                FactorLetter::Triangular { p: uni_poly(rng, deg) }
            } else {
                affine_letter(rng)
            }
        })
        .collect();
    FactorWord::new(letters)
}
