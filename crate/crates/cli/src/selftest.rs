//! Randomized consistency checks behind the `selftest` verb.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylkit::dixmier::{membership, Bounded, ImagePair};
use weylkit::maps::{alpha_family, alpha_family_invert, check_involution, conjugate_involution, word_invert, word_to_map};
use weylkit::plane::{jvdk_factor, recompose};
use weylkit::sample::{self, WordShape};
use weylkit::{Involution, Kind, WeylPoly};

const SHAPE: WordShape = WordShape {
    max_len: 3,
    max_triangular: 1,
    tri_degree: 2,
    flips: true,
};

type Check = fn(&mut ChaCha8Rng) -> bool;

fn associativity(rng: &mut ChaCha8Rng) -> bool {
    let [a, b, c] = [(); 3].map(|_| sample::weyl_poly(rng, 3, 4, true));
    &(&a * &b) * &c == &a * &(&b * &c)
}

fn word_inverse(rng: &mut ChaCha8Rng) -> bool {
    let w = sample::word(rng, SHAPE);
    word_to_map(&w).compose(&word_to_map(&word_invert(&w))).is_identity()
}

fn conjugates(rng: &mut ChaCha8Rng) -> bool {
    let w = sample::word(rng, SHAPE);
    [Involution::alpha(), Involution::beta()]
        .iter()
        .all(|i| conjugate_involution(i, &w).is_ok_and(|c| check_involution(c.map())))
}

fn sym_skew(rng: &mut ChaCha8Rng) -> bool {
    let iota = sample::involution(rng, SHAPE);
    let u = sample::weyl_poly(rng, 3, 4, true);
    let (s, k) = iota.sym_skew_decompose(&u);
    &s + &k == u && iota.is_symmetric(&s) && iota.is_skew(&k)
}

fn membership_sound(rng: &mut ChaCha8Rng) -> bool {
    let f = word_to_map(&sample::word(rng, WordShape { flips: false, ..SHAPE }));
    let Ok(pair) = ImagePair::from_map(&f) else {
        return false;
    };
    let u = sample::weyl_poly(rng, 2, 3, false);
    let w = u.substitute(pair.p(), pair.q(), Kind::Homo);
    let (dp, dq) = pair.degrees();
    match membership(&w, &pair, 2 * dp.max(dq)) {
        Bounded::Found(t) => t.evaluate(&pair) == w,
        Bounded::NotFoundUpTo(_) => false,
    }
}

fn family(rng: &mut ChaCha8Rng) -> bool {
    let (a, b, c) = sample::family_params(rng, Kind::Homo, 2);
    let Ok(f) = alpha_family(&a, &b, &c, Kind::Homo) else {
        return false;
    };
    f.commutes_with_alpha() && alpha_family_invert(&f).is_ok_and(|g| g.compose(&f).is_identity())
}

fn plane_factor(rng: &mut ChaCha8Rng) -> bool {
    let f = recompose(&sample::factor_word(rng, 4, 2));
    jvdk_factor(&f).is_ok_and(|w| recompose(&w) == f)
}

fn relation(_: &mut ChaCha8Rng) -> bool {
    WeylPoly::y().commutator(&WeylPoly::x()) == WeylPoly::one()
}

const CHECKS: &[(&str, Check)] = &[
    ("relation", relation),
    ("associativity", associativity),
    ("word-inverse", word_inverse),
    ("conjugate-involution", conjugates),
    ("sym-skew", sym_skew),
    ("membership-soundness", membership_sound),
    ("alpha-family", family),
    ("plane-factorization", plane_factor),
];

/// Runs every check on `cases` samples; each check gets its own stream.
pub fn run(seed: u64, cases: usize) -> Vec<(&'static str, bool)> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            (*name, (0..cases).all(|_| check(&mut rng)))
        })
        .collect()
}
