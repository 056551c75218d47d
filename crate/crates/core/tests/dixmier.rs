mod common;

use proptest::prelude::*;
use weylkit::dixmier::{
    centralizer_poly, gamma_delta_check, gh_check, membership, product_rank, symmetric_image_pipeline, Bounded,
    GhClass, ImagePair, Parity, Which,
};
use weylkit::maps::{conjugate_involution, word_invert, word_to_map, GeneratorWord};
use weylkit::sample::{self, WordShape};
use weylkit::{Involution, Kind, WeylPoly};

const AUTO: WordShape = WordShape {
    max_len: 3,
    max_triangular: 1,
    tri_degree: 3,
    flips: false,
};

const MIXED: WordShape = WordShape {
    max_len: 3,
    max_triangular: 1,
    tri_degree: 2,
    flips: true,
};

fn pair_of(w: &GeneratorWord) -> ImagePair {
    let f = word_to_map(w);
    match f.kind() {
        Kind::Homo => ImagePair::new(f.img_x().clone(), f.img_y().clone()),
        // [g(X), g(Y)] = 1 for an anti map g, so the images swap roles.
        Kind::Anti => ImagePair::new(f.img_y().clone(), f.img_x().clone()),
    }
    .unwrap()
}

fn seed_word() -> GeneratorWord {
    "lin(1/2, 1/2, -1, 1)".parse().unwrap()
}

#[test]
fn nonmembership_is_reported_with_its_bound() {
    let pair = ImagePair::new("X".parse().unwrap(), "Y + X^2".parse().unwrap()).unwrap();
    assert_eq!(membership(&WeylPoly::y(), &pair, 1), Bounded::NotFoundUpTo(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn centralizer_round_trip(s in any::<u64>()) {
        let mut rng = common::rng(s);
        let p = loop {
            let p = sample::weyl_poly(&mut rng, 2, 3, true);
            if p.degree().is_some_and(|d| d > 0) {
                break p;
            }
        };
        let deg = rand::Rng::gen_range(&mut rng, 0..=4);
        let h = sample::uni_poly(&mut rng, deg);
        prop_assert_eq!(centralizer_poly(&p, &h.eval_weyl(&p)).unwrap(), h);
    }

    #[test]
    fn membership_is_sound_and_products_independent(s in any::<u64>(), s2 in any::<u64>()) {
        let pair = pair_of(&sample::word(&mut common::rng(s), MIXED));
        let (n, rank) = product_rank(&pair, 6);
        prop_assert_eq!(n, rank);
        let u = sample::weyl_poly(&mut common::rng(s2), 2, 4, false);
        // u(P, Q) is in T by construction.
        let w = u.substitute(pair.p(), pair.q(), Kind::Homo);
        let deg = pair.p().degree().unwrap().max(pair.q().degree().unwrap());
        match membership(&w, &pair, 2 * deg) {
            Bounded::Found(t) => prop_assert_eq!(t.evaluate(&pair), w),
            Bounded::NotFoundUpTo(_) => prop_assert!(false, "element built from P, Q not found"),
        }
    }

    #[test]
    fn gamma_delta_for_word_automorphisms(s in any::<u64>()) {
        let w = sample::word(&mut common::rng(s), AUTO);
        let gamma = conjugate_involution(&Involution::alpha(), &w).unwrap();
        prop_assert!(gamma_delta_check(&word_to_map(&w), &gamma, &Involution::alpha()));
    }

    #[test]
    fn gh_agrees_with_gamma_delta(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let f = word_to_map(&sample::word(&mut common::rng(s1), AUTO));
        let g = sample::word(&mut common::rng(s2), MIXED);
        let h = sample::word(&mut common::rng(s3), MIXED);
        let gamma = conjugate_involution(&Involution::alpha(), &g).unwrap();
        let delta = conjugate_involution(&Involution::alpha(), &h).unwrap();
        let class = gh_check(&f, &g, &h);
        prop_assert_eq!(class != GhClass::Neither, gamma_delta_check(&f, &gamma, &delta));
        if class != GhClass::Neither {
            let expected = if g.kind().compose(h.kind()) == Kind::Homo {
                GhClass::AlphaEndo
            } else {
                GhClass::AlphaAntiEndo
            };
            prop_assert_eq!(class, expected);
        }
    }

    #[test]
    fn gh_with_matching_words(s in any::<u64>(), s2 in any::<u64>()) {
        // h f g⁻¹ = h for g = f, so the class follows from h alone.
        let g = sample::word(&mut common::rng(s), AUTO);
        let h = sample::word(&mut common::rng(s2), MIXED);
        let f = word_to_map(&g);
        let expected_commutes = word_to_map(&h).commutes_with_alpha();
        prop_assert_eq!(gh_check(&f, &g, &h) != GhClass::Neither, expected_commutes);
    }

    #[test]
    fn pipeline_certifies_conjugated_pairs(s in any::<u64>(), seeded in any::<bool>()) {
        let w = sample::word(&mut common::rng(s), MIXED);
        let (full, base) = if seeded {
            (w.concat(&seed_word()), Involution::alpha())
        } else {
            (w.clone(), Involution::beta())
        };
        let pair = pair_of(&full);
        let e = conjugate_involution(&base, &word_invert(&w)).unwrap();
        let (which, parity) = [Which::P, Which::Q]
            .into_iter()
            .flat_map(|wh| [(wh, Parity::Sym), (wh, Parity::Skew)])
            .find(|&(wh, par)| {
                let u = pair.select(wh);
                match par {
                    Parity::Sym => e.is_symmetric(u),
                    Parity::Skew => e.is_skew(u),
                }
            })
            .expect("a conjugated image keeps its parity");
        let r = symmetric_image_pipeline(&pair, &e, 12, which, parity).unwrap();
        prop_assert!(r.trace.commuting_bracket.is_zero());
        prop_assert_eq!(&r.trace.reduced_bracket, &WeylPoly::one());
        prop_assert!(r.trace.gauge_intertwines);
        match &r.decision {
            Bounded::Found(cert) => prop_assert!(cert.verify(&pair)),
            Bounded::NotFoundUpTo(d) => prop_assert!(false, "no certificate up to {}", d),
        }
    }
}
