mod common;

use common::oracle::RewriteOracle;
use proptest::prelude::*;
use weylkit::sample;
use weylkit::weyl::reorder;
use weylkit::{Kind, WeylPoly};

fn poly(seed: u64, deg: u32) -> WeylPoly {
    sample::weyl_poly(&mut common::rng(seed), deg, 6, true)
}

#[test]
fn reorder_matches_rewriting() {
    let mut oracle = RewriteOracle::default();
    for m in 0..=8 {
        for n in 0..=8 {
            assert_eq!(reorder(m, n), oracle.reorder(m, n), "Y^{m} X^{n}");
        }
    }
}

#[test]
fn relation_holds() {
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    assert_eq!(&(&y * &x) - &(&x * &y), WeylPoly::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_matches_rewriting(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (poly(s1, 6), poly(s2, 6));
        let mut oracle = RewriteOracle::default();
        prop_assert_eq!(&a * &b, oracle.multiply(&a, &b));
    }

    #[test]
    fn ring_axioms(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (poly(s1, 3), poly(s2, 3), poly(s3, 3));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &WeylPoly::one(), a.clone());
    }

    #[test]
    fn jacobi_identity(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (poly(s1, 3), poly(s2, 3), poly(s3, 3));
        let j = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn degree_is_additive(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (poly(s1, 4), poly(s2, 4));
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn text_round_trip(s in any::<u64>()) {
        let a = poly(s, 5);
        prop_assert_eq!(a.to_string().parse::<WeylPoly>().unwrap(), a);
    }

    #[test]
    fn substitution_is_multiplicative(s in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let mut rng = common::rng(s);
        let f = weylkit::maps::word_to_map(&sample::word(
            &mut rng,
            sample::WordShape { max_len: 3, max_triangular: 1, tri_degree: 2, flips: true },
        ));
        let (a, b) = (poly(s1, 3), poly(s2, 3));
        let lhs = f.apply(&(&a * &b));
        let rhs = match f.kind() {
            Kind::Homo => &f.apply(&a) * &f.apply(&b),
            Kind::Anti => &f.apply(&b) * &f.apply(&a),
        };
        prop_assert_eq!(lhs, rhs);
    }
}
