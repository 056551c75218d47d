mod common;

use proptest::prelude::*;
use weylkit::sample::{self, WordShape};
use weylkit::{Involution, WeylPoly};

fn involutions(seed: u64) -> Vec<Involution> {
    let mut rng = common::rng(seed);
    let shape = WordShape {
        max_len: 3,
        max_triangular: 1,
        tri_degree: 2,
        flips: true,
    };
    let mut out = vec![Involution::alpha(), Involution::beta()];
    out.extend((0..3).map(|_| sample::involution(&mut rng, shape)));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutator_parity_table(s in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let u = sample::weyl_poly(&mut common::rng(s1), 3, 4, true);
        let v = sample::weyl_poly(&mut common::rng(s2), 3, 4, true);
        for iota in involutions(s) {
            let (su, ku) = iota.sym_skew_decompose(&u);
            let (sv, kv) = iota.sym_skew_decompose(&v);
            prop_assert_eq!(&su + &ku, u.clone());
            prop_assert!(iota.is_symmetric(&su) && iota.is_skew(&ku));
            // sym/sym and skew/skew brackets are skew; mixed brackets are symmetric
            prop_assert!(iota.is_skew(&su.commutator(&sv)));
            prop_assert!(iota.is_skew(&ku.commutator(&kv)));
            prop_assert!(iota.is_symmetric(&su.commutator(&kv)));
            prop_assert!(iota.is_symmetric(&ku.commutator(&sv)));
        }
    }
}

#[test]
fn one_is_symmetric_never_skew() {
    for iota in involutions(7) {
        assert!(iota.is_symmetric(&WeylPoly::one()));
        assert!(!iota.is_skew(&WeylPoly::one()));
    }
}
