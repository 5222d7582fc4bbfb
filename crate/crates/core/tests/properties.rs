use proptest::prelude::*;

use ncatalan::catalan::catalan;
use ncatalan::qpoly::{chi_q, q_binomial, QPoly};
use ncatalan::{Int, NcPoly, Word};

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0u32..5, prop_oneof![-2i64..=-1, 1i64..=2]), 0..6).prop_map(Word::from_pairs)
}

fn poly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((word(), -3i64..=3), 0..5)
        .prop_map(|ts| NcPoly::from_terms(ts.into_iter().map(|(w, c)| (w, Int::from(c)))))
}

fn alternating() -> impl Strategy<Value = NcPoly> {
    let alt_word = prop::collection::vec(0u32..6, 0..4).prop_flat_map(|pairs| {
        let len = 2 * pairs.len() + 1;
        prop::collection::vec(0u32..6, len).prop_filter_map("adjacent indices differ", |idx| {
            if idx.windows(2).any(|w| w[0] == w[1]) {
                return None;
            }
            Some(Word::from_pairs(idx.iter().enumerate().map(|(i, &k)| (k, if i % 2 == 0 { 1 } else { -1 }))))
        })
    });
    prop::collection::vec((alt_word, -3i64..=3), 1..4)
        .prop_map(|ts| NcPoly::from_terms(ts.into_iter().map(|(w, c)| (w, Int::from(c)))))
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-4i64..6, -3i64..=3), 0..5)
        .prop_map(|ts| QPoly::from_pairs(ts.into_iter().map(|(e, c)| (e, Int::from(c)))))
}

proptest! {
    #[test]
    fn word_product_is_associative(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn words_have_inverses(a in word()) {
        prop_assert!(a.mul(&a.inv()).is_one());
        prop_assert!(a.inv().mul(&a).is_one());
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&NcPoly::one()), a.clone());
    }

    #[test]
    fn bar_is_an_involutive_anti_automorphism(a in poly(), b in poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul(&b).bar(), b.bar().mul(&a.bar()));
        prop_assert_eq!(a.add(&b).bar(), a.bar().add(&b.bar()));
    }

    #[test]
    fn eps_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!(a.add(&b).eps(), a.eps() + b.eps());
        prop_assert_eq!(a.mul(&b).eps(), a.eps() * b.eps());
    }

    #[test]
    fn sigma_pi_and_shift_are_ring_maps(a in poly(), b in poly(), r in 0u32..4) {
        prop_assert_eq!(a.mul(&b).sigma(), a.sigma().mul(&b.sigma()));
        prop_assert_eq!(a.add(&b).sigma(), a.sigma().add(&b.sigma()));
        prop_assert_eq!(a.mul(&b).pi(), a.pi().mul(&b.pi()));
        prop_assert_eq!(a.add(&b).pi(), a.pi().add(&b.pi()));
        prop_assert_eq!(a.mul(&b).shift(r), a.shift(r).mul(&b.shift(r)));
        prop_assert_eq!(a.shift(r).shift(1), a.shift(r + 1));
    }

    #[test]
    fn sigma_of_shift_on_alternating_combinations(a in alternating()) {
        let lhs = a.shift(1).sigma();
        let rhs = NcPoly::gen(0).mul(&a.sigma()).mul(&NcPoly::gen(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chi_q_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!(chi_q(&a.mul(&b)), chi_q(&a).mul(&chi_q(&b)));
        prop_assert_eq!(chi_q(&a.add(&b)), chi_q(&a).add(&chi_q(&b)));
        prop_assert_eq!(chi_q(&a).eval_one(), a.eps());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in qpoly(), b in qpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gaussian_binomials_are_symmetric(n in 0usize..12, k in 0usize..12) {
        prop_assume!(k <= n);
        let g = q_binomial(n, k);
        prop_assert_eq!(&g, &q_binomial(n, n - k));
        prop_assert!(g.all_nonnegative());
    }

    #[test]
    fn pi_of_catalan_is_a_multiple_of_pi_x_n(n in 0usize..9) {
        let pc = catalan(n).pi();
        prop_assert_eq!(pc.len(), 1);
    }
}
