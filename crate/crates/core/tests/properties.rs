mod support;

use garside_core::coxeter::{Gen, ScalarField, Sign};
use garside_core::monoid::MonoidWord;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use support::*;

#[test]
fn inversion_sets_on_low_sets() {
    for (ty, rank) in [("affineA", 2), ("affineC", 2), ("affineB", 3), ("H", 3)] {
        let w = system(ty, rank);
        let (low, _) = low_and_family(&w);
        inversion_sets(&w, low.elements()).unwrap();
    }
}

#[test]
fn n1_is_the_set_of_extreme_rays() {
    for (ty, rank) in [("A", 2), ("affineA", 2), ("affineC", 2), ("B", 3)] {
        let w = system(ty, rank);
        let (low, _) = low_and_family(&w);
        n1_extreme_rays(&w, low.elements()).unwrap();
    }
}

#[test]
fn closure_joins_lie_in_the_cone() {
    for (ty, rank) in [("affineA", 2), ("affineC", 2), ("A", 3)] {
        let w = system(ty, rank);
        let (low, _) = low_and_family(&w);
        assert!(join_cones(&w, &low).unwrap() > 0);
    }
}

#[test]
fn low_sets_are_closed() {
    for (ty, rank) in [("affineA", 3), ("affineB", 3), ("affineC", 3)] {
        let w = system(ty, rank);
        let (low, fam) = low_and_family(&w);
        low_closure(&w, &low).unwrap();
        family_verified(&w, &low, &fam).unwrap();
    }
}

#[test]
fn monoid_against_braid_classes() {
    for (ty, rank) in [("A", 2), ("affineA", 2)] {
        let w = system(ty, rank);
        let (_, fam) = low_and_family(&w);
        let classes = BruteClasses::new(&w, 4);
        let forms = monoid_eq_vs_brute(&w, &fam, &classes).unwrap();
        left_divides_vs_brute(&w, &fam, &classes).unwrap();
        greedy_vs_brute(&w, &fam, &forms).unwrap();
    }
}

#[test]
fn automaton_language_short_words() {
    for (ty, rank) in [("A", 2), ("affineA", 2), ("H", 3)] {
        automaton_language(&system(ty, rank), 6).unwrap();
    }
}

#[test]
fn bipodality_small_cap() {
    bipodality(&system("affineA", 2), 5).unwrap();
    bipodality(&system("affineC", 2), 5).unwrap();
}

#[test]
fn large_type_extremal_lengths() {
    for w in [all_threes(3), all_threes(4)] {
        let (_, fam) = low_and_family(&w);
        assert!(fam.extremal().iter().all(|e| e.len() == 4));
    }
}

#[test]
fn automaton_injection_on_low_sets() {
    for (ty, rank) in [("affineA", 2), ("affineC", 2), ("affineB", 3)] {
        let w = system(ty, rank);
        let (low, fam) = low_and_family(&w);
        let auto = w.canonical_automaton(1_000_000).unwrap();
        let states: std::collections::HashSet<usize> =
            low.elements().iter().map(|x| w.low_state(&auto, x).unwrap()).collect();
        assert_eq!(states.len(), low.len());
        assert!(auto.len() >= low.len() && low.len() >= fam.len());
    }
}

fn rational_vec(max: i64, len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-max..=max, 1..=max), len)
}

fn scalar(f: &ScalarField, parts: &[(i64, i64)]) -> garside_core::coxeter::Scalar {
    let coeffs =
        parts.iter().take(f.degree()).map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect();
    f.from_coefficients(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(n in prop::sample::select(vec![5u64, 7, 8, 12, 30]),
                    a in rational_vec(9, 8), b in rational_vec(9, 8), c in rational_vec(9, 8)) {
        let f = ScalarField::new(n).unwrap();
        let (a, b, c) = (scalar(&f, &a), scalar(&f, &b), scalar(&f, &c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &(&b + &c)), &f.mul(&a, &b) + &f.mul(&a, &c));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn sign_matches_floating_point(n in prop::sample::select(vec![5u64, 8, 12, 60]), a in rational_vec(20, 8)) {
        let f = ScalarField::new(n).unwrap();
        let a = scalar(&f, &a);
        let x = f.to_f64(&a);
        prop_assume!(x.abs() > 1e-6);
        let want = if x > 0.0 { Sign::Positive } else { Sign::Negative };
        prop_assert_eq!(f.sign(&a), want);
    }

    #[test]
    fn reduced_words_and_weak_order(word in proptest::collection::vec(0u8..3, 0..14)) {
        let w = system("affineA", 2);
        let word: Vec<Gen> = word.into_iter().map(Gen).collect();
        let x = w.reduce_word(&word);
        prop_assert!(w.is_reduced(x.word()));
        prop_assert_eq!(x.inversion_bits().len(), x.len());
        // The canonical word is the least reduced word: braid moves preserve the element.
        let class = garside_core::monoid::brute::congruence_class(&w, &MonoidWord::new(x.word().to_vec()), BRUTE_CAP).unwrap();
        prop_assert_eq!(class.iter().next().unwrap().as_slice(), x.word());
        for k in 0..=x.len() {
            let prefix = w.reduce_word(&x.word()[..k]);
            prop_assert!(w.weak_leq(&prefix, &x));
            let suffix = w.reduce_word(&x.word()[k..]);
            prop_assert!(w.is_suffix(&suffix, &x));
        }
        prop_assert_eq!(w.multiply(&x, &w.inverse(&x)), w.identity());
    }

    #[test]
    fn normal_forms_round_trip(word in proptest::collection::vec(0u8..3, 0..12)) {
        let w = system("affineC", 2);
        let (_, fam) = low_and_family(&w);
        let word = MonoidWord::new(word.into_iter().map(Gen).collect());
        let nf = w.f_normal_form(&word, &fam).unwrap();
        prop_assert_eq!(nf.lambda(), word.len());
        prop_assert!(w.greediness_violations(&nf, &fam).is_empty());
        prop_assert_eq!(&w.f_normal_form(&nf.to_word(), &fam).unwrap(), &nf);
        let wn = w.w_normal_form(&word);
        prop_assert_eq!(wn.lambda(), word.len());
        prop_assert_eq!(&w.w_normal_form(&wn.to_word()), &wn);
        prop_assert!(nf.entries.iter().all(|e| fam.contains(e)));
    }

    #[test]
    fn matrix_documents_round_trip(n in 2usize..5, ty in prop::sample::select(vec!["A", "B", "affineA", "affineC"])) {
        let m = garside_core::coxeter::catalog(&garside_core::coxeter::CatalogSpec { ty: ty.into(), rank: Some(n), ..Default::default() }).unwrap();
        let back = garside_core::coxeter::CoxeterMatrix::parse(&m.to_document().to_string()).unwrap();
        prop_assert_eq!(back, m);
    }
}
