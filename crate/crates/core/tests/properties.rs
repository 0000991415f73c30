use num_traits::{One, Zero};
use proptest::prelude::*;
use wiggle_core::mat2::{unimodular_with_xi_det, xi_of, Mat2};
use wiggle_core::qpoly::{gcd, rational_roots, squarefree_part};
use wiggle_core::rational::{format_rat, parse_rat, rat};
use wiggle_core::resultant::{resultant, sylvester_resultant};
use wiggle_core::ring::ExactDiv;
use wiggle_core::wiggle::{assoc_polys, eval_direct, eval_normal_form, verify_identities, SpecializedWiggle};
use wiggle_core::words::{cyclic_reduce, parse_word, CyclicForm, Word};
use wiggle_core::{Laurent, QPoly, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=30).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn pairs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..4)
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 0..5)
        .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..max_len).prop_map(|cs| QPoly::from_coeffs(cs.into_iter().map(|c| rat(c, 1)).collect()))
}

fn unimodular() -> impl Strategy<Value = Mat2<Rat>> {
    (nonzero_rat(), small_rat(), small_rat()).prop_map(|(a, b, c)| {
        let d = (Rat::one() + &b * &c) / &a;
        Mat2::new(a, b, c, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_display_parses_back(p in pairs()) {
        let w = Word::from_pairs(&p).unwrap();
        prop_assume!(!w.is_identity());
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn word_inverse_cancels(p in pairs(), q in pairs()) {
        let u = Word::from_pairs(&p).unwrap();
        let v = Word::from_pairs(&q).unwrap();
        prop_assert!((&u * &u.inverse()).is_identity());
        prop_assert_eq!((&u * &v).inverse(), &v.inverse() * &u.inverse());
    }

    #[test]
    fn cyclic_form_is_conjugation_invariant(p in pairs(), q in pairs()) {
        let w = Word::from_pairs(&p).unwrap();
        let c = Word::from_pairs(&q).unwrap();
        let conj = &(&c.inverse() * &w) * &c;
        prop_assert_eq!(cyclic_reduce(&conj), cyclic_reduce(&w));
    }

    #[test]
    fn swap_is_an_involution(p in pairs()) {
        let w = Word::from_pairs(&p).unwrap();
        prop_assert_eq!(w.swap_generators().swap_generators(), w.clone());
        let trivial = cyclic_reduce(&w) == CyclicForm::Trivial;
        prop_assert_eq!(cyclic_reduce(&w.swap_generators()) == CyclicForm::Trivial, trivial);
    }

    #[test]
    fn rational_text_roundtrip(r in small_rat()) {
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).sigma(), &a.sigma() * &b.sigma());
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn laurent_eval_is_a_homomorphism(a in laurent(), b in laurent(), l in nonzero_rat(), m in nonzero_rat()) {
        let prod = (&a * &b).eval_rat(&l, &m).unwrap();
        prop_assert_eq!(prod, a.eval_rat(&l, &m).unwrap() * b.eval_rat(&l, &m).unwrap());
        prop_assert_eq!(a.eval_rat(&l, &m).unwrap(), a.eval(&l, &m).unwrap());
    }

    #[test]
    fn resultant_routes_agree(f in qpoly(6), g in qpoly(5)) {
        prop_assert_eq!(resultant(&f, &g), sylvester_resultant(&f, &g));
        let common = f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 && gcd(&f, &g).degree().unwrap_or(0) > 0;
        if f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 {
            prop_assert_eq!(resultant(&f, &g).is_zero(), common);
        }
    }

    #[test]
    fn gcd_divides_both(f in qpoly(6), g in qpoly(6)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = gcd(&f, &g);
        prop_assert!(f.rem(&d).is_zero() && g.rem(&d).is_zero());
    }

    #[test]
    fn squarefree_part_and_roots(roots in prop::collection::vec(-5i64..=5, 1..5)) {
        let f = roots.iter().fold(QPoly::one(), |acc, &r| &acc * &QPoly::from_coeffs(vec![rat(-r, 1), Rat::one()]));
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(squarefree_part(&f).degree(), Some(distinct.len()));
        let want: Vec<Rat> = distinct.iter().map(|&r| rat(r, 1)).collect();
        prop_assert_eq!(rational_roots(&f), want);
    }

    #[test]
    fn xi_of_constructed_g(t0 in small_rat()) {
        let g = unimodular_with_xi_det(&t0);
        prop_assert!(g.det().is_one());
        prop_assert_eq!(xi_of(&g).unwrap().det(), t0);
    }

    #[test]
    fn normal_form_matches_direct(p in pairs(), l in nonzero_rat(), m in nonzero_rat(), g in unimodular()) {
        let ap = assoc_polys(&p);
        let normal = eval_normal_form(&ap, &l, &m, &g).unwrap();
        prop_assert_eq!(&normal.matrix, &eval_direct(&p, &l, &m, &g).unwrap());
        prop_assert!(normal.matrix.det().is_one());
        prop_assert_eq!(SpecializedWiggle::from_assoc(&ap, &l, &m).unwrap(), SpecializedWiggle::from_pairs(&p, &l, &m).unwrap());
    }

    #[test]
    fn symbolic_identities(p in pairs()) {
        let report = verify_identities(&assoc_polys(&p));
        prop_assert!(report.all_pass(), "{:?}", report.failures());
    }
}
