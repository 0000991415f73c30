//! Symbolic results checked against closed forms.

mod common;

use common::*;
use num_traits::One;
use wiggle_core::certify::{core_polys, core_polys_at, DCParams};
use wiggle_core::rational::{int, rat};
use wiggle_core::resultant::resultant_laurent;
use wiggle_core::{QPoly, Rat, TPoly};

const TUPLES: [(i64, i64, i64, i64); 3] = [(1, 1, 2, 3), (2, -1, -3, 1), (-1, 3, 2, -2)];

#[test]
fn alpha_core_matches_table() {
    for (k, l, m, n) in TUPLES {
        let p = DCParams::new(k, l, m, n);
        let cp = core_polys(&p).unwrap();
        assert_eq!(cp.alpha_core.degree(), Some(4), "{p:?}");
        assert_eq!(coeffs(&cp.alpha_core, 5), alpha_table(&vars(&p)), "{p:?}");
    }
}

#[test]
fn tau_matches_table() {
    for (k, l, m, n) in TUPLES {
        let p = DCParams::new(k, l, m, n);
        let cp = core_polys(&p).unwrap();
        assert_eq!(cp.tau.degree(), Some(3), "{p:?}");
        assert_eq!(coeffs(&cp.tau, 4), tau_table(&vars(&p)), "{p:?}");
    }
}

#[test]
fn gamma_inner_and_beta_core_degrees() {
    let cp = core_polys(&DCParams::new(1, 1, 2, 3)).unwrap();
    assert_eq!(cp.gamma_inner.degree(), Some(5));
    assert_eq!(cp.beta_core.degree(), Some(4));
}

#[test]
fn resultant_matches_formula_up_to_sign() {
    for (k, l, m, n) in [(1, 1, 2, 3), (2, -1, -3, 1)] {
        let p = DCParams::new(k, l, m, n);
        let cp = core_polys(&p).unwrap();
        let r = resultant_laurent(&cp.tau, &cp.gamma_inner);
        let f = resultant_formula(&vars(&p));
        assert!(r == f || r == -f.clone(), "{p:?}");
    }
}

#[test]
fn equal_x_exponents_factor() {
    for (k, l, n) in [(1, 1, 3), (2, -1, 2)] {
        let p = DCParams::new(k, l, k, n);
        let cp = core_polys(&p).unwrap();
        assert_eq!(cp.tau, equal_x_tau(&vars(&p)), "{p:?}");
    }
}

#[test]
fn equal_x_exponents_gamma_values() {
    // k = m, K = λ^2k: γ at the roots 1/(K−1) and −K/(K−1) of τ.
    let (k, l, n) = (1, 1, 3);
    let (lam, mu) = (rat(3, 2), int(2));
    let cp = core_polys_at(&DCParams::new(k, l, k, n), &lam, &mu).unwrap();
    let kk = pow(&lam, 2 * k);
    let (ll, nn) = (pow(&mu, 2 * l), pow(&mu, 2 * n));
    let one = Rat::one();
    let r1 = &one / (&kk - &one);
    let r2 = -&kk / (&kk - &one);
    let common = pow(&kk, 3) * (&kk + &one) * &nn * (&nn - &ll) / (&kk - &one);
    let mut got = vec![cp.gamma_inner.eval(&r1), cp.gamma_inner.eval(&r2)];
    let mut want = vec![&common * &ll * &ll, -common];
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn inverse_pair_factor() {
    for (k, l) in [(1, 1), (2, -1), (1, 3)] {
        let p = DCParams::new(k, l, -k, -l);
        let cp = core_polys(&p).unwrap();
        assert_eq!(cp.tau, inverse_pair_tau(&vars(&p)), "{p:?}");
    }
}

#[test]
fn inverse_pair_gamma_at_third_root() {
    let (k, l) = (1, 1);
    let (lam, mu) = (int(2), int(3));
    let cp = core_polys_at(&DCParams::new(k, l, -k, -l), &lam, &mu).unwrap();
    let one = Rat::one();
    let kk = pow(&lam, 2 * k);
    let ll = pow(&mu, 2 * l);
    let kl1 = &kk * &ll - &one;
    let root = -(&kl1 * &kl1) / ((&kk * &kk - &one) * (&ll * &ll - &one));
    assert_eq!(root, rat(-49, 48));
    assert!(cp.tau.eval(&root) == Rat::from_integer(0.into()));
    let quartic = &kk + int(4) * &kk * &ll + &kk * &ll * &ll + &kk * &kk * &ll + &ll;
    let want = -((&kk + &one) * (&kk - &ll) * &kl1 * quartic)
        / (&kk * &kk * (&kk - &one) * pow(&(&ll + &one), 4));
    assert_eq!(cp.gamma_inner.eval(&root), want);
}

#[test]
fn specialization_commutes_with_core_extraction() {
    let p = DCParams::new(1, 1, 2, 3);
    let sym = core_polys(&p).unwrap();
    let (lam, mu) = (rat(-2, 3), rat(5, 4));
    let spec = core_polys_at(&p, &lam, &mu).unwrap();
    let s = |f: &TPoly| -> QPoly { f.specialize_rat(&lam, &mu).unwrap() };
    assert_eq!(s(&sym.tau), spec.tau);
    assert_eq!(s(&sym.gamma_inner), spec.gamma_inner);
    assert_eq!(s(&sym.alpha_core), spec.alpha_core);
    assert_eq!(s(&sym.beta_core), spec.beta_core);
}

fn pow(x: &Rat, e: i64) -> Rat {
    wiggle_core::ring::pow_i64(x, e)
}
