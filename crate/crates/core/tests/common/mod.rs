//! Closed-form coefficient tables for double commutators, written in the
//! variables K = λ^2k, M = λ^2m, L = μ^2l, N = μ^2n.
#![allow(dead_code)]

use num_traits::One;
use wiggle_core::certify::DCParams;
use wiggle_core::rational::int;
use wiggle_core::{Laurent, TPoly};

pub struct Vars {
    pub k: Laurent,
    pub m: Laurent,
    pub l: Laurent,
    pub n: Laurent,
}

pub fn vars(p: &DCParams) -> Vars {
    Vars {
        k: Laurent::lambda_mu_pow(2 * p.k, 0),
        m: Laurent::lambda_mu_pow(2 * p.m, 0),
        l: Laurent::lambda_mu_pow(0, 2 * p.l),
        n: Laurent::lambda_mu_pow(0, 2 * p.n),
    }
}

pub fn c(v: i64) -> Laurent {
    Laurent::constant(int(v))
}

pub fn prod(fs: &[&Laurent]) -> Laurent {
    fs.iter().fold(Laurent::one(), |acc, f| &acc * *f)
}

pub fn alpha_table(v: &Vars) -> Vec<Laurent> {
    let (k, m, l, n) = (&v.k, &v.m, &v.l, &v.n);
    let one = &c(1);
    let (k1, m1, l1, n1) = (k - one, m - one, l - one, n - one);
    let (k2, m2, l2, n2) = (k * k, m * m, l * l, n * n);
    let (ln, lm) = (l - n, m - k);

    let a0 = prod(&[k, &m2, l, &n2]) - prod(&[&k2, m, &l2, n]);

    let a1 = -(m * &(prod(&[l, n, &l1, &n1, k])
        - prod(&[l, &l1, &(l - &(n * &c(3)) + n2.clone()), &k2])
        + prod(&[l, &l1, &ln, &(&k2 * k)])
        - prod(&[&n2, &l1, &l1, m])
        - prod(&[&n2, &l1, &m2])
        + prod(&[&(n2.clone() + prod(&[&l2, &n2]) + prod(&[&l2, n]) - prod(&[l, &n2]) * c(3)), k, m])
        + prod(&[l, n, &(c(1) - l * &c(2) + n.clone()), &k2, m])
        + prod(&[&n2, &l1, k, &m2])));

    let a2 = prod(&[m, &k1, &l1])
        * (-prod(&[&n1, &(l2.clone() + n.clone() - prod(&[l, n]) * c(3)), k])
            + prod(&[
                &(l.clone() - l2.clone() * c(3) - n.clone() + prod(&[l, n]) * c(3) + prod(&[&l2, n])
                    - prod(&[l, &n2])),
                &k2,
            ])
            - prod(&[n, &l1, &(-l.clone() + n * &c(3) - c(1)), m])
            + prod(&[n, &(l.clone() - n * &c(3) + prod(&[l, n]) + c(1)), &m2])
            - prod(&[l, &l1, &n1, k, m])
            + prod(&[&l1, &ln, &k2, m])
            - prod(&[&ln, &n1, k, &m2]));

    let a3 = -prod(&[m, &k1, &l1])
        * (-prod(&[&n1, &(l.clone() - l2.clone() * c(2) - n * &c(2) + prod(&[l, n]) * c(3)), k])
            - prod(&[
                &(l * &c(2) - l2.clone() * c(3) - n * &c(2) + n2.clone() + prod(&[l, n]) * c(2)
                    + prod(&[&l2, n]) * c(2)
                    - prod(&[l, &n2]) * c(2)),
                &k2,
            ])
            + prod(&[
                &(-l.clone() + l2.clone() + n * &c(2) - n2.clone() * c(3) - prod(&[&l2, n]) * c(2)
                    + prod(&[l, &n2]) * c(3)),
                m,
            ])
            + prod(&[
                &(l.clone() - n * &c(2) + n2.clone() * c(3) - prod(&[l, n]) + prod(&[&l2, n])
                    - prod(&[l, &n2]) * c(2)),
                &m2,
            ])
            + prod(&[l, &l1, &n1, k, m])
            + prod(&[&l1, &ln, &(n - &c(2)), &k2, m])
            + prod(&[&(l - &c(2)), &n1, &(-ln.clone()), k, &m2]));

    let a4 = prod(&[m, &k1, &k1, &m1, &lm, &l1, &l1, &ln, &n1]);
    vec![a0, a1, a2, a3, a4]
}

pub fn tau_table(v: &Vars) -> Vec<Laurent> {
    let (k, m, l, n) = (&v.k, &v.m, &v.l, &v.n);
    let one = &c(1);
    let (k1, m1, l1, n1) = (k - one, m - one, l - one, n - one);
    let (k2, m2, l2, n2) = (k * k, m * m, l * l, n * n);
    let ln = l - n;
    let nl = -ln.clone();

    let base = prod(&[k, l]) - prod(&[m, n]);
    let t0 = &base * &base;

    let t1 = prod(&[l, &ln, &n1, k])
        - prod(&[l, &(-l.clone() * c(3) + n.clone() + prod(&[l, n]) + c(1)), &k2])
        + prod(&[n, &l1, &nl, m])
        - prod(&[n, &(l.clone() - n * &c(3) + prod(&[l, n]) + c(1)), &m2])
        + prod(&[&l1, &n1, &(l + n), k, m])
        - prod(&[&l1, &ln, &k2, m])
        + prod(&[&ln, &n1, k, &m2]);

    let t2 = prod(&[&(l * &c(2) - c(1)), &ln, &n1, k])
        + prod(&[
            &(-l.clone() * c(2) + l2.clone() * c(3) + n.clone() - prod(&[l, n]) - prod(&[&l2, n]) * c(2)
                + prod(&[l, &n2])),
            &k2,
        ])
        + prod(&[&l1, &nl, &(n * &c(2) - c(1)), m])
        + prod(&[
            &(l.clone() - n * &c(2) + n2.clone() * c(3) - prod(&[l, n]) + prod(&[&l2, n])
                - prod(&[l, &n2]) * c(2)),
            &m2,
        ])
        + prod(&[&l1, &n1, &(l + n), k, m])
        + prod(&[&l1, &ln, &(n - &c(2)), &k2, m])
        + prod(&[&(l - &c(2)), &n1, &nl, k, &m2]);

    let t3 = prod(&[&k1, &(k - m), &m1, &l1, &ln, &n1]);
    vec![t0, t1, t2, t3]
}

pub fn resultant_formula(v: &Vars) -> Laurent {
    let (k, m, l, n) = (&v.k, &v.m, &v.l, &v.n);
    let one = &c(1);
    let (k1, m1, l1, n1) = (k - one, m - one, l - one, n - one);
    let km = k - m;
    let ln = l - n;
    let last = &(&ln * &(&(k * m) - one)) + &(&(m - k) * &(&(l * n) - one));
    -prod(&[
        &k.pow(3),
        &m.pow(4),
        &l.pow(4),
        &n.pow(3),
        &k1.pow(3),
        &l1.pow(4),
        &m1,
        &n1.pow(6),
        &km.pow(6),
        &ln.pow(3),
        &(&(l * m) - &(k * n)),
        &(&(m * n) - &(k * l)),
        &(&last * &last),
    ])
}

/// τ when k = m: −K(L−N)²·(t(K−1) − 1)·(t(K−1) + K).
pub fn equal_x_tau(v: &Vars) -> TPoly {
    let km1 = &v.k - &c(1);
    let ln = &v.l - &v.n;
    let f1 = TPoly::from_coeffs(vec![-c(1), km1.clone()]);
    let f2 = TPoly::from_coeffs(vec![v.k.clone(), km1]);
    (&f1 * &f2).scale(&-prod(&[&v.k, &ln, &ln]))
}

/// τ when (m, n) = (−k, −l), cleared of its rational prefactor:
/// (K²L²)⁻¹·(t(K−1)(L−1) + KL + 1)²·((K²−1)(L²−1)t + (KL−1)²).
pub fn inverse_pair_tau(v: &Vars) -> TPoly {
    let (k2, l2) = (&v.k * &v.k, &v.l * &v.l);
    let lin = TPoly::from_coeffs(vec![&(&v.k * &v.l) + &c(1), &(&v.k - &c(1)) * &(&v.l - &c(1))]);
    let kl1 = &(&v.k * &v.l) - &c(1);
    let third = TPoly::from_coeffs(vec![&kl1 * &kl1, &(&k2 - &c(1)) * &(&l2 - &c(1))]);
    let scale = (&k2 * &l2).unit_inverse().unwrap();
    (&(&lin * &lin) * &third).scale(&scale)
}

pub fn coeffs(p: &TPoly, len: usize) -> Vec<Laurent> {
    (0..len).map(|i| p.coeff(i)).collect()
}
