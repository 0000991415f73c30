//! Resultants over an integral domain with exact division.
//!
//! Convention: `res(f, g) = lc(f)^deg(g) · ∏_{f(a)=0} g(a)`, which equals the
//! determinant of the Sylvester matrix with the rows of `f` on top.
//!
//! [`resultant`] runs the subresultant PRS; [`sylvester_resultant`] runs
//! fraction-free Bareiss elimination on the Sylvester matrix. The two share
//! no code beyond ring arithmetic and serve as cross-checks for each other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::ring::{ExactDiv, Ring};
use crate::{Laurent, Rat, TPoly};

fn exact<C: ExactDiv>(a: &C, b: &C) -> C {
    a.div_exact(b)
        .expect("subresultant PRS division must be exact over an integral domain")
}

/// Subresultant PRS resultant. Zero if either input is zero.
pub fn resultant<C: ExactDiv>(f: &Poly<C>, g: &Poly<C>) -> C {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return C::zero();
    };
    let mut sign_neg = false;
    let (mut a, mut b) = if df < dg {
        // res(g, f) = (−1)^(deg f · deg g) res(f, g)
        sign_neg = df % 2 == 1 && dg % 2 == 1;
        (g.clone(), f.clone())
    } else {
        (f.clone(), g.clone())
    };
    if b.is_constant() {
        // res(a, c) = c^deg a
        let c = b.coeff(0);
        let r = c.pow_u64(a.degree().unwrap() as u64);
        return if sign_neg { -r } else { r };
    }
    let mut gg = C::one();
    let mut h = C::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = gg.clone() * h.pow_u64(delta);
        b = r.map_coeffs(|c| exact(c, &divisor));
        gg = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            exact(&gg.pow_u64(delta), &h.pow_u64(delta - 1))
        };
        match b.degree() {
            None => return C::zero(),
            Some(0) => {
                let da = a.degree().unwrap() as u64;
                let lb = b.coeff(0);
                let out = exact(&lb.pow_u64(da), &h.pow_u64(da - 1));
                return if sign_neg { -out } else { out };
            }
            Some(_) => {}
        }
    }
}

/// The Sylvester matrix of `f` (top `deg g` rows) and `g` (bottom `deg f` rows),
/// coefficients from the highest degree down.
pub fn sylvester_matrix<C: Ring>(f: &Poly<C>, g: &Poly<C>) -> Vec<Vec<C>> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for (p, d, copies) in [(f, df, dg), (g, dg, df)] {
        for shift in 0..copies {
            let mut row = vec![C::zero(); n];
            for i in 0..=d {
                row[shift + i] = p.coeff(d - i);
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
pub fn bareiss_det<C: ExactDiv>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = exact(&v, &prev);
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Resultant as the Sylvester determinant.
pub fn sylvester_resultant<C: ExactDiv>(f: &Poly<C>, g: &Poly<C>) -> C {
    match (f.degree(), g.degree()) {
        (None, _) | (_, None) => C::zero(),
        (Some(0), Some(dg)) => f.coeff(0).pow_u64(dg as u64),
        (Some(df), Some(0)) => g.coeff(0).pow_u64(df as u64),
        _ => bareiss_det(sylvester_matrix(f, g)),
    }
}

/// `f` times the lcm of its coefficient denominators, over `ℤ`.
fn integer_form(f: &TPoly) -> (Poly<LaurentPoly<BigInt>>, BigInt) {
    let lcm = f
        .coeffs()
        .iter()
        .flat_map(|c| c.terms().map(|(_, r)| r.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let scaled = f.map_coeffs(|c| c.map_coeffs(|r| (r * Rat::from_integer(lcm.clone())).to_integer()));
    (scaled, lcm)
}

/// [`resultant`] in `ℚ[λ^±1, μ^±1]`, with denominators cleared so the
/// elimination runs over integer coefficients.
pub fn resultant_laurent(f: &TPoly, g: &TPoly) -> Laurent {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Laurent::zero();
    };
    let (fi, sf) = integer_form(f);
    let (gi, sg) = integer_form(g);
    let r = resultant(&fi, &gi).map_coeffs(|c| Rat::from_integer(c.clone()));
    let scale = Rat::from_integer(sf.pow(dg as u32) * sg.pow(df as u32));
    r.map_coeffs(|c| c / scale.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::rational::int;
    use crate::{Laurent, QPoly, Rat, TPoly};

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    fn from_roots(lc: i64, roots: &[i64]) -> QPoly {
        roots.iter().fold(q(&[lc]), |acc, &r| &acc * &q(&[-r, 1]))
    }

    /// `lc(f)^deg g · ∏ g(root)` straight from the definition.
    fn by_roots(lc: i64, roots: &[i64], g: &QPoly) -> Rat {
        let dg = g.degree().unwrap() as u64;
        roots
            .iter()
            .fold(int(lc).pow_u64(dg), |acc, &r| acc * g.eval(&int(r)))
    }

    #[test]
    fn linear_case_convention() {
        // res(t − a, t − b) = a − b under lc(f)^deg g ∏ g(roots of f)
        for (a, b) in [(2, 7), (-3, 4), (5, 5)] {
            let f = q(&[-a, 1]);
            let g = q(&[-b, 1]);
            assert_eq!(resultant(&f, &g), int(a - b));
            assert_eq!(sylvester_resultant(&f, &g), int(a - b));
        }
    }

    #[test]
    fn matches_root_product_definition() {
        let cases: &[(i64, &[i64], &[i64])] = &[
            (2, &[1, -3, 4], &[7, 0, -2, 1, 1]),
            (-1, &[0, 2], &[3, 5, 1]),
            (3, &[1, 1, 5, 6], &[1, 2]),
            (1, &[2], &[4, 0, 0, 0, 0, 1]),
        ];
        for &(lc, roots, gc) in cases {
            let f = from_roots(lc, roots);
            let g = q(gc);
            let expected = by_roots(lc, roots, &g);
            assert_eq!(resultant(&f, &g), expected, "prs {roots:?}");
            assert_eq!(sylvester_resultant(&f, &g), expected, "bareiss {roots:?}");
        }
    }

    #[test]
    fn zero_iff_common_root() {
        let f = from_roots(1, &[1, 2, 3]);
        let g = from_roots(2, &[3, -5]);
        assert!(resultant(&f, &g).is_zero());
        let g2 = from_roots(2, &[4, -5]);
        assert!(!resultant(&f, &g2).is_zero());
    }

    #[test]
    fn laurent_routes_agree() {
        let lam = Laurent::lambda();
        let mu = Laurent::mu();
        let f = TPoly::from_coeffs(vec![lam.clone(), Laurent::mu_bar(1), Laurent::one()]);
        let g = TPoly::from_coeffs(vec![
            Laurent::lambda_bar(2),
            &lam * &mu,
            Laurent::one() + lam.clone(),
            mu.clone(),
        ]);
        let a = resultant(&f, &g);
        let b = sylvester_resultant(&f, &g);
        assert_eq!(a, b);
        assert_eq!(resultant_laurent(&f, &g), a);
        let half = Laurent::constant(crate::rational::rat(1, 2));
        let f2 = f.scale(&half);
        assert_eq!(resultant_laurent(&f2, &g), resultant(&f2, &g));
        assert!(!a.is_zero());
        // swapping arguments: (−1)^(2·3) = 1
        assert_eq!(resultant(&g, &f), a);
    }
}
