//! Explicit elements `g` whose wiggle is a non-trivial unipotent.
//!
//! A rational root of `h` gives an exact witness. Otherwise an exact
//! certificate modulo an irreducible factor `h₁` proves that every root of
//! `h₁` works, and one root is approximated in Gaussian rationals for display
//! with an a posteriori residual bound.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};

use crate::aberth::aberth;
use crate::certify::{Certificate, DCParams};
use crate::error::{Error, Result};
use crate::mat2::{unimodular_with_xi_det, Mat2};
use crate::qpoly::{gcd, isolate_real_roots, split_linear_factors};
use crate::rational::{int, modulus_lower, modulus_upper, round_complex, ten_pow_neg};
use crate::wiggle::{assoc_polys, eval_normal_form, SpecializedWiggle};
use crate::{CRat, QPoly, Rat};

/// Exact facts about the chosen factor `h₁` in `ℚ[t]/(h₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCertificate {
    pub factor: QPoly,
    /// Degree at most three with no rational root, or linear.
    pub irreducible: bool,
    /// `T − 2 ≡ 0 (mod h₁)`.
    pub trace_minus_2_vanishes: bool,
    /// `gcd(h₁, t(t+1)) = 1`.
    pub coprime_t_t1: bool,
    /// `β·β^σ` is invertible modulo `h₁`.
    pub beta_product_invertible: bool,
    /// `gcd(h₁, γ − 1) = 1`.
    pub coprime_gamma_minus_1: bool,
}

impl ModularCertificate {
    pub fn holds(&self) -> bool {
        self.trace_minus_2_vanishes
            && self.coprime_t_t1
            && self.beta_product_invertible
            && self.coprime_gamma_minus_1
    }

    fn compute(factor: &QPoly, spec: &SpecializedWiggle, irreducible: bool) -> Self {
        let trace_m2 = &spec.trace() - &QPoly::constant(int(2));
        let beta_prod = &spec.beta * &spec.beta_sigma;
        let gamma_m1 = &spec.gamma - &QPoly::one();
        ModularCertificate {
            factor: factor.clone(),
            irreducible,
            trace_minus_2_vanishes: trace_m2.rem(factor).is_zero(),
            coprime_t_t1: gcd(factor, &QPoly::t_t1()).is_one(),
            beta_product_invertible: gcd(factor, &beta_prod).is_one(),
            coprime_gamma_minus_1: gcd(factor, &gamma_m1).is_one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum WitnessValue {
    Exact { t0: Rat, g: Mat2<Rat>, u: Mat2<Rat> },
    Approximate {
        t0: CRat,
        g: Mat2<CRat>,
        u: Mat2<CRat>,
        /// Radius of a disc around `t0` that contains a root of `h₁`.
        root_radius: Rat,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Parameters of the word the witness is for (swapped if the certificate was).
    pub word: DCParams,
    pub lambda: Rat,
    pub mu: Rat,
    pub value: WitnessValue,
    /// Upper bound on `|tr u − 2|` and `|det u − 1|`; zero for exact witnesses.
    pub residual: Rat,
    pub modular: ModularCertificate,
}

impl Witness {
    pub fn is_exact(&self) -> bool {
        matches!(self.value, WitnessValue::Exact { .. })
    }
}

/// Builds a witness from a certified certificate. Approximate witnesses have
/// residual at most `10^-digits`.
pub fn build_witness(cert: &Certificate, digits: u32) -> Result<Witness> {
    if !cert.status.is_certified() {
        return Err(Error::Precondition(format!(
            "a witness needs a certified certificate, got {}",
            cert.status.as_str()
        )));
    }
    let (Some(lam), Some(mu), Some(h)) = (&cert.lambda, &cert.mu, &cert.h) else {
        return Err(Error::Precondition("certificate is missing λ, μ or h".into()));
    };
    let word = cert.word_params();
    let spec = SpecializedWiggle::from_pairs(&word.pairs(), lam, mu)?;
    let (linear, rest) = split_linear_factors(h);

    if let Some(lin) = linear.first() {
        let t0 = -lin.coeff(0);
        let g = unimodular_with_xi_det(&t0);
        let ap = assoc_polys(&word.pairs());
        let u = eval_normal_form(&ap, lam, mu, &g)?.matrix;
        if u.trace() != int(2) || !u.det().is_one() || u.is_identity() {
            return Err(Error::Precondition(format!("root {t0} of h does not give a unipotent")));
        }
        return Ok(Witness {
            word,
            lambda: lam.clone(),
            mu: mu.clone(),
            value: WitnessValue::Exact { t0, g, u },
            residual: Rat::zero(),
            modular: ModularCertificate::compute(lin, &spec, true),
        });
    }

    let deg = rest.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::Precondition("h has no roots".into()));
    }
    let modular = ModularCertificate::compute(&rest, &spec, deg <= 3);
    let tol = ten_pow_neg(digits);
    let embed = |r: &Rat| Complex::new(r.clone(), Rat::zero());
    let residual_at = |z: &CRat| -> Result<(Rat, Mat2<CRat>, Mat2<CRat>)> {
        let g = unimodular_with_xi_det(z);
        let u = spec.eval(&g, embed)?;
        let tr = modulus_upper(&(u.trace() - embed(&int(2))));
        let det = modulus_upper(&(u.det() - CRat::one()));
        Ok((tr.max(det), g, u))
    };

    let start = starting_point(&rest).ok_or(Error::PrecisionExhausted { digits })?;
    let deriv = rest.derivative();
    let mut bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64;
    let mut z = start;
    for _ in 0..200 {
        let fz = rest.eval_with(&z, embed);
        let dfz = deriv.eval_with(&z, embed);
        if dfz.is_zero() {
            break;
        }
        let step = fz / dfz.clone();
        z = round_complex(&(z - step.clone()), bits);
        if modulus_upper(&step) * Rat::from_integer(BigInt::one() << bits) > int(256) {
            continue;
        }
        let (residual, g, u) = residual_at(&z)?;
        if residual <= tol {
            let fz = rest.eval_with(&z, embed);
            let dfz = deriv.eval_with(&z, embed);
            let lower = modulus_lower(&dfz);
            if lower.is_zero() {
                break;
            }
            let root_radius = int(deg as i64) * modulus_upper(&fz) / lower;
            return Ok(Witness {
                word,
                lambda: lam.clone(),
                mu: mu.clone(),
                value: WitnessValue::Approximate { t0: z, g, u, root_radius },
                residual,
                modular,
            });
        }
        bits += 64;
    }
    Err(Error::PrecisionExhausted { digits })
}

/// A real root's isolating interval midpoint if there is one, otherwise the
/// Aberth approximation with the smallest imaginary part.
fn starting_point(f: &QPoly) -> Option<CRat> {
    if let Some((lo, hi)) = isolate_real_roots(f).into_iter().next() {
        let (mut lo, mut hi) = (lo, hi);
        let sign_hi = f.eval(&hi);
        let width = Rat::new(1.into(), BigInt::one() << 60);
        while &hi - &lo > width {
            let mid = (&lo + &hi) / int(2);
            let v = f.eval(&mid);
            if v.is_zero() {
                return Some(Complex::new(mid, Rat::zero()));
            }
            if (v > Rat::zero()) == (sign_hi > Rat::zero()) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return Some(Complex::new((lo + hi) / int(2), Rat::zero()));
    }
    let monic = f.monic();
    let coeffs: Vec<f64> = monic.coeffs().iter().map(|c| c.to_f64()).collect::<Option<_>>()?;
    let roots = aberth(&coeffs, 500, 1e-14)?;
    let best = roots
        .into_iter()
        .min_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap_or(std::cmp::Ordering::Equal))?;
    Some(Complex::new(Rat::from_float(best.re)?, Rat::from_float(best.im)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{certify, CertifyOptions, Status};
    use crate::rational::rat;

    fn cert_at(p: DCParams, lam: i64, mu: i64) -> Certificate {
        let o = CertifyOptions { specialization: Some((int(lam), int(mu))), ..Default::default() };
        certify(&p, &o).unwrap()
    }

    #[test]
    fn inverse_pair_exact_witness() {
        let cert = cert_at(DCParams::new(1, 1, -1, -1), 2, 3);
        assert_eq!(cert.status, Status::Certified);
        assert_eq!(cert.attempts, 1);
        let w = build_witness(&cert, 64).unwrap();
        let WitnessValue::Exact { t0, g, u } = &w.value else {
            panic!("expected exact witness");
        };
        assert_eq!(*t0, rat(-49, 48));
        assert_eq!(*g, Mat2::new(int(1), int(1), rat(-49, 48), rat(-1, 48)));
        assert_eq!(u.trace(), int(2));
        assert!(u.det().is_one() && !u.is_identity());
        assert!(w.modular.holds());
    }

    #[test]
    fn generic_tuple_approximate_witness() {
        let cert = cert_at(DCParams::new(1, 1, 2, 3), 2, 2);
        assert_eq!(cert.status, Status::Certified);
        let w = build_witness(&cert, 64).unwrap();
        assert!(!w.is_exact());
        assert!(w.residual <= ten_pow_neg(50));
        assert!(w.modular.holds() && w.modular.irreducible);
    }

    #[test]
    fn complex_start_when_no_real_root() {
        let f = QPoly::from_coeffs(vec![int(2), int(1), int(1)]);
        let z = starting_point(&f).unwrap();
        assert!(modulus_upper(&f.eval_with(&z, |r| Complex::new(r.clone(), Rat::zero()))) < rat(1, 1_000_000));
        assert!(z.im != Rat::zero());
    }

    #[test]
    fn uncertified_is_rejected() {
        let cert = certify(&DCParams::new(1, 1, 1, 1), &CertifyOptions::default()).unwrap();
        assert!(matches!(build_witness(&cert, 64), Err(Error::Precondition(_))));
    }
}
