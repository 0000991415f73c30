//! Factorization of the trace polynomial for double commutators
//! `[[x^k, y^l], [x^m, y^n]]` and certificates that the wiggle contains a
//! non-trivial unipotent.
//!
//! With `P = (λ^2k − 1)(μ^2l − 1)(λ^2m − 1)(μ^2n − 1)` and
//! `D = λ^2(k+m) μ^2(l+n)`:
//!
//! ```text
//! T − 2 = (P/D)²  · t²(t+1)² · τ
//! γ − 1 = (P/D²)  · t(t+1)   · γ_inner
//! α − 1 = (P/D²)  · t(t+1)   · α_core
//! β     = (P/D²)  · t(t+1)   · β_core
//! ```
//!
//! A root of `τ` outside `{0, −1}` that is not a root of `γ_inner` gives a
//! non-trivial unipotent.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::qpoly::{clear_denominators, gcd, remove_roots, squarefree_part};
use crate::rational::int;
use crate::ring::{pow_i64, ExactDiv, Field, Ring};
use crate::wiggle::{assoc_polys, gamma_of, recursion_matrix, DiagonalSlot, SpecializedWiggle};
use crate::words::{cyclic_reduce, double_commutator, double_commutator_pairs, CyclicForm};
use crate::{Laurent, QPoly, Rat};

/// Exponents of `[[x^k, y^l], [x^m, y^n]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DCParams {
    pub k: i64,
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl DCParams {
    pub fn new(k: i64, l: i64, m: i64, n: i64) -> Self {
        DCParams { k, l, m, n }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.k, self.l, self.m, self.n]
    }

    /// `(l, k, n, m)`: the same word up to conjugation after swapping `x` and `y`.
    pub fn swapped(&self) -> Self {
        DCParams::new(self.l, self.k, self.n, self.m)
    }

    /// The cyclic rotation the polynomials are computed from.
    pub fn pairs(&self) -> [(i64, i64); 7] {
        double_commutator_pairs(self.k, self.l, self.m, self.n)
    }

    pub fn is_trivial(&self) -> bool {
        cyclic_reduce(&double_commutator(self.k, self.l, self.m, self.n)) == CyclicForm::Trivial
    }
}

/// The pieces of the factorization above, over symbolic or specialized
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CorePolysOf<C: Ring> {
    /// `P`.
    pub prefactor_num: C,
    /// `D`.
    pub prefactor_den: C,
    pub tau: Poly<C>,
    pub gamma_inner: Poly<C>,
    pub alpha_core: Poly<C>,
    pub beta_core: Poly<C>,
}

pub type CorePolys = CorePolysOf<Laurent>;

/// Divides out the known factors. `den_inv` is `D⁻¹` in the coefficient ring.
fn extract<C: ExactDiv>(
    alpha: &Poly<C>,
    beta: &Poly<C>,
    gamma_sigma: &Poly<C>,
    num: C,
    den: C,
    den_inv: &C,
) -> Result<CorePolysOf<C>> {
    let one = Poly::<C>::one();
    let tt1 = Poly::<C>::t_t1();
    let pref = num.clone() * den_inv.clone();
    let pref2 = pref.clone() * den_inv.clone();
    let gamma = alpha + &(beta * &Poly::t());
    let trace_m2 = &(&gamma + gamma_sigma) - &Poly::constant(C::one().mul_int(2));

    let tau = trace_m2.exact_div(&(&tt1 * &tt1))?.div_coeffs(&(pref.clone() * pref))?;
    let core = |f: &Poly<C>| f.exact_div(&tt1)?.div_coeffs(&pref2);
    Ok(CorePolysOf {
        prefactor_num: num,
        prefactor_den: den,
        tau,
        gamma_inner: core(&(&gamma - &one))?,
        alpha_core: core(&(alpha - &one))?,
        beta_core: core(beta)?,
    })
}

fn prefactor_parts<C: Ring>(p: &DCParams, lam_pow: impl Fn(i64) -> C, mu_pow: impl Fn(i64) -> C) -> (C, C) {
    let f = |v: C| v - C::one();
    let num = f(lam_pow(2 * p.k)) * f(mu_pow(2 * p.l)) * f(lam_pow(2 * p.m)) * f(mu_pow(2 * p.n));
    let den = lam_pow(2 * (p.k + p.m)) * mu_pow(2 * (p.l + p.n));
    (num, den)
}

/// Symbolic factorization over `ℚ[λ^±1, μ^±1]`.
pub fn core_polys(p: &DCParams) -> Result<CorePolys> {
    if p.is_trivial() {
        return Err(Error::TrivialWord);
    }
    let ap = assoc_polys(&p.pairs());
    let gamma_sigma = gamma_of(&ap).sigma();
    let (num, den) = prefactor_parts(p, |a| Laurent::lambda_mu_pow(a, 0), |b| Laurent::lambda_mu_pow(0, b));
    let den_inv = den.unit_inverse()?;
    extract(&ap.alpha, &ap.beta, &gamma_sigma, num, den, &den_inv)
}

/// The same factorization computed directly over `ℚ` at `(λ₀, μ₀)`.
///
/// Requires the prefactor to be nonzero, i.e. `λ₀, μ₀ ∉ {0, 1, −1}`.
pub fn core_polys_at(p: &DCParams, lam: &Rat, mu: &Rat) -> Result<CorePolysOf<Rat>> {
    core_polys_over(p, lam, mu)
}

fn core_polys_over<F: Field + ExactDiv>(p: &DCParams, lam: &F, mu: &F) -> Result<CorePolysOf<F>> {
    if p.is_trivial() {
        return Err(Error::TrivialWord);
    }
    let pairs = p.pairs();
    let up = recursion_matrix(&pairs, &DiagonalSlot::specialized_upper(lam, mu)?, None)?;
    let inv = recursion_matrix(&pairs, &DiagonalSlot::specialized_upper(&lam.inv(), &mu.inv())?, None)?;
    let gamma_sigma = &inv.e11 + &(&inv.e21 * &Poly::t());
    let (num, den) = prefactor_parts(p, |a| pow_i64(lam, a), |b| pow_i64(mu, b));
    if num.is_zero() {
        return Err(Error::Precondition("prefactor vanishes at this specialization".into()));
    }
    let den_inv = den.inv();
    extract(&up.e11, &up.e21, &gamma_sigma, num, den, &den_inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Certified,
    /// Certified for the conjugate word with `x` and `y` exchanged.
    SwappedCertified,
    TrivialWord,
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Certified => "Certified",
            Status::SwappedCertified => "SwappedCertified",
            Status::TrivialWord => "TrivialWord",
            Status::Inconclusive => "Inconclusive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Status::Certified, Status::SwappedCertified, Status::TrivialWord, Status::Inconclusive]
            .into_iter()
            .find(|st| st.as_str() == s)
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Status::Certified | Status::SwappedCertified)
    }
}

/// Exact facts about `h` at the recorded specialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Checks {
    /// `h | T − 2`.
    pub divides_trace_minus_2: bool,
    /// `gcd(h, t(t+1)) = 1`.
    pub coprime_t_t1: bool,
    /// `gcd(h, γ − 1) = 1`.
    pub coprime_gamma_minus_1: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.divides_trace_minus_2 && self.coprime_t_t1 && self.coprime_gamma_minus_1
    }

    fn compute(h: &QPoly, trace_m2: &QPoly, gamma_m1: &QPoly) -> Self {
        Checks {
            divides_trace_minus_2: trace_m2.rem(h).is_zero(),
            coprime_t_t1: gcd(h, &QPoly::t_t1()).is_one(),
            coprime_gamma_minus_1: gcd(h, gamma_m1).is_one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub params: DCParams,
    pub status: Status,
    pub lambda: Option<Rat>,
    pub mu: Option<Rat>,
    /// Primitive integer polynomial whose roots all give non-trivial unipotents.
    pub h: Option<QPoly>,
    pub checks: Checks,
    pub attempts: u32,
}

impl Certificate {
    /// Parameters of the word the certificate is about; swapped for
    /// [`Status::SwappedCertified`].
    pub fn word_params(&self) -> DCParams {
        match self.status {
            Status::SwappedCertified => self.params.swapped(),
            _ => self.params,
        }
    }

    fn uncertified(params: DCParams, status: Status, attempts: u32) -> Self {
        Certificate { params, status, lambda: None, mu: None, h: None, checks: Checks::default(), attempts }
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub seed: u64,
    /// Specializations tried per orientation.
    pub max_attempts: u32,
    /// Used for the first attempt instead of a random draw.
    pub specialization: Option<(Rat, Rat)>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { seed: 0, max_attempts: 5, specialization: None }
    }
}

/// A nonzero rational `p/q` with `|p|, q ≤ 100`, never `±1`.
pub fn random_parameter(rng: &mut impl Rng) -> Rat {
    loop {
        let p: i64 = rng.gen_range(-100..=100);
        let q: i64 = rng.gen_range(1..=100);
        if p == 0 {
            continue;
        }
        let r = Rat::new(p.into(), q.into());
        if r.abs() != Rat::one() {
            return r;
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for one tuple of a grid run, independent of iteration order.
pub fn tuple_seed(base: u64, p: &DCParams) -> u64 {
    p.as_array()
        .iter()
        .fold(splitmix64(base), |acc, &e| splitmix64(acc ^ e as u64))
}

enum Attempt {
    Found(QPoly, Checks),
    Degenerate,
}

fn attempt(p: &DCParams, lam: &Rat, mu: &Rat) -> Result<Attempt> {
    let degenerate = |x: &Rat| x.is_zero() || x.abs() == Rat::one();
    if degenerate(lam) || degenerate(mu) {
        log::debug!("{p:?}: specialization ({lam}, {mu}) kills the prefactor");
        return Ok(Attempt::Degenerate);
    }
    let core = core_polys_at(p, lam, mu)?;
    if core.tau.is_zero() {
        return Ok(Attempt::Degenerate);
    }
    let zero = Rat::zero();
    let minus_one = -Rat::one();
    if core.tau.eval(&zero).is_zero() || core.tau.eval(&minus_one).is_zero() {
        log::debug!("{p:?}: τ vanishes at 0 or −1 for ({lam}, {mu})");
    }
    let s = remove_roots(&squarefree_part(&core.tau), &[zero, minus_one]);
    let h = s.div_rem(&gcd(&s, &core.gamma_inner)).0;
    if h.degree().unwrap_or(0) == 0 {
        return Ok(Attempt::Degenerate);
    }
    let h = clear_denominators(&h);
    let spec = SpecializedWiggle::from_pairs(&p.pairs(), lam, mu)?;
    let trace_m2 = &spec.trace() - &QPoly::constant(int(2));
    let gamma_m1 = &spec.gamma - &QPoly::one();
    Ok(Attempt::Found(h.clone(), Checks::compute(&h, &trace_m2, &gamma_m1)))
}

/// Searches for a specialization where some root of `τ` certifies a
/// non-trivial unipotent in the image of the double commutator.
///
/// Errors only on an inexact division, which would mean the factorization
/// itself failed.
pub fn certify(p: &DCParams, opts: &CertifyOptions) -> Result<Certificate> {
    if p.is_trivial() {
        return Ok(Certificate::uncertified(*p, Status::TrivialWord, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut attempts = 0u32;
    let mut first = opts.specialization.clone();
    for (target, status) in [(*p, Status::Certified), (p.swapped(), Status::SwappedCertified)] {
        for _ in 0..opts.max_attempts {
            let (lam, mu) = first
                .take()
                .unwrap_or_else(|| (random_parameter(&mut rng), random_parameter(&mut rng)));
            attempts += 1;
            match attempt(&target, &lam, &mu)? {
                Attempt::Found(h, checks) => {
                    return Ok(Certificate {
                        params: *p,
                        status,
                        lambda: Some(lam),
                        mu: Some(mu),
                        h: Some(h),
                        checks,
                        attempts,
                    });
                }
                Attempt::Degenerate => {
                    log::debug!("{target:?}: no certifying factor at ({lam}, {mu}), resampling");
                }
            }
        }
    }
    Ok(Certificate::uncertified(*p, Status::Inconclusive, attempts))
}

/// Re-derives the checks of a certified certificate from scratch through the
/// symbolic associated polynomials, sharing nothing with [`certify`] beyond
/// the recursion and polynomial arithmetic.
pub fn verify_certificate(cert: &Certificate) -> Result<Checks> {
    if !cert.status.is_certified() {
        return Err(Error::Precondition(format!("status {} carries no certificate", cert.status.as_str())));
    }
    let (Some(lam), Some(mu), Some(h)) = (&cert.lambda, &cert.mu, &cert.h) else {
        return Err(Error::Precondition("certificate is missing λ, μ or h".into()));
    };
    if h.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition("h must have positive degree".into()));
    }
    let ap = assoc_polys(&cert.word_params().pairs());
    let gamma = gamma_of(&ap);
    let trace_m2 = (&(&gamma + &gamma.sigma()).specialize_rat(lam, mu)?) - &QPoly::constant(int(2));
    let gamma_m1 = &gamma.specialize_rat(lam, mu)? - &QPoly::one();
    Ok(Checks::compute(h, &trace_m2, &gamma_m1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn trivial_params() {
        for p in [(0, 1, 2, 3), (1, 0, 2, 3), (2, 3, 2, 3), (1, 2, 1, 2)] {
            let p = DCParams::new(p.0, p.1, p.2, p.3);
            assert!(p.is_trivial());
            assert_eq!(core_polys(&p), Err(Error::TrivialWord));
            assert_eq!(certify(&p, &CertifyOptions::default()).unwrap().status, Status::TrivialWord);
        }
        assert!(!DCParams::new(1, 1, 2, 3).is_trivial());
        assert!(!DCParams::new(1, 1, -1, -1).is_trivial());
    }

    #[test]
    fn commutator_intro_tuple_certifies() {
        let p = DCParams::new(1, 1, 2, 3);
        let cert = certify(&p, &CertifyOptions::default()).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert!(cert.checks.all());
        assert_eq!(verify_certificate(&cert).unwrap(), cert.checks);
    }

    #[test]
    fn seeded_runs_repeat() {
        let p = DCParams::new(2, -1, 3, 1);
        let o = CertifyOptions { seed: 17, ..Default::default() };
        assert_eq!(certify(&p, &o).unwrap(), certify(&p, &o).unwrap());
    }

    #[test]
    fn degenerate_start_is_resampled() {
        let p = DCParams::new(1, 1, 2, 3);
        let o = CertifyOptions { specialization: Some((int(1), int(2))), ..Default::default() };
        let cert = certify(&p, &o).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert!(cert.attempts >= 2);
    }

    #[test]
    fn tuple_seeds_differ() {
        let a = tuple_seed(0, &DCParams::new(1, 2, 3, 1));
        assert_ne!(a, tuple_seed(0, &DCParams::new(1, 2, 1, 3)));
        assert_ne!(a, tuple_seed(1, &DCParams::new(1, 2, 3, 1)));
        assert_eq!(a, tuple_seed(0, &DCParams::new(1, 2, 3, 1)));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let p = DCParams::new(1, 1, 2, 3);
        let mut cert = certify(&p, &CertifyOptions::default()).unwrap();
        cert.h = Some(QPoly::from_coeffs(vec![rat(1, 3), int(1)]));
        assert!(!verify_certificate(&cert).unwrap().divides_trace_minus_2);
    }
}
