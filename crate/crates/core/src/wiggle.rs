//! Associated polynomials of the wiggle map `g ↦ w(x, y^g)` for diagonal
//! `x = diag(λ, λ⁻¹)`, `y = diag(μ, μ⁻¹)`, and its normal form
//!
//! ```text
//! Wiggle(g) = ((γ(t), β(t)·p), (−β^σ(t)·q, γ^σ(t)))   at t = det ξ_g,
//! ```
//!
//! where `ξ_g = ((t, p), (q, −t))` and `γ = α + β·t`.
//!
//! The recursion is generic over the coefficient ring so the same code
//! computes symbolically over `ℚ[λ^±1, μ^±1]` and numerically over `ℚ` at a
//! fixed `(λ₀, μ₀)`.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mat2::{xi_of, Mat2};
use crate::poly::Poly;
use crate::ring::{pow_i64, Field, Ring};
use crate::words::{CyclicForm, Word};
use crate::{QPoly, Rat, TPoly};

/// Cooperative cancellation flag shared between a caller and a long computation.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// One diagonal slot of the block matrices `X = ((x, x̄t), (0, x⁻¹))` and
/// `Y = ((y, 0), (ȳ, y⁻¹))`.
///
/// The upper-left slot has `x = λ`; the lower-right slot has `x = λ⁻¹` but
/// the same scalar bar `x̄ = λ − λ⁻¹`.
#[derive(Clone, Debug)]
pub struct DiagonalSlot<C> {
    pub x: C,
    pub x_inv: C,
    pub x_bar: C,
    pub y: C,
    pub y_inv: C,
    pub y_bar: C,
}

impl<C: Ring> DiagonalSlot<C> {
    /// Upper-left slot for torus parameters with the given inverses.
    pub fn upper(lam: C, lam_inv: C, mu: C, mu_inv: C) -> Self {
        DiagonalSlot {
            x_bar: lam.clone() - lam_inv.clone(),
            y_bar: mu.clone() - mu_inv.clone(),
            x: lam,
            x_inv: lam_inv,
            y: mu,
            y_inv: mu_inv,
        }
    }

    /// Lower-right slot: diagonal entries inverted, bars unchanged.
    pub fn lower(lam: C, lam_inv: C, mu: C, mu_inv: C) -> Self {
        let upper = Self::upper(lam, lam_inv, mu, mu_inv);
        DiagonalSlot {
            x: upper.x_inv,
            x_inv: upper.x,
            y: upper.y_inv,
            y_inv: upper.y,
            ..upper
        }
    }

    fn x_step(&self) -> Mat2<Poly<C>> {
        Mat2::new(
            Poly::constant(self.x.clone()),
            Poly::monomial(self.x_bar.clone(), 1),
            Poly::zero(),
            Poly::constant(self.x_inv.clone()),
        )
    }

    fn y_step(&self) -> Mat2<Poly<C>> {
        Mat2::new(
            Poly::constant(self.y.clone()),
            Poly::zero(),
            Poly::constant(self.y_bar.clone()),
            Poly::constant(self.y_inv.clone()),
        )
    }
}

impl<C: Ring> DiagonalSlot<LaurentPoly<C>> {
    pub fn symbolic_upper() -> Self {
        Self::upper(
            LaurentPoly::monomial(C::one(), 1, 0),
            LaurentPoly::monomial(C::one(), -1, 0),
            LaurentPoly::monomial(C::one(), 0, 1),
            LaurentPoly::monomial(C::one(), 0, -1),
        )
    }

    pub fn symbolic_lower() -> Self {
        Self::lower(
            LaurentPoly::monomial(C::one(), 1, 0),
            LaurentPoly::monomial(C::one(), -1, 0),
            LaurentPoly::monomial(C::one(), 0, 1),
            LaurentPoly::monomial(C::one(), 0, -1),
        )
    }
}

/// Runs the symbolic recursion over integer coefficients, which is all it
/// ever needs, and returns the matrix over `ℚ`.
fn symbolic_recursion(
    pairs: &[(i64, i64)],
    slot: &DiagonalSlot<LaurentPoly<BigInt>>,
    cancel: Option<&CancelToken>,
) -> Result<Mat2<TPoly>> {
    let m = recursion_matrix(pairs, slot, cancel)?;
    let to_rat = |f: &Poly<LaurentPoly<BigInt>>| -> TPoly {
        f.map_coeffs(|c| c.map_coeffs(|z| Rat::from_integer(z.clone())))
    };
    Ok(Mat2::new(to_rat(&m.e11), to_rat(&m.e12), to_rat(&m.e21), to_rat(&m.e22)))
}

impl<F: Field> DiagonalSlot<F> {
    pub fn specialized_upper(lam: &F, mu: &F) -> Result<Self> {
        if lam.is_zero() || mu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(Self::upper(lam.clone(), lam.inv(), mu.clone(), mu.inv()))
    }
}

/// `∏_{i=n}^{1} Y^b_i X^a_i`, the matrix whose first column is `(α, β)`.
pub fn recursion_matrix<C: Ring>(
    pairs: &[(i64, i64)],
    slot: &DiagonalSlot<C>,
    cancel: Option<&CancelToken>,
) -> Result<Mat2<Poly<C>>> {
    let (x, y) = (slot.x_step(), slot.y_step());
    let mut m = Mat2::identity();
    for &(a, b) in pairs {
        if cancel.is_some_and(CancelToken::is_cancelled) {
            return Err(Error::Cancelled);
        }
        let step = &y.pow_unimodular(b) * &x.pow_unimodular(a);
        m = &step * &m;
    }
    Ok(m)
}

/// The associated polynomials `α, β ∈ R₀[t]` of a word.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocPolys {
    pub alpha: TPoly,
    pub beta: TPoly,
    pairs: Vec<(i64, i64)>,
    /// Second column of the recursion matrix; with `(α, β)` it forms a
    /// Bezout relation `α·c22 − β·c12 = 1`.
    column2: (TPoly, TPoly),
}

impl AssocPolys {
    /// The `(a_i, b_i)` decomposition the polynomials were computed from.
    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn gamma(&self) -> TPoly {
        gamma_of(self)
    }

    pub fn trace(&self) -> TPoly {
        trace_poly(self)
    }
}

/// Associated polynomials of `∏ x^a_i y^b_i`. Zero exponents are fine.
pub fn assoc_polys(pairs: &[(i64, i64)]) -> AssocPolys {
    assoc_polys_cancellable(pairs, &CancelToken::new()).expect("never cancelled")
}

pub fn assoc_polys_cancellable(pairs: &[(i64, i64)], cancel: &CancelToken) -> Result<AssocPolys> {
    let m = symbolic_recursion(pairs, &DiagonalSlot::symbolic_upper(), Some(cancel))?;
    Ok(AssocPolys {
        alpha: m.e11,
        beta: m.e21,
        pairs: pairs.to_vec(),
        column2: (m.e12, m.e22),
    })
}

pub fn assoc_polys_of_word(w: &Word) -> AssocPolys {
    assoc_polys(&w.to_pairs())
}

pub fn assoc_polys_of_cyclic(cf: &CyclicForm) -> AssocPolys {
    match cf {
        CyclicForm::Trivial => assoc_polys(&[]),
        CyclicForm::GeneratorPower(g, e) => assoc_polys_of_word(&Word::gen(*g, *e)),
        CyclicForm::Reduced(p) => assoc_polys(p),
    }
}

/// `γ = α + β·t`.
pub fn gamma_of(ap: &AssocPolys) -> TPoly {
    &ap.alpha + &(&ap.beta * &TPoly::t())
}

/// `T = γ + γ^σ`, the trace of the wiggle as a polynomial in `t`.
pub fn trace_poly(ap: &AssocPolys) -> TPoly {
    let g = gamma_of(ap);
    &g + &g.sigma()
}

/// The four polynomials of the normal form specialized to `(λ₀, μ₀)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedWiggle {
    pub gamma: QPoly,
    pub beta: QPoly,
    pub gamma_sigma: QPoly,
    pub beta_sigma: QPoly,
}

impl SpecializedWiggle {
    /// Specializes symbolic polynomials, taking `σ` symbolically first.
    pub fn from_assoc(ap: &AssocPolys, lam: &Rat, mu: &Rat) -> Result<Self> {
        let gamma = gamma_of(ap);
        Ok(SpecializedWiggle {
            gamma: gamma.specialize_rat(lam, mu)?,
            beta: ap.beta.specialize_rat(lam, mu)?,
            gamma_sigma: gamma.sigma().specialize_rat(lam, mu)?,
            beta_sigma: ap.beta.sigma().specialize_rat(lam, mu)?,
        })
    }

    /// Runs the recursion directly over `ℚ`; the `σ` partners come from the
    /// same recursion at `(λ₀⁻¹, μ₀⁻¹)`.
    pub fn from_pairs(pairs: &[(i64, i64)], lam: &Rat, mu: &Rat) -> Result<Self> {
        let up = recursion_matrix(pairs, &DiagonalSlot::specialized_upper(lam, mu)?, None)?;
        let inv = recursion_matrix(
            pairs,
            &DiagonalSlot::specialized_upper(&lam.inv(), &mu.inv())?,
            None,
        )?;
        let t = QPoly::t();
        Ok(SpecializedWiggle {
            gamma: &up.e11 + &(&up.e21 * &t),
            beta: up.e21,
            gamma_sigma: &inv.e11 + &(&inv.e21 * &t),
            beta_sigma: inv.e21,
        })
    }

    pub fn trace(&self) -> QPoly {
        &self.gamma + &self.gamma_sigma
    }

    /// Assembles the normal form at a unimodular `g` over any field that `ℚ`
    /// embeds into.
    pub fn eval<F: Field>(&self, g: &Mat2<F>, embed: impl Fn(&Rat) -> F) -> Result<Mat2<F>> {
        let xi = xi_of(g)?;
        let t = xi.e11.clone();
        let (p, q) = (xi.e12, xi.e21);
        let at = |f: &QPoly| f.eval_with(&t, &embed);
        Ok(Mat2::new(
            at(&self.gamma),
            at(&self.beta) * p,
            -(at(&self.beta_sigma) * q),
            at(&self.gamma_sigma),
        ))
    }
}

/// A value of the wiggle map and the `t = det ξ_g` it was evaluated at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiggleValue {
    pub matrix: Mat2<Rat>,
    pub t_value: Rat,
}

/// Evaluates the wiggle through the normal form.
pub fn eval_normal_form(ap: &AssocPolys, lam: &Rat, mu: &Rat, g: &Mat2<Rat>) -> Result<WiggleValue> {
    let spec = SpecializedWiggle::from_assoc(ap, lam, mu)?;
    let matrix = spec.eval(g, Rat::clone)?;
    let t_value = xi_of(g)?.det();
    debug_assert!(matrix.det().is_one());
    Ok(WiggleValue { matrix, t_value })
}

/// Brute-force `w(x, g⁻¹yg)` with `x = diag(λ₀, λ₀⁻¹)`, `y = diag(μ₀, μ₀⁻¹)`.
pub fn eval_direct<F: Field>(pairs: &[(i64, i64)], lam: &F, mu: &F, g: &Mat2<F>) -> Result<Mat2<F>> {
    if lam.is_zero() || mu.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let det = g.det();
    if !det.is_one() {
        return Err(Error::NotUnimodular(format!("{det:?}")));
    }
    let g_inv = g.adjugate();
    let mut out = Mat2::identity();
    for &(a, b) in pairs {
        let xa = Mat2::diag(pow_i64(lam, a), pow_i64(lam, -a));
        let yb = Mat2::diag(pow_i64(mu, b), pow_i64(mu, -b));
        let yb_g = &(&g_inv * &yb) * g;
        out = &(&out * &xa) * &yb_g;
    }
    Ok(out)
}

/// `∏ x^a_i y^b_i` for arbitrary unimodular `x`, `y`.
pub fn eval_word_matrices<C: Ring>(pairs: &[(i64, i64)], x: &Mat2<C>, y: &Mat2<C>) -> Mat2<C> {
    pairs.iter().fold(Mat2::identity(), |acc, &(a, b)| {
        &(&acc * &x.pow_unimodular(a)) * &y.pow_unimodular(b)
    })
}

pub fn eval_direct_word(w: &Word, lam: &Rat, mu: &Rat, g: &Mat2<Rat>) -> Result<Mat2<Rat>> {
    eval_direct(&w.to_pairs(), lam, mu, g)
}

/// Outcome of the symbolic identity checks; each flag is a theorem, so a
/// `false` means an implementation defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `γ·γ^σ − β·β^σ·t(t+1) = 1`.
    pub determinant: bool,
    /// The lower-right block recursion produces `(α^σ, −β^σ)`.
    pub symmetry: bool,
    /// The recursion matrix has determinant one (Bezout relation for `α, β`).
    pub bezout: bool,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.determinant && self.symmetry && self.bezout
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.determinant {
            out.push("determinant");
        }
        if !self.symmetry {
            out.push("symmetry");
        }
        if !self.bezout {
            out.push("bezout");
        }
        out
    }
}

pub fn verify_identities(ap: &AssocPolys) -> IdentityReport {
    let gamma = gamma_of(ap);
    let lhs = &(&gamma * &gamma.sigma()) - &(&(&ap.beta * &ap.beta.sigma()) * &TPoly::t_t1());
    let determinant = lhs.is_one();

    let lower = symbolic_recursion(&ap.pairs, &DiagonalSlot::symbolic_lower(), None)
        .expect("not cancellable");
    let symmetry = lower.e11 == ap.alpha.sigma() && lower.e21 == -ap.beta.sigma();

    let (c12, c22) = &ap.column2;
    let bezout = (&(&ap.alpha * c22) - &(&ap.beta * c12)).is_one();

    IdentityReport { determinant, symmetry, bezout }
}
