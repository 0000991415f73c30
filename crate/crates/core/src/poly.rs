//! Dense univariate polynomials in `t` over a generic coefficient ring.
//!
//! `coeffs[i]` is the coefficient of `t^i`; the vector is empty for zero
//! and otherwise ends in a nonzero entry.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{ExactDiv, Field, Ring};
use crate::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly { coeffs: vec![C::zero(), C::one()] }
    }

    /// `c·t^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// `t·(t + 1)`.
    pub fn t_t1() -> Self {
        Poly { coeffs: vec![C::zero(), C::one(), C::one()] }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation after embedding each coefficient into `D`.
    pub fn eval_with<D: Ring>(&self, x: &D, embed: impl Fn(&C) -> D) -> D {
        self.coeffs
            .iter()
            .rev()
            .fold(D::zero(), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_coeffs(|c| c.clone() * s.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u64) -> Self {
        self.pow_u64(e)
    }

    /// Pseudo-remainder `lc(g)^(deg f − deg g + 1)·f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo_rem by zero polynomial");
        let lc = g.coeffs[dg].clone();
        let mut r = self.clone();
        let Some(df) = r.degree() else {
            return r;
        };
        if df < dg {
            return r;
        }
        let mut steps = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let mut next: Vec<C> = r.coeffs.iter().map(|c| c.clone() * lc.clone()).collect();
            for (i, gc) in g.coeffs.iter().enumerate() {
                let k = dr - dg + i;
                next[k] = next[k].clone() - lr.clone() * gc.clone();
            }
            r = Self::from_coeffs(next);
            steps -= 1;
        }
        r.scale(&lc.pow_u64(steps as u64))
    }

    /// Quotient by a monic divisor; returns `(q, r)` with `f = q·g + r`.
    pub fn div_rem_monic(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree().expect("division by zero polynomial");
        assert!(g.coeffs[dg].is_one(), "divisor must be monic");
        self.div_rem_by(g, |c| Some(c.clone())).expect("monic division cannot fail")
    }

    fn div_rem_by(&self, g: &Self, div_lc: impl Fn(&C) -> Option<C>) -> Option<(Self, Self)> {
        let dg = g.degree()?;
        let mut rem = self.coeffs.clone();
        let Some(df) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if df < dg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = rem[k + dg].clone();
            if top.is_zero() {
                continue;
            }
            let q = div_lc(&top)?;
            for (i, gc) in g.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * gc.clone();
            }
            quot[k] = q;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }
}

impl<C: ExactDiv> Poly<C> {
    /// Exact quotient `f / g`, requiring both that every leading-coefficient
    /// division is exact in `C` and that the remainder vanishes.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        let lc = g
            .leading()
            .ok_or_else(|| Error::InexactDivision("division by the zero polynomial".into()))?
            .clone();
        let (q, r) = self
            .div_rem_by(g, |c| c.div_exact(&lc))
            .ok_or_else(|| Error::InexactDivision("leading coefficient does not divide".into()))?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "nonzero remainder of degree {}",
                r.degree().unwrap_or(0)
            )));
        }
        Ok(q)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_coeffs(&self, d: &C) -> Result<Self> {
        self.coeffs
            .iter()
            .map(|c| {
                c.div_exact(d)
                    .ok_or_else(|| Error::InexactDivision("coefficient not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

impl<C: ExactDiv> ExactDiv for Poly<C> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.exact_div(d).ok()
    }
}

impl<C: Field> Poly<C> {
    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        let lc_inv = g.leading().expect("division by zero polynomial").inv();
        self.div_rem_by(g, |c| Some(c.clone() * lc_inv.clone()))
            .expect("field division cannot fail")
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.div_rem(g).1
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }
}

impl<C: Ring> Poly<LaurentPoly<C>> {
    /// Applies `λ ↦ λ⁻¹, μ ↦ μ⁻¹` coefficientwise; `t` is fixed.
    pub fn sigma(&self) -> Self {
        self.map_coeffs(LaurentPoly::sigma)
    }
}

impl<C: Field> Poly<LaurentPoly<C>> {
    /// Evaluates every Laurent coefficient at `(λ₀, μ₀)`.
    pub fn specialize(&self, lam: &C, mu: &C) -> Result<Poly<C>> {
        if lam.is_zero() || mu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let (mut lc, mut mc) = (HashMap::new(), HashMap::new());
        Ok(self.map_coeffs(|c| c.eval_nonzero(lam, mu, &mut lc, &mut mc)))
    }
}

impl Poly<LaurentPoly<Rat>> {
    /// [`specialize`](Self::specialize) through [`LaurentPoly::eval_rat`].
    pub fn specialize_rat(&self, lam: &Rat, mu: &Rat) -> Result<Poly<Rat>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_rat(lam, mu))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, C: Ring> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a, C: Ring> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a, C: Ring> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·t")?,
                _ => write!(f, "({c})·t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
