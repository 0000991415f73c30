//! Sparse bivariate Laurent polynomials in `λ`, `μ`.
//!
//! Terms live in a `BTreeMap` keyed by the exponent pair `(e_λ, e_μ)`, so
//! iteration order is the lexicographic monomial order. That order is
//! compatible with multiplication, which is what [`ExactDiv`] relies on.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{pow_i64, ExactDiv, Field, Ring};
use crate::Rat;

pub type Exponent = (i64, i64);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Exponent, C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn monomial(c: C, el: i64, em: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((el, em), c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The variable `λ`.
    pub fn lambda() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    /// The variable `μ`.
    pub fn mu() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// `λ^a μ^b` with unit coefficient.
    pub fn lambda_mu_pow(a: i64, b: i64) -> Self {
        Self::monomial(C::one(), a, b)
    }

    /// `λ^a − λ^-a`, the bar of `diag(λ, λ⁻¹)^a`.
    pub fn lambda_bar(a: i64) -> Self {
        Self::lambda_mu_pow(a, 0) - Self::lambda_mu_pow(-a, 0)
    }

    /// `μ^b − μ^-b`.
    pub fn mu_bar(b: i64) -> Self {
        Self::lambda_mu_pow(0, b) - Self::lambda_mu_pow(0, -b)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(iter: I) -> Self {
        let mut p = LaurentPoly { terms: BTreeMap::new() };
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        accumulate(&mut self.terms, e, c);
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, el: i64, em: i64) -> C {
        self.terms.get(&(el, em)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(Exponent, &C)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Lexicographically least term.
    pub fn trailing_term(&self) -> Option<(Exponent, &C)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Substitutes `λ ↦ λ⁻¹`, `μ ↦ μ⁻¹`.
    pub fn sigma(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((-a, -b), c.clone())).collect(),
        }
    }

    /// Multiplies by the monomial `λ^a μ^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * s.clone())))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.pow_u64(e)
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Inverse of a monomial; every other nonzero element is a non-unit.
    pub fn unit_inverse(&self) -> Result<Self> {
        match self.terms.iter().next() {
            Some((&(a, b), c)) if self.terms.len() == 1 => Ok(Self::monomial(c.inv(), -a, -b)),
            _ => Err(Error::NotAUnit),
        }
    }

    /// Evaluates at `λ = lam`, `μ = mu`.
    pub fn eval(&self, lam: &C, mu: &C) -> Result<C> {
        if lam.is_zero() || mu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(self.eval_nonzero(lam, mu, &mut HashMap::new(), &mut HashMap::new()))
    }

    pub(crate) fn eval_nonzero(
        &self,
        lam: &C,
        mu: &C,
        lam_cache: &mut HashMap<i64, C>,
        mu_cache: &mut HashMap<i64, C>,
    ) -> C {
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            let la = lam_cache.entry(a).or_insert_with(|| pow_i64(lam, a)).clone();
            let mb = mu_cache.entry(b).or_insert_with(|| pow_i64(mu, b)).clone();
            acc = acc + c.clone() * la * mb;
        }
        acc
    }
}

impl LaurentPoly<Rat> {
    /// [`eval`](Self::eval) over a common denominator: integer products per
    /// term and a single normalization at the end.
    pub fn eval_rat(&self, lam: &Rat, mu: &Rat) -> Result<Rat> {
        if lam.is_zero() || mu.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let Some(&(a0, _)) = self.terms.keys().next() else {
            return Ok(Rat::zero());
        };
        let a1 = self.terms.keys().next_back().map_or(a0, |e| e.0);
        let b0 = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        let b1 = self.terms.keys().map(|e| e.1).max().unwrap_or(0);
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));

        // λ^a = p^(a−a0)·q^(a1−a) · p^a0·q^−a1, likewise for μ.
        let split = |x: &Rat, lo: i64, hi: i64| -> Vec<BigInt> {
            let (n, d) = (x.numer(), x.denom());
            (lo..=hi)
                .map(|e| num_traits::pow(n.clone(), (e - lo) as usize) * num_traits::pow(d.clone(), (hi - e) as usize))
                .collect()
        };
        let lam_parts = split(lam, a0, a1);
        let mu_parts = split(mu, b0, b1);
        let mut num = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            let scale = &den / c.denom();
            num += c.numer() * scale * &lam_parts[(a - a0) as usize] * &mu_parts[(b - b0) as usize];
        }
        let outer = |x: &Rat, lo: i64, hi: i64| {
            pow_i64(&Rat::from_integer(x.numer().clone()), lo) * pow_i64(&Rat::from_integer(x.denom().clone()), -hi)
        };
        Ok(Rat::new(num, den) * outer(lam, a0, a1) * outer(mu, b0, b1))
    }
}

impl<C: ExactDiv> ExactDiv for LaurentPoly<C> {
    /// Exact division by the lexicographic division algorithm. If
    /// `self = q·d` then every monomial of `q` lies between
    /// `trail(self)/trail(d)` and `lead(self)/lead(d)`, which bounds the loop.
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (d_lead, d_lc) = d.leading_term()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (d_trail, _) = d.trailing_term()?;
        let (s_trail, _) = self.trailing_term()?;
        let floor = (s_trail.0 - d_trail.0, s_trail.1 - d_trail.1);
        let mut rem = self.terms.clone();
        let mut quot = Self::zero();
        while let Some((&r_lead, r_lc)) = rem.last_key_value() {
            let e = (r_lead.0 - d_lead.0, r_lead.1 - d_lead.1);
            if e < floor {
                return None;
            }
            let c = r_lc.div_exact(d_lc)?;
            for (&(a, b), dc) in &d.terms {
                accumulate(&mut rem, (a + e.0, b + e.1), -(c.clone() * dc.clone()));
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

/// Adds `c` to the term at `e`, dropping it if it cancels.
fn accumulate<C: Ring>(acc: &mut BTreeMap<Exponent, C>, e: Exponent, c: C) {
    match acc.entry(e) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let s = std::mem::replace(o.get_mut(), C::zero()) + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<C: Ring> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, C: Ring> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Ring> Add for LaurentPoly<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Neg for LaurentPoly<C> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a, C: Ring> Neg for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        -self.clone()
    }
}

impl<'a, C: Ring> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for LaurentPoly<C> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<'a, C: Ring> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        let mut acc: BTreeMap<Exponent, C> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                let prod = c1.clone() * c2.clone();
                accumulate(&mut acc, (a1 + a2, b1 + b2), prod);
            }
        }
        LaurentPoly { terms: acc }
    }
}

impl<C: Ring> Mul for LaurentPoly<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentPoly<C> {
    /// Renders in `λ`, `μ` notation, highest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let var = |name: &str, e: i64| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let mono = format!("{}{}", var("λ", a), var("μ", b));
            let neg = -c.clone();
            let (sign, mag) = if i > 0 && format!("{c}").starts_with('-') {
                (" - ", neg)
            } else if i > 0 {
                (" + ", c.clone())
            } else {
                ("", c.clone())
            };
            f.write_str(sign)?;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if (-mag.clone()).is_one() {
                write!(f, "-{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::{Laurent, Rat};

    fn lam(e: i64) -> Laurent {
        Laurent::lambda_mu_pow(e, 0)
    }

    #[test]
    fn difference_of_squares() {
        let p = lam(1) - lam(-1);
        let q = lam(1) + lam(-1);
        assert_eq!(&p * &q, lam(2) - lam(-2));
    }

    #[test]
    fn unit_inverse_of_monomial() {
        let p = Laurent::monomial(int(3), 2, -1);
        assert_eq!(p.unit_inverse().unwrap(), Laurent::monomial(rat(1, 3), -2, 1));
        assert_eq!((lam(1) + Laurent::one()).unit_inverse(), Err(Error::NotAUnit));
        assert_eq!(Laurent::zero().unit_inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(Laurent::lambda().sigma(), lam(-1));
        let p = Laurent::lambda_mu_pow(2, 1) + Laurent::constant(int(3));
        assert_eq!(p.sigma(), Laurent::lambda_mu_pow(-2, -1) + Laurent::constant(int(3)));
        assert_eq!(p.sigma().sigma(), p);
    }

    #[test]
    fn exact_division() {
        let a = lam(2) - Laurent::one();
        let b = Laurent::mu_bar(3) + lam(-4);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
        assert!((lam(1) + Laurent::one()).div_exact(&(lam(1) - Laurent::one())).is_none());
        assert!(a.div_exact(&Laurent::zero()).is_none());
    }

    #[test]
    fn eval_zero_parameter() {
        assert_eq!(lam(1).eval(&Rat::zero(), &int(1)), Err(Error::ZeroParameter));
        assert_eq!(lam(-2).eval(&int(2), &int(5)).unwrap(), rat(1, 4));
    }

    #[test]
    fn display() {
        let p = Laurent::lambda_mu_pow(2, -1) - Laurent::constant(int(3)) + Laurent::monomial(rat(1, 2), 0, 1);
        assert_eq!(p.to_string(), "λ^2μ^-1 + 1/2μ - 3");
    }
}
