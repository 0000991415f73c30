//! 2×2 matrices over a commutative ring, and the conjugation matrix `ξ_g`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// Row-major `((e11, e12), (e21, e22))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2<C> {
    pub e11: C,
    pub e12: C,
    pub e21: C,
    pub e22: C,
}

impl<C: Ring> Mat2<C> {
    pub fn new(e11: C, e12: C, e21: C, e22: C) -> Self {
        Mat2 { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::diag(C::one(), C::one())
    }

    pub fn diag(a: C, d: C) -> Self {
        Mat2::new(a, C::zero(), C::zero(), d)
    }

    /// The matrix unit `E₁₁`.
    pub fn e11_unit() -> Self {
        Self::diag(C::one(), C::zero())
    }

    pub fn det(&self) -> C {
        self.e11.clone() * self.e22.clone() - self.e12.clone() * self.e21.clone()
    }

    pub fn trace(&self) -> C {
        self.e11.clone() + self.e22.clone()
    }

    pub fn adjugate(&self) -> Self {
        Mat2::new(self.e22.clone(), -self.e12.clone(), -self.e21.clone(), self.e11.clone())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Mat2<D> {
        Mat2::new(f(&self.e11), f(&self.e12), f(&self.e21), f(&self.e22))
    }

    pub fn is_identity(&self) -> bool {
        self.e11.is_one() && self.e12.is_zero() && self.e21.is_zero() && self.e22.is_one()
    }

    /// Integer power of a matrix of determinant one; negative exponents use
    /// the adjugate, which is the exact inverse in that case.
    pub fn pow_unimodular(&self, e: i64) -> Self {
        let base = if e < 0 { self.adjugate() } else { self.clone() };
        let mut acc = Self::identity();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl<C: Field> Mat2<C> {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        Some(self.adjugate().scale(&d.inv()))
    }

    /// `self^g = g⁻¹·self·g`.
    pub fn conjugate_by(&self, g: &Self) -> Option<Self> {
        let gi = g.inverse()?;
        Some(&(&gi * self) * g)
    }
}

impl<'a, C: Ring> Mul<&'a Mat2<C>> for &'a Mat2<C> {
    type Output = Mat2<C>;

    fn mul(self, r: &'a Mat2<C>) -> Mat2<C> {
        let m = |a: &C, b: &C, c: &C, d: &C| a.clone() * b.clone() + c.clone() * d.clone();
        Mat2::new(
            m(&self.e11, &r.e11, &self.e12, &r.e21),
            m(&self.e11, &r.e12, &self.e12, &r.e22),
            m(&self.e21, &r.e11, &self.e22, &r.e21),
            m(&self.e21, &r.e12, &self.e22, &r.e22),
        )
    }
}

impl<C: Ring> Mul for Mat2<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a, C: Ring> Add<&'a Mat2<C>> for &'a Mat2<C> {
    type Output = Mat2<C>;

    fn add(self, r: &'a Mat2<C>) -> Mat2<C> {
        Mat2::new(
            self.e11.clone() + r.e11.clone(),
            self.e12.clone() + r.e12.clone(),
            self.e21.clone() + r.e21.clone(),
            self.e22.clone() + r.e22.clone(),
        )
    }
}

impl<C: Ring> Add for Mat2<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a, C: Ring> Sub<&'a Mat2<C>> for &'a Mat2<C> {
    type Output = Mat2<C>;

    fn sub(self, r: &'a Mat2<C>) -> Mat2<C> {
        self + &(-r.clone())
    }
}

impl<C: Ring> Sub for Mat2<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Ring> Neg for Mat2<C> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|c| -c.clone())
    }
}

impl<C: Ring> Zero for Mat2<C> {
    fn zero() -> Self {
        Self::diag(C::zero(), C::zero())
    }

    fn is_zero(&self) -> bool {
        self.e11.is_zero() && self.e12.is_zero() && self.e21.is_zero() && self.e22.is_zero()
    }
}

impl<C: Ring> One for Mat2<C> {
    fn one() -> Self {
        Self::identity()
    }
}

/// `ξ_g = g⁻¹E₁₁g − E₁₁` for `det g = 1`, in closed form
/// `((bc, bd), (−ac, −bc))` where `g = ((a, b), (c, d))`.
pub fn xi_of<C: Ring>(g: &Mat2<C>) -> Result<Mat2<C>> {
    let det = g.det();
    if !det.is_one() {
        return Err(Error::NotUnimodular(format!("{det:?}")));
    }
    let (a, b, c, d) = (&g.e11, &g.e12, &g.e21, &g.e22);
    let bc = b.clone() * c.clone();
    Ok(Mat2::new(
        bc.clone(),
        b.clone() * d.clone(),
        -(a.clone() * c.clone()),
        -bc,
    ))
}

/// A determinant-one matrix with `det ξ_g = t0`, namely `((1, 1), (t0, 1 + t0))`.
pub fn unimodular_with_xi_det<C: Ring>(t0: &C) -> Mat2<C> {
    Mat2::new(C::one(), C::one(), t0.clone(), C::one() + t0.clone())
}
