//! Scalar abstractions shared by every algebraic container in the crate.
//!
//! The polynomial, Laurent and matrix types are generic over a coefficient
//! type implementing [`Ring`]. Exact division, where it exists, is exposed
//! through [`ExactDiv`]; fields additionally get [`Field`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rat;

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `self * n` for a machine integer, computed by double-and-add.
    fn mul_int(&self, n: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() + base;
            }
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    /// Non-negative power by repeated squaring.
    fn pow_u64(&self, exp: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Rings where `a / b` can be decided and computed when `b` divides `a`.
pub trait ExactDiv: Ring {
    /// Returns `Some(q)` with `q * d == self`, or `None` when no such `q`
    /// exists (or `d` is zero).
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T: Ring + Div<Output = T>> Field for T {}

macro_rules! field_exact_div {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn div_exact(&self, d: &Self) -> Option<Self> {
                if d.is_zero() {
                    None
                } else {
                    Some(self.clone() / d.clone())
                }
            }
        }
    )*};
}

field_exact_div!(f32, f64, Rat, Complex<Rat>, Complex<f64>);

impl ExactDiv for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

/// Integer power with negative exponents through the field inverse.
pub fn pow_i64<F: Field>(x: &F, e: i64) -> F {
    if e >= 0 {
        x.pow_u64(e as u64)
    } else {
        x.inv().pow_u64(e.unsigned_abs())
    }
}
