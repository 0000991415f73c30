//! Helpers for arbitrary-precision rationals: literal parsing, formatting,
//! dyadic rounding and cheap modulus bounds.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Parses `"p/q"` or `"p"` (optional leading `-`, no whitespace inside).
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |part: &str, signed: bool| {
        let digits = if signed { part.strip_prefix('-').unwrap_or(part) } else { part };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Canonical `"p/q"` form, or `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Nearest multiple of `2^-bits` (ties away from zero are not special-cased).
pub fn round_dyadic(r: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = r.numer() * &scale;
    let (q, rem) = scaled.div_mod_floor(r.denom());
    let q = if rem * 2 >= *r.denom() { q + 1 } else { q };
    Rat::new(q, scale)
}

pub fn round_complex(z: &Complex<Rat>, bits: u32) -> Complex<Rat> {
    Complex::new(round_dyadic(&z.re, bits), round_dyadic(&z.im, bits))
}

/// `|re| + |im|`, an upper bound on the modulus.
pub fn modulus_upper(z: &Complex<Rat>) -> Rat {
    z.re.abs() + z.im.abs()
}

/// `max(|re|, |im|)`, a lower bound on the modulus.
pub fn modulus_lower(z: &Complex<Rat>) -> Rat {
    let (a, b) = (z.re.abs(), z.im.abs());
    if a > b {
        a
    } else {
        b
    }
}

/// `10^-digits` as an exact rational.
pub fn ten_pow_neg(digits: u32) -> Rat {
    Rat::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize))
}

/// Rough base-10 logarithm, for human-readable reporting only.
pub fn approx_log10(r: &Rat) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    let n = r.numer().abs();
    let d = r.denom().clone();
    // log10(n/d) using the leading 53 bits of each side.
    let shift_n = n.bits().saturating_sub(53);
    let shift_d = d.bits().saturating_sub(53);
    let nf: f64 = num_traits::ToPrimitive::to_f64(&(&n >> shift_n)).unwrap_or(f64::MAX);
    let df: f64 = num_traits::ToPrimitive::to_f64(&(&d >> shift_d)).unwrap_or(f64::MAX);
    nf.log10() - df.log10() + (shift_n as f64 - shift_d as f64) * std::f64::consts::LOG10_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rat(&int(7)), "7");
        for bad in ["", "1/0", "a", "1/-2", "1//2", "--1", "1/"] {
            assert!(parse_rat(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn dyadic_rounding_error_is_bounded() {
        let r = rat(1, 3);
        let rounded = round_dyadic(&r, 20);
        assert!((rounded - &r).abs() <= Rat::new(1.into(), (1u64 << 21).into()));
    }

    #[test]
    fn log10_estimate() {
        assert!((approx_log10(&ten_pow_neg(50)) + 50.0).abs() < 1e-9);
    }
}
