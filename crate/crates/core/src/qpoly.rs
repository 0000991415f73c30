//! Algorithms on univariate polynomials over a field, with a few that are
//! specific to `ℚ[t]` (integer normalization, real root isolation, rational
//! roots and the resulting factor split).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::ring::Field;
use crate::{QPoly, Rat};

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<C: Field>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let (mut a, mut b) = (f.monic(), g.monic());
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

/// `f / gcd(f, f')`, made monic.
pub fn squarefree_part<C: Field>(f: &Poly<C>) -> Poly<C> {
    if f.is_constant() {
        return f.monic();
    }
    let g = gcd(f, &f.derivative());
    f.div_rem(&g).0.monic()
}

/// Removes every factor `t − r` for the given roots (with multiplicity).
pub fn remove_roots<C: Field>(f: &Poly<C>, roots: &[C]) -> Poly<C> {
    let mut out = f.clone();
    for r in roots {
        let lin = Poly::from_coeffs(vec![-r.clone(), C::one()]);
        loop {
            if out.degree().unwrap_or(0) == 0 {
                break;
            }
            let (q, rem) = out.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            out = q;
        }
    }
    out
}

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of `f`.
pub fn integer_primitive(f: &QPoly) -> Poly<BigInt> {
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Poly::zero();
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -content.clone() } else { content };
    Poly::from_coeffs(ints.into_iter().map(|c| c / &sign).collect())
}

/// `f` scaled to a primitive integer polynomial, kept in `ℚ[t]`.
pub fn clear_denominators(f: &QPoly) -> QPoly {
    integer_primitive(f).map_coeffs(|c| Rat::from_integer(c.clone()))
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm sequence `f, f', −rem(f, f'), …` of a squarefree polynomial.
pub fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = -seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn variations(seq: &[QPoly], x: &Rat) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign(&p.eval(x))).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Cauchy bound: every root has modulus below `1 + max |a_i / a_n|`.
pub fn cauchy_bound(f: &QPoly) -> Rat {
    let lc = f.leading().expect("nonzero polynomial").abs();
    let n = f.degree().unwrap();
    let m = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rat::zero(), |a, b| if b > a { b } else { a });
    m + Rat::one()
}

/// Disjoint half-open intervals `(lo, hi]`, each containing exactly one real
/// root of the squarefree polynomial `f`.
pub fn isolate_real_roots(f: &QPoly) -> Vec<(Rat, Rat)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(f);
    let b = cauchy_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&seq, &lo) - variations(&seq, &hi);
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rat::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The rational with the least denominator in the closed interval `[lo, hi]`.
pub fn simplest_rational(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if lo.is_positive() || lo.is_zero() {
        simplest_nonneg(lo, hi)
    } else if hi.is_negative() {
        -simplest_nonneg(&-hi, &-lo)
    } else {
        Rat::zero()
    }
}

fn simplest_nonneg(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if &fl + Rat::one() <= *hi {
        return lo.ceil();
    }
    // lo and hi share the integer part; recurse on reciprocals of the fractional parts.
    let inner = simplest_nonneg(&(Rat::one() / (hi - &fl)), &(Rat::one() / (lo - &fl)));
    fl + Rat::one() / inner
}

/// All distinct rational roots of `f`, ascending.
///
/// Each real root is isolated, then its interval is shrunk below
/// `1/(2·lc²)` where `lc` is the leading coefficient of the primitive integer
/// form. Two rationals whose denominators divide `lc` differ by at least
/// `1/lc²`, so the simplest rational in the interval is the only candidate.
pub fn rational_roots(f: &QPoly) -> Vec<Rat> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = clear_denominators(&squarefree_part(f));
    let lc = sf.leading().unwrap().abs();
    let width = Rat::one() / (lc.clone() * lc * Rat::from_integer(2.into()));
    let two = Rat::from_integer(2.into());
    let mut roots = Vec::new();
    for (mut lo, mut hi) in isolate_real_roots(&sf) {
        if sf.eval(&hi).is_zero() {
            roots.push(hi);
            continue;
        }
        let mut lo_sign = sign(&sf.eval(&lo));
        if lo_sign == 0 {
            // lo is the root of a neighbouring interval; the sign just to its
            // right is that of the derivative.
            lo_sign = sign(&sf.derivative().eval(&lo));
        }
        while &hi - &lo > width {
            let mid = (&lo + &hi) / &two;
            let s = sign(&sf.eval(&mid));
            if s == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == lo_sign {
                lo = mid;
                lo_sign = s;
            } else {
                hi = mid;
            }
        }
        let cand = simplest_rational(&lo, &hi);
        if sf.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Splits a squarefree `f` into its monic linear factors over `ℚ` and the
/// remaining cofactor (which has no rational roots).
pub fn split_linear_factors(f: &QPoly) -> (Vec<QPoly>, QPoly) {
    let roots = rational_roots(f);
    let linear: Vec<QPoly> = roots
        .iter()
        .map(|r| QPoly::from_coeffs(vec![-r.clone(), Rat::one()]))
        .collect();
    let rest = remove_roots(&f.monic(), &roots);
    (linear, rest)
}
