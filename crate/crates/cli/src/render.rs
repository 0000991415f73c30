//! Human-readable output in `λ`, `μ`, `t` notation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use wiggle_core::certify::{Certificate, Checks, Status};
use wiggle_core::mat2::Mat2;
use wiggle_core::rational::format_rat;
use wiggle_core::wiggle::IdentityReport;
use wiggle_core::witness::{ModularCertificate, Witness, WitnessValue};
use wiggle_core::{CRat, QPoly, Rat};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

/// Rounds to `digits` places after the point.
pub fn decimal(r: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * Rat::from_integer(scale.clone())).round().to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let mag = scaled.abs();
    let int_part = &mag / &scale;
    let frac = (&mag % &scale).to_string();
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{frac:0>width$}", width = digits as usize)
}

pub fn complex(z: &CRat, digits: u32) -> String {
    let re = decimal(&z.re, digits);
    if z.im.is_zero() {
        return re;
    }
    let im = decimal(&z.im.abs(), digits);
    let sign = if z.im.is_negative() { "-" } else { "+" };
    format!("{re} {sign} {im}i")
}

pub fn matrix<C>(m: &Mat2<C>, f: impl Fn(&C) -> String) -> String {
    format!("[[{}, {}], [{}, {}]]", f(&m.e11), f(&m.e12), f(&m.e21), f(&m.e22))
}

pub fn qpoly(h: &QPoly) -> String {
    let mut out = String::new();
    for (i, c) in h.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = format_rat(&c.abs());
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}{mono}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn checks(c: &Checks) -> String {
    format!(
        "h | T - 2: {}, gcd(h, t(t+1)) = 1: {}, gcd(h, γ - 1) = 1: {}",
        yes_no(c.divides_trace_minus_2),
        yes_no(c.coprime_t_t1),
        yes_no(c.coprime_gamma_minus_1)
    )
}

pub fn certificate(c: &Certificate) -> String {
    let [k, l, m, n] = c.params.as_array();
    let mut out = format!("({k},{l},{m},{n}): {} after {} attempt(s)", c.status.as_str(), c.attempts);
    if c.status == Status::SwappedCertified {
        let [k, l, m, n] = c.word_params().as_array();
        out.push_str(&format!("\n  certified for the swapped word ({k},{l},{m},{n})"));
    }
    if let (Some(lam), Some(mu), Some(h)) = (&c.lambda, &c.mu, &c.h) {
        out.push_str(&format!("\n  λ₀ = {}, μ₀ = {}", format_rat(lam), format_rat(mu)));
        out.push_str(&format!("\n  h(t) = {}", qpoly(h)));
        out.push_str(&format!("\n  {}", checks(&c.checks)));
    }
    out
}

fn modular(m: &ModularCertificate) -> String {
    format!(
        "factor h₁(t) = {} (irreducible: {})\n  mod h₁: T - 2 ≡ 0: {}, t(t+1) invertible: {}, β·β^σ invertible: {}, γ - 1 invertible: {}",
        qpoly(&m.factor),
        yes_no(m.irreducible),
        yes_no(m.trace_minus_2_vanishes),
        yes_no(m.coprime_t_t1),
        yes_no(m.beta_product_invertible),
        yes_no(m.coprime_gamma_minus_1)
    )
}

pub fn witness(w: &Witness, digits: u32) -> String {
    let mut out = format!("  {}", modular(&w.modular));
    match &w.value {
        WitnessValue::Exact { t0, g, u } => {
            out.push_str(&format!("\n  exact witness, t₀ = {}", format_rat(t0)));
            out.push_str(&format!("\n  g = {}", matrix(g, format_rat)));
            out.push_str(&format!("\n  u = {}", matrix(u, format_rat)));
        }
        WitnessValue::Approximate { t0, g, u, root_radius } => {
            let show = |z: &CRat| complex(z, digits);
            out.push_str(&format!("\n  approximate witness, t₀ ≈ {}", show(t0)));
            out.push_str(&format!("\n  root within {} of t₀", magnitude(root_radius)));
            out.push_str(&format!("\n  g ≈ {}", matrix(g, show)));
            out.push_str(&format!("\n  u ≈ {}", matrix(u, show)));
        }
    }
    out.push_str(&format!("\n  residual ≤ {}", magnitude(&w.residual)));
    out
}

/// `0` or `10^e` with `e` to one decimal place.
fn magnitude(r: &Rat) -> String {
    if r.is_zero() {
        return "0".into();
    }
    format!("10^{:.1}", wiggle_core::rational::approx_log10(r))
}

pub fn identities(r: &IdentityReport) -> String {
    format!(
        "det = 1: {}\nsymmetry: {}\nBezout: {}",
        yes_no(r.determinant),
        yes_no(r.symmetry),
        yes_no(r.bezout)
    )
}
