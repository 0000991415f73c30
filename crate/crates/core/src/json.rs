//! JSON encodings. Rationals are strings `"p/q"` (or `"p"` for integers), so
//! values never lose precision.

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::certify::{Certificate, Checks, DCParams, Status};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::rational::{format_rat, parse_rat};
use crate::wiggle::{gamma_of, trace_poly, AssocPolys, IdentityReport};
use crate::witness::{ModularCertificate, Witness, WitnessValue};
use crate::{CRat, Laurent, QPoly, Rat, TPoly};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidJson(msg.into())
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    v.as_str().ok_or_else(|| bad("expected a rational string")).and_then(parse_rat)
}

/// `[{"el": i, "em": j, "c": "p/q"}, …]` in increasing exponent order.
pub fn laurent_to_json(f: &Laurent) -> Value {
    Value::Array(
        f.terms()
            .map(|(&(el, em), c)| json!({"el": el, "em": em, "c": format_rat(c)}))
            .collect(),
    )
}

pub fn laurent_from_json(v: &Value) -> Result<Laurent> {
    let terms = v.as_array().ok_or_else(|| bad("Laurent polynomial must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exp = |key: &str| t.get(key).and_then(Value::as_i64).ok_or_else(|| bad(format!("term needs integer {key:?}")));
        let c = rat_from_json(t.get("c").ok_or_else(|| bad("term needs \"c\""))?)?;
        out.push(((exp("el")?, exp("em")?), c));
    }
    Ok(Laurent::from_terms(out))
}

/// Coefficient list, constant term first.
pub fn tpoly_to_json(f: &TPoly) -> Value {
    Value::Array(f.coeffs().iter().map(laurent_to_json).collect())
}

pub fn tpoly_from_json(v: &Value) -> Result<TPoly> {
    let cs = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    Ok(TPoly::from_coeffs(cs.iter().map(laurent_from_json).collect::<Result<_>>()?))
}

pub fn qpoly_to_json(f: &QPoly) -> Value {
    Value::Array(f.coeffs().iter().map(rat_to_json).collect())
}

pub fn qpoly_from_json(v: &Value) -> Result<QPoly> {
    let cs = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    Ok(QPoly::from_coeffs(cs.iter().map(rat_from_json).collect::<Result<_>>()?))
}

pub fn assoc_polys_to_json(ap: &AssocPolys) -> Value {
    json!({"alpha": tpoly_to_json(&ap.alpha), "beta": tpoly_to_json(&ap.beta)})
}

/// `α`, `β` plus the derived `γ` and trace polynomial.
pub fn polys_report_to_json(ap: &AssocPolys) -> Value {
    json!({
        "alpha": tpoly_to_json(&ap.alpha),
        "beta": tpoly_to_json(&ap.beta),
        "gamma": tpoly_to_json(&gamma_of(ap)),
        "trace": tpoly_to_json(&trace_poly(ap)),
    })
}

pub fn identity_report_to_json(r: &IdentityReport) -> Value {
    json!({
        "determinant": r.determinant,
        "symmetry": r.symmetry,
        "bezout": r.bezout,
        "failures": r.failures(),
    })
}

pub fn mat2_to_json<C: crate::Ring>(m: &Mat2<C>, f: impl Fn(&C) -> Value) -> Value {
    json!([[f(&m.e11), f(&m.e12)], [f(&m.e21), f(&m.e22)]])
}

pub fn crat_to_json(z: &CRat) -> Value {
    json!({"re": format_rat(&z.re), "im": format_rat(&z.im)})
}

fn checks_to_json(c: &Checks) -> Value {
    json!({
        "divides_trace_minus_2": c.divides_trace_minus_2,
        "coprime_t_t1": c.coprime_t_t1,
        "coprime_gamma_minus_1": c.coprime_gamma_minus_1,
    })
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    json!({
        "params": c.params.as_array(),
        "status": c.status.as_str(),
        "lambda": c.lambda.as_ref().map(format_rat),
        "mu": c.mu.as_ref().map(format_rat),
        "h": c.h.as_ref().map(qpoly_to_json).unwrap_or_else(|| json!([])),
        "checks": checks_to_json(&c.checks),
        "attempts": c.attempts,
    })
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate> {
    let obj = v.as_object().ok_or_else(|| bad("certificate must be an object"))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| bad(format!("missing field {k:?}")));
    let params: Vec<i64> = field("params")?
        .as_array()
        .ok_or_else(|| bad("params must be an array"))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad("params must be integers")))
        .collect::<Result<_>>()?;
    let [k, l, m, n] = params[..] else {
        return Err(bad("params must have four entries"));
    };
    let status_text = field("status")?.as_str().ok_or_else(|| bad("status must be a string"))?;
    let status = Status::parse(status_text).ok_or_else(|| bad(format!("unknown status {status_text:?}")))?;
    let opt_rat = |k: &str| match obj.get(k) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => rat_from_json(v).map(Some),
    };
    let h = qpoly_from_json(field("h")?)?;
    let checks_obj = field("checks")?.as_object().ok_or_else(|| bad("checks must be an object"))?;
    let flag = |k: &str| checks_obj.get(k).and_then(Value::as_bool).ok_or_else(|| bad(format!("checks.{k} must be a bool")));
    Ok(Certificate {
        params: DCParams::new(k, l, m, n),
        status,
        lambda: opt_rat("lambda")?,
        mu: opt_rat("mu")?,
        h: (!h.is_zero()).then_some(h),
        checks: Checks {
            divides_trace_minus_2: flag("divides_trace_minus_2")?,
            coprime_t_t1: flag("coprime_t_t1")?,
            coprime_gamma_minus_1: flag("coprime_gamma_minus_1")?,
        },
        attempts: field("attempts")?.as_u64().ok_or_else(|| bad("attempts must be a count"))? as u32,
    })
}

fn modular_to_json(m: &ModularCertificate) -> Value {
    json!({
        "factor": qpoly_to_json(&m.factor),
        "irreducible": m.irreducible,
        "trace_minus_2_vanishes": m.trace_minus_2_vanishes,
        "coprime_t_t1": m.coprime_t_t1,
        "beta_product_invertible": m.beta_product_invertible,
        "coprime_gamma_minus_1": m.coprime_gamma_minus_1,
    })
}

pub fn witness_to_json(w: &Witness) -> Value {
    let mut obj = Map::new();
    obj.insert("word".into(), json!(w.word.as_array()));
    obj.insert("lambda".into(), rat_to_json(&w.lambda));
    obj.insert("mu".into(), rat_to_json(&w.mu));
    match &w.value {
        WitnessValue::Exact { t0, g, u } => {
            obj.insert("exact".into(), json!(true));
            obj.insert("t0".into(), rat_to_json(t0));
            obj.insert("g".into(), mat2_to_json(g, rat_to_json));
            obj.insert("u".into(), mat2_to_json(u, rat_to_json));
        }
        WitnessValue::Approximate { t0, g, u, root_radius } => {
            obj.insert("exact".into(), json!(false));
            obj.insert("t0".into(), crat_to_json(t0));
            obj.insert("g".into(), mat2_to_json(g, crat_to_json));
            obj.insert("u".into(), mat2_to_json(u, crat_to_json));
            obj.insert("root_radius".into(), rat_to_json(root_radius));
        }
    }
    obj.insert("residual".into(), rat_to_json(&w.residual));
    obj.insert("modular".into(), modular_to_json(&w.modular));
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{certify, CertifyOptions};
    use crate::rational::{int, rat};
    use crate::wiggle::assoc_polys;

    #[test]
    fn rational_strings() {
        assert_eq!(rat_to_json(&rat(-3, 4)), json!("-3/4"));
        assert_eq!(rat_to_json(&int(5)), json!("5"));
        assert_eq!(rat_from_json(&json!("6/8")).unwrap(), rat(3, 4));
        assert!(rat_from_json(&json!(0.5)).is_err());
    }

    #[test]
    fn laurent_shape_and_roundtrip() {
        let f = &Laurent::lambda_mu_pow(2, -1).scale(&rat(1, 2)) - &Laurent::constant(int(3));
        let v = laurent_to_json(&f);
        assert_eq!(v, json!([{"el": 0, "em": 0, "c": "-3"}, {"el": 2, "em": -1, "c": "1/2"}]));
        assert_eq!(laurent_from_json(&v).unwrap(), f);
    }

    #[test]
    fn tpoly_roundtrip() {
        let ap = assoc_polys(&[(1, 2), (-1, 1)]);
        let v = assoc_polys_to_json(&ap);
        assert_eq!(tpoly_from_json(&v["alpha"]).unwrap(), ap.alpha);
        assert_eq!(tpoly_from_json(&v["beta"]).unwrap(), ap.beta);
    }

    #[test]
    fn certificate_roundtrip() {
        for p in [DCParams::new(1, 1, 2, 3), DCParams::new(1, 1, 1, 1)] {
            let c = certify(&p, &CertifyOptions::default()).unwrap();
            let v = certificate_to_json(&c);
            assert_eq!(certificate_from_json(&v).unwrap(), c);
        }
        let trivial = certify(&DCParams::new(1, 1, 1, 1), &CertifyOptions::default()).unwrap();
        let v = certificate_to_json(&trivial);
        assert_eq!(v["lambda"], Value::Null);
        assert_eq!(v["status"], json!("TrivialWord"));
    }

    #[test]
    fn malformed_certificate() {
        assert!(matches!(certificate_from_json(&json!({"params": [1, 2]})), Err(Error::InvalidJson(_))));
    }
}
