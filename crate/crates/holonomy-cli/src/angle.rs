//! Angle flag grammar.
//!
//! Accepted forms, in order of preference:
//!
//! * `pi`, `pi*p`, `pi*p/q` — exact rational multiple of pi
//! * `sqrt:d*pi`, `sqrt:d*pi*p/q` — exact quadratic multiple (p/q)·sqrt(d)·pi
//! * `0.37`, `1.41421356*pi` — numeric radians
//!
//! A leading `-` negates any form. Exact forms keep downstream certificates
//! exact; decimals cap them at numeric-only.

use num::BigRational;

use holonomy_core::exact::{AngleSpec, QuadExt};

pub fn parse_angle(text: &str) -> Result<AngleSpec, String> {
    let text = text.trim();
    let (negate, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let spec = parse_unsigned(body)?;
    Ok(if negate { negated(spec) } else { spec })
}

fn negated(spec: AngleSpec) -> AngleSpec {
    match spec {
        AngleSpec::RationalPi(r) => AngleSpec::RationalPi(-r),
        AngleSpec::QuadPi(q) => AngleSpec::QuadPi(q.neg()),
        AngleSpec::Numeric(x) => AngleSpec::Numeric(-x),
    }
}

fn parse_unsigned(body: &str) -> Result<AngleSpec, String> {
    if body == "pi" {
        return Ok(AngleSpec::rational_pi(1, 1));
    }
    if let Some(rat) = body.strip_prefix("pi*") {
        let (p, q) = parse_ratio(rat)?;
        return Ok(AngleSpec::rational_pi(p, q));
    }
    if let Some(rest) = body.strip_prefix("sqrt:") {
        return parse_surd(rest);
    }
    if let Some(dec) = body.strip_suffix("*pi") {
        let x: f64 = dec
            .parse()
            .map_err(|_| format!("bad decimal {dec:?} in {body:?}"))?;
        return Ok(AngleSpec::Numeric(x * std::f64::consts::PI));
    }
    body.parse::<f64>()
        .map(AngleSpec::Numeric)
        .map_err(|_| format!("unrecognized angle {body:?}; use pi*p/q, sqrt:d*pi*p/q, or a decimal"))
}

/// `d*pi` or `d*pi*p/q` after the `sqrt:` marker.
fn parse_surd(rest: &str) -> Result<AngleSpec, String> {
    let mut parts = rest.splitn(3, '*');
    let d: u64 = parts
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| format!("bad sqrt base in sqrt:{rest}"))?;
    if parts.next() != Some("pi") {
        return Err(format!("expected pi after the sqrt base in sqrt:{rest}"));
    }
    let (p, q) = match parts.next() {
        Some(rat) => parse_ratio(rat)?,
        None => (1, 1),
    };
    let coeff = BigRational::new(p.into(), q.into());
    let quad = QuadExt::new(BigRational::from_integer(0.into()), coeff, d)
        .map_err(|e| format!("bad sqrt base {d}: {e}"))?;
    Ok(AngleSpec::QuadPi(quad))
}

/// `p` or `p/q` with integer p and positive integer q.
fn parse_ratio(text: &str) -> Result<(i64, i64), String> {
    let (p_text, q_text) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let p: i64 = p_text
        .parse()
        .map_err(|_| format!("bad numerator {p_text:?} in {text:?}"))?;
    let q: i64 = q_text
        .parse()
        .map_err(|_| format!("bad denominator {q_text:?} in {text:?}"))?;
    if q <= 0 {
        return Err(format!("denominator must be positive in {text:?}"));
    }
    Ok((p, q))
}
