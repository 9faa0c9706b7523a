//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively; the `#[wasm_bindgen]`
//! wrappers only convert errors into JS exceptions.

use econv::arith::{format_rational, Rational};
use econv::cf::convergent;
use econv::constants::{eform_decimal, piform_decimal};
use econv::integral::{beta_bound, eval_exact, IntegralIndex};
use econv::pi::{pi_eval_exact, PiIntegrandParams};
use econv::theorem::{approx_e, Brackets};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest n or m the page may ask for; the exact coefficients grow like (n+m)!.
pub const MAX_INDEX: usize = 200;
pub const MAX_DIGITS: usize = 200;
pub const MAX_BRACKETS: usize = 60;
const SAMPLES: usize = 101;

fn log10_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 900 {
        return x.to_f64().unwrap_or(f64::NAN).abs().log10();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::NAN).abs().log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// `log10 |x|` for rationals far outside the `f64` range.
fn log10_rational(x: &Rational) -> f64 {
    log10_big(x.numer()) - log10_big(x.denom())
}

fn check_limit(name: &str, value: usize, max: usize) -> Result<(), String> {
    if value > max {
        return Err(format!("{name} must be at most {max}"));
    }
    Ok(())
}

fn samples(f: impl Fn(f64) -> f64) -> Value {
    (0..SAMPLES)
        .map(|i| {
            let x = i as f64 / (SAMPLES - 1) as f64;
            json!([x, f(x)])
        })
        .collect()
}

/// Exact `I(n, m)`, its decimal, the beta bound and what neglecting it says
/// about `e`, plus integrand samples for plotting.
pub fn integral_json(n: usize, m: usize, digits: usize) -> Result<String, String> {
    check_limit("n", n, MAX_INDEX)?;
    check_limit("m", m, MAX_INDEX)?;
    check_limit("digits", digits, MAX_DIGITS)?;
    let idx = IntegralIndex::new(n, m);
    let form = eval_exact(idx);
    let decimal = eform_decimal(&form, digits).map_err(|e| e.to_string())?;
    let approx = form.neglect();
    // |n − m| ≤ 1 lands on a convergent of e
    let convergent_index = match (n, m) {
        (n, m) if n == m && n >= 1 => Some(3 * n - 1),
        (n, m) if m == n + 1 => Some(3 * n + 1),
        (n, m) if n == m + 1 && m >= 1 => Some(3 * m),
        _ => None,
    };
    let convergent_index = convergent_index.filter(|&i| {
        approx.as_ref() == convergent(i).ok().map(|c| c.value()).as_ref()
    });
    let (ni, mi) = (n as i32, m as i32);
    Ok(json!({
        "n": n,
        "m": m,
        "form": form.to_string(),
        "e_coeff": form.e_coeff.to_string(),
        "const_coeff": form.const_coeff.to_string(),
        "decimal": decimal,
        "bound": beta_bound(idx).to_string(),
        "approx": approx.as_ref().map(format_rational),
        "approx_decimal": approx.as_ref().map(|a| econv::arith::truncate_decimal(a, digits)),
        "convergent_index": convergent_index,
        "samples": samples(|x| x.powi(ni) * (1.0 - x).powi(mi) * x.exp()),
    })
    .to_string())
}

/// The first `count` brackets of `e` with their widths on a log scale, and
/// the certified digits they settle.
pub fn brackets_json(count: usize, digits: usize) -> Result<String, String> {
    if count == 0 {
        return Err("count must be at least 1".into());
    }
    check_limit("count", count, MAX_BRACKETS)?;
    check_limit("digits", digits, MAX_DIGITS)?;
    let brackets: Vec<Value> = Brackets::new()
        .take(count)
        .map(|(k, b)| {
            json!({
                "k": k,
                "lo": format_rational(b.lo()),
                "hi": format_rational(b.hi()),
                "log10_width": log10_rational(&b.width()),
            })
        })
        .collect();
    let approx = if digits == 0 {
        Value::Null
    } else {
        let a = approx_e(digits).map_err(|e| e.to_string())?;
        json!({ "decimal": a.decimal, "witness_k": a.witness_k })
    };
    Ok(json!({ "brackets": brackets, "approx": approx }).to_string())
}

/// Exact `∫₀¹ xⁿ(1−x)ᵐ(a+bx+cx²)/(1+x²) dx` as `r + s·pi + t·ln2`.
pub fn pi_integral_json(n: usize, m: usize, a: u32, b: u32, c: u32, digits: usize) -> Result<String, String> {
    check_limit("n", n, MAX_INDEX)?;
    check_limit("m", m, MAX_INDEX)?;
    check_limit("digits", digits, MAX_DIGITS)?;
    let params = PiIntegrandParams::new(n, m, a.into(), b.into(), c.into()).map_err(|e| e.to_string())?;
    let value = pi_eval_exact(&params);
    let decimal = piform_decimal(&value, digits).map_err(|e| e.to_string())?;
    let approx = value.neglect();
    let (ni, mi) = (n as i32, m as i32);
    let (af, bf, cf) = (f64::from(a), f64::from(b), f64::from(c));
    Ok(json!({
        "form": value.to_string(),
        "r": format_rational(&value.r),
        "s": format_rational(&value.s),
        "t": format_rational(&value.t),
        "decimal": decimal,
        "approx": approx.as_ref().map(format_rational),
        "approx_decimal": approx.as_ref().map(|a| econv::arith::truncate_decimal(a, digits)),
        "samples": samples(|x| x.powi(ni) * (1.0 - x).powi(mi) * (af + bf * x + cf * x * x) / (1.0 + x * x)),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn integral(n: usize, m: usize, digits: usize) -> Result<String, JsError> {
    integral_json(n, m, digits).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn brackets(count: usize, digits: usize) -> Result<String, JsError> {
    brackets_json(count, digits).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pi_integral(n: usize, m: usize, a: u32, b: u32, c: u32, digits: usize) -> Result<String, JsError> {
    pi_integral_json(n, m, a, b, c, digits).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn integral_reports_convergent() {
        let v = parse(&integral_json(2, 2, 6).unwrap());
        assert_eq!(v["form"], "14*e - 38");
        assert_eq!(v["decimal"], "0.055945");
        assert_eq!(v["approx"], "19/7");
        assert_eq!(v["convergent_index"], 5);
        assert_eq!(v["bound"], "e/30");
        assert_eq!(v["samples"].as_array().unwrap().len(), SAMPLES);

        let v = parse(&integral_json(0, 1, 4).unwrap());
        assert_eq!(v["approx"], "2/1");
        assert_eq!(v["convergent_index"], 1);

        let v = parse(&integral_json(5, 1, 4).unwrap());
        assert_eq!(v["convergent_index"], Value::Null);

        let v = parse(&integral_json(1, 0, 4).unwrap());
        assert_eq!(v["approx"], Value::Null);
    }

    #[test]
    fn brackets_shrink() {
        let v = parse(&brackets_json(40, 20).unwrap());
        let widths: Vec<f64> = v["brackets"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| b["log10_width"].as_f64().unwrap())
            .collect();
        assert!((widths[0] - (2.0f64 / 7.0).log10()).abs() < 1e-12);
        assert!(widths.windows(2).all(|w| w[1] < w[0]));
        assert!(widths[39] < -140.0);
        assert_eq!(v["approx"]["decimal"], "2.71828182845904523536");
    }

    #[test]
    fn pi_integral_dalzell() {
        let v = parse(&pi_integral_json(4, 4, 1, 0, 0, 8).unwrap());
        assert_eq!(v["r"], "22/7");
        assert_eq!(v["decimal"], "0.00126448");
        assert_eq!(v["approx"], "22/7");
    }

    #[test]
    fn limits_and_errors() {
        assert!(integral_json(MAX_INDEX + 1, 0, 4).is_err());
        assert!(brackets_json(0, 4).is_err());
        assert!(pi_integral_json(1, 1, 0, 0, 0, 4).is_err());
    }

    #[test]
    fn log10_of_huge_rationals() {
        let x = Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 500));
        assert!((log10_rational(&x) + 500.0).abs() < 1e-9);
    }
}
