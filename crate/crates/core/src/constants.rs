//! Certified rational enclosures of `e`, `pi` and `ln 2` from series partial
//! sums with explicit tail bounds, and certified decimal rendering of linear
//! forms built on them.
//!
//! These never feed back into exact results; they are only used to print
//! decimals and as independent oracles. Enclosures are memoized per digit
//! count behind a mutex.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{certify_decimal, pow10, EForm, PiForm, Rational, RationalInterval};
use crate::error::Result;

/// Enclosure of `e` of width below `10^-(digits+1)` from the Taylor partial sum
/// `Σ_{j≤N} 1/j!` and the tail bound `Σ_{j>N} 1/j! < 2/(N+1)!`.
pub fn e_reference(digits: usize) -> RationalInterval {
    static CACHE: EnclosureCache = OnceLock::new();
    cached(&CACHE, digits, taylor_e)
}

type EnclosureCache = OnceLock<Mutex<HashMap<usize, RationalInterval>>>;

fn cached(
    cache: &EnclosureCache,
    digits: usize,
    compute: fn(usize) -> RationalInterval,
) -> RationalInterval {
    let cache = cache.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("enclosure cache poisoned").get(&digits) {
        return hit.clone();
    }
    let encl = compute(digits);
    cache
        .lock()
        .expect("enclosure cache poisoned")
        .insert(digits, encl.clone());
    encl
}

fn taylor_e(digits: usize) -> RationalInterval {
    // stop at the first N with (N+1)! > 2·10^(digits+1)
    let threshold = BigInt::from(2) * num_traits::pow(BigInt::from(10), digits + 1);
    // partial sum held as numer / N!
    let mut numer = BigInt::one();
    let mut fact = BigInt::one();
    let mut n: u64 = 0;
    loop {
        let next_fact = &fact * BigInt::from(n + 1);
        if next_fact > threshold {
            let lo = Rational::new(numer, fact);
            let hi = &lo + Rational::new(BigInt::from(2), next_fact);
            return RationalInterval::hull(lo, hi);
        }
        n += 1;
        fact = next_fact;
        numer = numer * BigInt::from(n) + 1;
    }
}

/// Hull of two consecutive partial sums of `arctan(1/x)`, which brackets the
/// limit because the series alternates with decreasing terms.
fn arctan_recip(x: u64, terms: usize) -> RationalInterval {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut prev = Rational::zero();
    for k in 0..=terms {
        prev = sum.clone();
        let term = Rational::new(BigInt::one(), &power * BigInt::from(2 * k as u64 + 1));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
    }
    RationalInterval::hull(prev, sum)
}

/// Enclosure of `pi` of width below `10^-(digits+1)` via Machin's formula
/// `pi = 16·atan(1/5) − 4·atan(1/239)`.
pub fn pi_reference(digits: usize) -> RationalInterval {
    static CACHE: EnclosureCache = OnceLock::new();
    cached(&CACHE, digits, machin_pi)
}

fn machin_pi(digits: usize) -> RationalInterval {
    let target = pow10(digits + 1).recip();
    let mut terms = 1;
    loop {
        let a = arctan_recip(5, terms).scale(&Rational::from_integer(16.into()));
        let b = arctan_recip(239, terms).scale(&Rational::from_integer((-4).into()));
        let pi = a.add(&b);
        if pi.width() < target {
            return pi;
        }
        terms += 1;
    }
}

/// Enclosure of `ln 2` of width below `10^-(digits+1)` from
/// `Σ_{k≥1} 1/(k·2^k)` with tail `< 1/((N+1)·2^N)`.
pub fn ln2_reference(digits: usize) -> RationalInterval {
    static CACHE: EnclosureCache = OnceLock::new();
    cached(&CACHE, digits, series_ln2)
}

fn series_ln2(digits: usize) -> RationalInterval {
    let target = pow10(digits + 1).recip();
    let mut sum = Rational::zero();
    let mut pow2 = BigInt::one();
    let mut k: u64 = 0;
    loop {
        let tail = Rational::new(BigInt::one(), BigInt::from(k + 1) * &pow2);
        if tail < target {
            let hi = &sum + tail;
            return RationalInterval::hull(sum, hi);
        }
        k += 1;
        pow2 <<= 1;
        sum += Rational::new(BigInt::one(), BigInt::from(k) * &pow2);
    }
}

const MAX_EXTRA_DIGITS: usize = 2048;

fn refine_until_certified(
    digits: usize,
    start: usize,
    enclose: impl Fn(usize) -> RationalInterval,
) -> Result<String> {
    let mut extra = start;
    loop {
        match certify_decimal(&enclose(digits + extra), digits) {
            Ok(s) => return Ok(s),
            Err(err) if extra >= MAX_EXTRA_DIGITS => return Err(err),
            Err(_) => extra = (extra * 2).max(extra + 4),
        }
    }
}

fn decimal_len(x: &BigInt) -> usize {
    if x.is_zero() {
        0
    } else {
        x.abs().to_string().len()
    }
}

/// Certified truncated decimal of an [`EForm`], refining the enclosure of `e`
/// until the requested digits are settled.
pub fn eform_decimal(form: &EForm, digits: usize) -> Result<String> {
    if form.e_coeff.is_zero() {
        let value = Rational::from_integer(form.const_coeff.clone());
        return certify_decimal(&RationalInterval::point(value), digits);
    }
    refine_until_certified(digits, decimal_len(&form.e_coeff) + 2, |d| {
        form.enclose(&e_reference(d))
    })
}

/// Certified truncated decimal of a [`PiForm`].
pub fn piform_decimal(form: &PiForm, digits: usize) -> Result<String> {
    if form.s.is_zero() && form.t.is_zero() {
        return certify_decimal(&RationalInterval::point(form.r.clone()), digits);
    }
    let scale = decimal_len(form.s.numer()).max(decimal_len(form.t.numer()));
    refine_until_certified(digits, scale + 2, |d| {
        form.enclose(&pi_reference(d), &ln2_reference(d))
    })
}

/// Sign of an [`EForm`], decided by refining the enclosure of `e`. `None`
/// only if the refinement budget runs out.
pub fn eform_sign(form: &EForm) -> Option<std::cmp::Ordering> {
    if form.is_zero() {
        return Some(std::cmp::Ordering::Equal);
    }
    // multiples of 64 so repeated calls share cached enclosures
    let mut d = (decimal_len(&form.e_coeff) + 4).next_multiple_of(64);
    while d <= MAX_EXTRA_DIGITS * 4 {
        let encl = form.enclose(&e_reference(d));
        if encl.lo().is_positive() {
            return Some(std::cmp::Ordering::Greater);
        }
        if encl.hi().is_negative() {
            return Some(std::cmp::Ordering::Less);
        }
        d *= 2;
    }
    None
}
