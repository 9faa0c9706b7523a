//! Exact evaluation of `I(n, m) = ∫₀¹ xⁿ (1−x)ᵐ eˣ dx` as an integer
//! combination of `e` and `1`.
//!
//! Integration by parts gives, for `n, m ≥ 1`,
//! `I(n, m) = m·I(n, m−1) − n·I(n−1, m)`, and the two boundary families
//! `I(n, 0) = e − n·I(n−1, 0)` and `I(0, m) = m·I(0, m−1) − 1` seed it from
//! `I(0, 0) = e − 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::arith::{EForm, Rational, RationalInterval};
use crate::constants::eform_sign;
use crate::error::{precondition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegralIndex {
    pub n: usize,
    pub m: usize,
}

impl IntegralIndex {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }
}

impl fmt::Display for IntegralIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({}, {})", self.n, self.m)
    }
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

/// `I(n, 0) = ∫₀¹ xⁿ eˣ dx`.
pub fn base_row_n0(n: usize) -> EForm {
    (1..=n).fold(EForm::new(1, -1), |prev, k| {
        &EForm::new(1, 0) - &prev.scale(&big(k))
    })
}

/// `I(0, m) = ∫₀¹ (1−x)ᵐ eˣ dx`.
pub fn base_col_0m(m: usize) -> EForm {
    (1..=m).fold(EForm::new(1, -1), |prev, k| {
        &prev.scale(&big(k)) - &EForm::new(0, 1)
    })
}

/// Memo of `I(n, m)` over a rectangle `[0, rows) × [0, cols)`, grown on
/// demand row by row.
///
/// Once built it is only read, so a finished table can be shared freely
/// between threads.
#[derive(Debug, Clone, Default)]
pub struct IntegralTable {
    rows: Vec<Vec<EForm>>,
}

impl IntegralTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table covering every index with `n ≤ max_n` and `m ≤ max_m`.
    pub fn up_to(max_n: usize, max_m: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(max_n, max_m);
        table
    }

    pub fn extend_to(&mut self, max_n: usize, max_m: usize) {
        let cols = max_m.max(self.cols().saturating_sub(1)) + 1;
        for n in 0..=max_n.max(self.rows.len().saturating_sub(1)) {
            if n == self.rows.len() {
                self.rows.push(Vec::with_capacity(cols));
            }
            for m in self.rows[n].len()..cols {
                let value = self.next_entry(n, m);
                self.rows[n].push(value);
            }
        }
    }

    fn next_entry(&self, n: usize, m: usize) -> EForm {
        match (n, m) {
            (0, 0) => EForm::new(1, -1),
            (n, 0) => &EForm::new(1, 0) - &self.rows[n - 1][0].scale(&big(n)),
            (0, m) => &self.rows[0][m - 1].scale(&big(m)) - &EForm::new(0, 1),
            (n, m) => &self.rows[n][m - 1].scale(&big(m)) - &self.rows[n - 1][m].scale(&big(n)),
        }
    }

    fn cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&EForm> {
        self.rows.get(n)?.get(m)
    }

    /// Looks up `I(n, m)`, growing the table first if needed.
    pub fn eval(&mut self, n: usize, m: usize) -> &EForm {
        if self.get(n, m).is_none() {
            self.extend_to(n, m);
        }
        &self.rows[n][m]
    }
}

/// Exact value of `I(n, m)`.
pub fn eval_exact(idx: IntegralIndex) -> EForm {
    let mut table = IntegralTable::up_to(idx.n, idx.m);
    table.rows.swap_remove(idx.n).swap_remove(idx.m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaCheck {
    /// `I(n−1, m−1) = I(n, m−1) + I(n−1, m)`.
    pub pascal_ok: bool,
    /// `I(n, m) = m·I(n, m−1) − n·I(n−1, m)`.
    pub parts_ok: bool,
}

/// Checks both reduction identities at `idx` against a prebuilt table.
pub fn check_lemma_in(table: &IntegralTable, idx: IntegralIndex) -> Result<LemmaCheck> {
    let IntegralIndex { n, m } = idx;
    if n == 0 || m == 0 {
        return Err(precondition(format!(
            "lemma identities need n, m >= 1, got {idx}"
        )));
    }
    let entry = |n, m| {
        table
            .get(n, m)
            .ok_or_else(|| precondition(format!("table does not cover I({n}, {m})")))
    };
    let (nm, up, left, diag) = (entry(n, m)?, entry(n - 1, m)?, entry(n, m - 1)?, entry(n - 1, m - 1)?);
    Ok(LemmaCheck {
        pascal_ok: *diag == left + up,
        parts_ok: *nm == &left.scale(&big(m)) - &up.scale(&big(n)),
    })
}

pub fn check_lemma(idx: IntegralIndex) -> Result<LemmaCheck> {
    check_lemma_in(&IntegralTable::up_to(idx.n, idx.m), idx)
}

/// An upper bound of the form `coeff · e` with an exact rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EMultiple {
    pub coeff: Rational,
}

impl EMultiple {
    pub fn enclose(&self, e: &RationalInterval) -> RationalInterval {
        e.scale(&self.coeff)
    }

    /// Exact comparison of the real number `self` with `form`.
    pub fn cmp_form(&self, form: &EForm) -> Option<Ordering> {
        // coeff·e − (a·e + b), scaled by the denominator of coeff
        let den = self.coeff.denom();
        let diff = EForm {
            e_coeff: self.coeff.numer() - &form.e_coeff * den,
            const_coeff: -(&form.const_coeff * den),
        };
        eform_sign(&diff)
    }
}

impl fmt::Display for EMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.numer().is_one() {
            write!(f, "e/{}", self.coeff.denom())
        } else {
            write!(f, "{}*e/{}", self.coeff.numer(), self.coeff.denom())
        }
    }
}

/// `I(n, m) ≤ e·B(n+1, m+1) = e / ((n+m+1)·C(n+m, n))`.
pub fn beta_bound(idx: IntegralIndex) -> EMultiple {
    let den = big(idx.n + idx.m + 1) * binomial(big(idx.n + idx.m), big(idx.n));
    EMultiple {
        coeff: Rational::new(BigInt::one(), den),
    }
}

/// `I(k, k) ≤ e / 4ᵏ`, from `x(1−x) ≤ 1/4` on `[0, 1]`.
pub fn diagonal_bound(k: usize) -> Result<EMultiple> {
    if k == 0 {
        return Err(precondition("diagonal bound needs k >= 1"));
    }
    Ok(EMultiple {
        coeff: Rational::new(BigInt::one(), num_traits::pow(big(4), k)),
    })
}

/// Floating-point estimate of `I(n, m)` by adaptive quadrature, accurate to
/// about `tol`.
#[cfg(feature = "quadrature")]
pub fn quad_reference(idx: IntegralIndex, tol: f64) -> f64 {
    let (n, m) = (idx.n as i32, idx.m as i32);
    crate::quadrature::adaptive_simpson(
        |x| x.powi(n) * (1.0 - x).powi(m) * x.exp(),
        0.0,
        1.0,
        tol,
    )
}

/// `0 < form ≤ bound`, decided exactly.
pub fn within_bounds(form: &EForm, bound: &EMultiple) -> bool {
    eform_sign(form) == Some(Ordering::Greater)
        && matches!(bound.cmp_form(form), Some(Ordering::Greater | Ordering::Equal))
}
