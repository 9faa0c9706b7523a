//! Executable form of the identities tying `I(n, m)` for `|n − m| ≤ 1` to the
//! convergents `pₖ/qₖ` of `e`:
//!
//! ```text
//! I(k, k)     = (−1)ᵏ   k! (q₃ₖ₋₁ e − p₃ₖ₋₁)   k ≥ 1
//! I(k, k+1)   = (−1)ᵏ   k! (q₃ₖ₊₁ e − p₃ₖ₊₁)   k ≥ 0
//! I(k+1, k)   = (−1)ᵏ⁺¹ k! (q₃ₖ   e − p₃ₖ)     k ≥ 1
//! ```
//!
//! Since every `I(n, m)` is positive, the first identity places `e` on a
//! known side of `p₃ₖ₋₁/q₃ₖ₋₁`, and two consecutive diagonals bracket it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{certify_decimal, pow10, EForm, Rational, RationalInterval};
use crate::cf::{e_convergents, Convergent};
use crate::error::{precondition, Result};
use crate::integral::IntegralTable;

pub use crate::constants::e_reference;

/// Which of the three identities a check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityVariant {
    /// `I(k, k)` against convergent `3k − 1`.
    Diag,
    /// `I(k, k+1)` against convergent `3k + 1`.
    Upper,
    /// `I(k+1, k)` against convergent `3k`.
    Lower,
}

impl IdentityVariant {
    pub const ALL: [IdentityVariant; 3] = [Self::Diag, Self::Upper, Self::Lower];

    pub fn min_k(self) -> usize {
        match self {
            Self::Upper => 0,
            Self::Diag | Self::Lower => 1,
        }
    }

    pub fn integral_index(self, k: usize) -> (usize, usize) {
        match self {
            Self::Diag => (k, k),
            Self::Upper => (k, k + 1),
            Self::Lower => (k + 1, k),
        }
    }

    pub fn convergent_index(self, k: usize) -> usize {
        match self {
            Self::Diag => 3 * k - 1,
            Self::Upper => 3 * k + 1,
            Self::Lower => 3 * k,
        }
    }

    fn negated(self, k: usize) -> bool {
        let odd = k % 2 == 1;
        match self {
            Self::Diag | Self::Upper => odd,
            Self::Lower => !odd,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Diag => "diag",
            Self::Upper => "upper",
            Self::Lower => "lower",
        }
    }
}

impl fmt::Display for IdentityVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityVariant {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| precondition(format!("unknown identity variant {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub k: usize,
    pub variant: IdentityVariant,
    /// The integral, evaluated exactly.
    pub lhs: EForm,
    /// `±k!·(q·e − p)` built from the convergent.
    pub rhs: EForm,
    pub holds: bool,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn check_admissible(k: usize, variant: IdentityVariant) -> Result<()> {
    if k < variant.min_k() {
        return Err(precondition(format!(
            "the {variant} identity needs k >= {}, got {k}",
            variant.min_k()
        )));
    }
    Ok(())
}

/// Builds one report from a table covering `(k+1, k+1)` and the convergents
/// `convs[i] = convergent i+1` up to index `3k+1`.
fn report_from(
    table: &IntegralTable,
    convs: &[Convergent],
    k: usize,
    variant: IdentityVariant,
) -> CheckReport {
    let (n, m) = variant.integral_index(k);
    let lhs = table.get(n, m).expect("table covers the index").clone();
    let conv = &convs[variant.convergent_index(k) - 1];
    let mut scale = factorial(k);
    if variant.negated(k) {
        scale = -scale;
    }
    let rhs = conv.defect().scale(&scale);
    let holds = lhs == rhs;
    CheckReport {
        k,
        variant,
        lhs,
        rhs,
        holds,
    }
}

/// Checks one identity exactly.
pub fn theorem_identity(k: usize, variant: IdentityVariant) -> Result<CheckReport> {
    check_admissible(k, variant)?;
    let table = IntegralTable::up_to(k + 1, k + 1);
    let convs: Vec<Convergent> = e_convergents().take(3 * k + 1).collect();
    Ok(report_from(&table, &convs, k, variant))
}

/// Every admissible `(k, variant)` with `k ≤ max_k`, ordered by `k` and then
/// `diag < upper < lower`. That is `3·max_k + 1` reports.
pub fn verify_range(max_k: usize) -> Result<Vec<CheckReport>> {
    if max_k == 0 {
        return Err(precondition("verify_range needs max_k >= 1"));
    }
    let table = IntegralTable::up_to(max_k + 1, max_k + 1);
    let convs: Vec<Convergent> = e_convergents().take(3 * max_k + 1).collect();
    let jobs: Vec<(usize, IdentityVariant)> = (0..=max_k)
        .flat_map(|k| {
            IdentityVariant::ALL
                .into_iter()
                .filter(move |v| k >= v.min_k())
                .map(move |v| (k, v))
        })
        .collect();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok(jobs
            .par_iter()
            .map(|&(k, v)| report_from(&table, &convs, k, v))
            .collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(jobs
            .iter()
            .map(|&(k, v)| report_from(&table, &convs, k, v))
            .collect())
    }
}

/// One-sided bound on `e` read off a positive integral `a·e + b`: `e > −b/a`
/// when `a > 0`, `e < −b/a` when `a < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EBound {
    Below(Rational),
    Above(Rational),
}

impl EBound {
    pub fn from_positive_integral(form: &EForm) -> Option<Self> {
        let approx = form.neglect()?;
        Some(if form.e_coeff.is_positive() {
            EBound::Below(approx)
        } else {
            EBound::Above(approx)
        })
    }

    pub fn value(&self) -> &Rational {
        match self {
            EBound::Below(x) | EBound::Above(x) => x,
        }
    }
}

/// Successive brackets of `e` from the diagonal integrals, reusing one
/// growing table.
#[derive(Debug, Clone)]
pub struct Brackets {
    table: IntegralTable,
    k: usize,
}

impl Brackets {
    pub fn new() -> Self {
        Self {
            table: IntegralTable::new(),
            k: 0,
        }
    }

    fn bracket_at(&mut self, k: usize) -> RationalInterval {
        let here = EBound::from_positive_integral(self.table.eval(k, k))
            .expect("diagonal integrals involve e for k >= 1");
        let next = EBound::from_positive_integral(self.table.eval(k + 1, k + 1))
            .expect("diagonal integrals involve e for k >= 1");
        let (lo, hi) = match (here, next) {
            (EBound::Below(lo), EBound::Above(hi)) | (EBound::Above(hi), EBound::Below(lo)) => {
                (lo, hi)
            }
            _ => unreachable!("consecutive diagonal integrals have opposite e-coefficient signs"),
        };
        RationalInterval::new(lo, hi).expect("lower bound of e below upper bound of e")
    }
}

impl Default for Brackets {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Brackets {
    type Item = (usize, RationalInterval);

    fn next(&mut self) -> Option<Self::Item> {
        self.k += 1;
        let k = self.k;
        Some((k, self.bracket_at(k)))
    }
}

/// Interval with endpoints `p₃ₖ₋₁/q₃ₖ₋₁` and `p₃ₖ₊₂/q₃ₖ₊₂` containing `e`,
/// derived from the positivity of `I(k, k)` and `I(k+1, k+1)`.
pub fn bracket_e(k: usize) -> Result<RationalInterval> {
    if k == 0 {
        return Err(precondition("bracket_e needs k >= 1"));
    }
    Ok(Brackets::new().bracket_at(k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EApprox {
    /// `e` truncated to the requested fractional digits.
    pub decimal: String,
    /// Smallest `k` whose bracket settles those digits.
    pub witness_k: usize,
    pub interval: RationalInterval,
}

/// Certified decimal of `e`, taken from the first bracket narrower than
/// `10^-digits` whose endpoints truncate to the same digits.
pub fn approx_e(digits: usize) -> Result<EApprox> {
    if digits == 0 {
        return Err(precondition("approx_e needs at least one digit"));
    }
    let limit = pow10(digits).recip();
    for (k, interval) in Brackets::new() {
        if interval.width() >= limit {
            continue;
        }
        if let Ok(decimal) = certify_decimal(&interval, digits) {
            return Ok(EApprox {
                decimal,
                witness_k: k,
                interval,
            });
        }
    }
    unreachable!("bracket stream is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, truncate_decimal};
    use crate::cf::convergent;

    #[test]
    fn single_identities() {
        let r = theorem_identity(2, IdentityVariant::Diag).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, EForm::new(14, -38));
        assert_eq!(r.rhs, EForm::new(14, -38));

        let r = theorem_identity(0, IdentityVariant::Upper).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, EForm::new(1, -2));

        let r = theorem_identity(1, IdentityVariant::Lower).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, EForm::new(3, -8));

        assert!(theorem_identity(0, IdentityVariant::Diag).is_err());
        assert!(theorem_identity(0, IdentityVariant::Lower).is_err());
    }

    #[test]
    fn range_shapes() {
        let r1 = verify_range(1).unwrap();
        let tags: Vec<(usize, IdentityVariant)> = r1.iter().map(|r| (r.k, r.variant)).collect();
        assert_eq!(
            tags,
            [
                (0, IdentityVariant::Upper),
                (1, IdentityVariant::Diag),
                (1, IdentityVariant::Upper),
                (1, IdentityVariant::Lower)
            ]
        );
        assert!(r1.iter().all(|r| r.holds));
        let r2 = verify_range(2).unwrap();
        assert_eq!(r2.len(), 7);
        assert!(r2.iter().all(|r| r.holds));
        assert!(verify_range(0).is_err());
    }

    #[test]
    fn wrong_convergent_fails_the_check() {
        // pair I(2,2) with convergent 6 instead of 5
        let table = IntegralTable::up_to(3, 3);
        let mut convs: Vec<Convergent> = e_convergents().take(7).collect();
        convs.swap(4, 5);
        assert!(!report_from(&table, &convs, 2, IdentityVariant::Diag).holds);
    }

    #[test]
    fn variant_names_round_trip() {
        for v in IdentityVariant::ALL {
            assert_eq!(v.to_string().parse::<IdentityVariant>().unwrap(), v);
        }
        assert!("side".parse::<IdentityVariant>().is_err());
    }

    #[test]
    fn first_brackets() {
        assert_eq!(bracket_e(1).unwrap(), RationalInterval::new(rat(19, 7), rat(3, 1)).unwrap());
        assert_eq!(bracket_e(2).unwrap(), RationalInterval::new(rat(19, 7), rat(193, 71)).unwrap());
        assert_eq!(
            bracket_e(3).unwrap(),
            RationalInterval::new(rat(2721, 1001), rat(193, 71)).unwrap()
        );
        assert!(bracket_e(0).is_err());
    }

    #[test]
    fn brackets_have_convergent_endpoints() {
        for (k, b) in Brackets::new().take(20) {
            let a = convergent(3 * k - 1).unwrap().value();
            let c = convergent(3 * k + 2).unwrap().value();
            assert_eq!(b, RationalInterval::hull(a, c), "k = {k}");
        }
    }

    #[test]
    fn brackets_nest_and_obey_the_factorial_bound() {
        let brackets: Vec<RationalInterval> = Brackets::new().take(31).map(|(_, b)| b).collect();
        for (i, pair) in brackets.windows(2).enumerate() {
            let k = i + 1;
            assert!(pair[0].encloses(&pair[1]), "k = {k}");
            let bound = Rational::new(
                BigInt::from(6),
                num_traits::pow(BigInt::from(4), k) * factorial(k),
            );
            assert!(pair[0].width() <= bound, "k = {k}");
        }
    }

    #[test]
    fn taylor_enclosure_sits_inside_every_bracket() {
        // bracket 30 is ~4.5e-101 wide, so the reference must be tighter still
        let fine = e_reference(110);
        let coarse = e_reference(40);
        for (k, b) in Brackets::new().take(30) {
            assert!(b.encloses(&fine), "k = {k}");
            assert!(b.lo() < coarse.hi() && coarse.lo() < b.hi(), "k = {k}");
        }
    }

    #[test]
    fn approximations() {
        let a = approx_e(1).unwrap();
        assert_eq!(a.decimal, "2.7");
        assert!(a.witness_k <= 2);
        assert_eq!(approx_e(3).unwrap().decimal, "2.718");
        let a = approx_e(10).unwrap();
        assert_eq!(a.decimal, "2.7182818284");
        assert!(e_reference(10).encloses(&a.interval));
        assert!(approx_e(0).is_err());
    }

    #[test]
    fn approximations_match_taylor_digits() {
        for d in 1..=50 {
            let reference = e_reference(d + 2);
            assert_eq!(
                approx_e(d).unwrap().decimal,
                truncate_decimal(reference.lo(), d),
                "digits = {d}"
            );
        }
    }
}
