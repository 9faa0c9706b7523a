use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;

use super::interval::RationalInterval;
use super::rational::{format_rational, Rational};

/// The exact real number `r + s*pi + t*ln2` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiForm {
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl PiForm {
    pub fn new(r: Rational, s: Rational, t: Rational) -> Self {
        Self { r, s, t }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.r * k, &self.s * k, &self.t * k)
    }

    /// `−r/s` when the form is `r + s*pi` with `s ≠ 0`: the approximation of
    /// `pi` obtained by treating the value as zero.
    pub fn neglect(&self) -> Option<Rational> {
        if !self.t.is_zero() || self.s.is_zero() {
            return None;
        }
        Some(-&self.r / &self.s)
    }

    pub fn enclose(&self, pi: &RationalInterval, ln2: &RationalInterval) -> RationalInterval {
        pi.scale(&self.s).add(&ln2.scale(&self.t)).shift(&self.r)
    }
}

impl fmt::Display for PiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*pi + {}*ln2",
            format_rational(&self.r),
            format_rational(&self.s),
            format_rational(&self.t)
        )
    }
}

impl Add<&PiForm> for &PiForm {
    type Output = PiForm;
    fn add(self, rhs: &PiForm) -> PiForm {
        PiForm::new(&self.r + &rhs.r, &self.s + &rhs.s, &self.t + &rhs.t)
    }
}

impl Mul<&Rational> for &PiForm {
    type Output = PiForm;
    fn mul(self, rhs: &Rational) -> PiForm {
        self.scale(rhs)
    }
}
