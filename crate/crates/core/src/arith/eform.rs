use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::decimal::certify_decimal;
use super::interval::RationalInterval;
use super::rational::Rational;
use crate::error::Result;

/// The exact real number `e_coeff * e + const_coeff` with integer coefficients.
///
/// Every integral `∫₀¹ xⁿ(1−x)ᵐ eˣ dx` has this shape, as does each
/// `q·e − p` built from a convergent `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EForm {
    pub e_coeff: BigInt,
    pub const_coeff: BigInt,
}

impl EForm {
    pub fn new(e_coeff: impl Into<BigInt>, const_coeff: impl Into<BigInt>) -> Self {
        Self {
            e_coeff: e_coeff.into(),
            const_coeff: const_coeff.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.e_coeff.is_zero() && self.const_coeff.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            e_coeff: &self.e_coeff * k,
            const_coeff: &self.const_coeff * k,
        }
    }

    /// The rational `−const/e_coeff` obtained by treating the value as zero.
    /// `None` when the form does not involve `e`.
    pub fn neglect(&self) -> Option<Rational> {
        if self.e_coeff.is_zero() {
            return None;
        }
        Some(Rational::new(-&self.const_coeff, self.e_coeff.clone()))
    }

    /// Enclosure of the value given an enclosure of `e`.
    pub fn enclose(&self, e: &RationalInterval) -> RationalInterval {
        e.scale(&Rational::from_integer(self.e_coeff.clone()))
            .shift(&Rational::from_integer(self.const_coeff.clone()))
    }

    /// Certified truncated decimal of the value. Fails with
    /// [`crate::Error::EnclosureTooWide`] when `e` is not pinned down tightly
    /// enough for the requested digits.
    pub fn to_decimal(&self, digits: usize, e: &RationalInterval) -> Result<String> {
        certify_decimal(&self.enclose(e), digits)
    }
}

impl fmt::Display for EForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.const_coeff.is_negative() { '-' } else { '+' };
        write!(f, "{}*e {} {}", self.e_coeff, sign, self.const_coeff.abs())
    }
}

impl Add<&EForm> for &EForm {
    type Output = EForm;
    fn add(self, rhs: &EForm) -> EForm {
        EForm {
            e_coeff: &self.e_coeff + &rhs.e_coeff,
            const_coeff: &self.const_coeff + &rhs.const_coeff,
        }
    }
}

impl Sub<&EForm> for &EForm {
    type Output = EForm;
    fn sub(self, rhs: &EForm) -> EForm {
        EForm {
            e_coeff: &self.e_coeff - &rhs.e_coeff,
            const_coeff: &self.const_coeff - &rhs.const_coeff,
        }
    }
}

impl Neg for &EForm {
    type Output = EForm;
    fn neg(self) -> EForm {
        EForm {
            e_coeff: -&self.e_coeff,
            const_coeff: -&self.const_coeff,
        }
    }
}

impl Mul<&BigInt> for &EForm {
    type Output = EForm;
    fn mul(self, rhs: &BigInt) -> EForm {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr<EForm> for EForm {
            type Output = EForm;
            fn $m(self, rhs: EForm) -> EForm {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub);

impl Neg for EForm {
    type Output = EForm;
    fn neg(self) -> EForm {
        -&self
    }
}
