use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies
/// `x^i`. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `x^n (1 − x)^m`.
    pub fn beta_kernel(n: usize, m: usize) -> Self {
        let mut p = Self::new(
            std::iter::repeat_with(Rational::zero)
                .take(n)
                .chain(std::iter::once(Rational::one()))
                .collect(),
        );
        let one_minus_x = Self::from_integers(&[1, -1]);
        for _ in 0..m {
            p = &p * &one_minus_x;
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `∫₀¹ p(x) dx`.
    pub fn integrate_unit(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / Rational::from_integer((i as u64 + 1).into()))
            .sum()
    }

    /// Splits `p = quotient·(1 + x²) + u + v·x`, returning `(quotient, u, v)`.
    pub fn divmod_x2_plus_1(&self) -> (Poly, Rational, Rational) {
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(2)];
        for d in (2..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[d]);
            if lead.is_zero() {
                continue;
            }
            rem[d - 2] -= &lead;
            quot[d - 2] = lead;
        }
        rem.resize(2, Rational::zero());
        let v = rem.pop().unwrap_or_default();
        let u = rem.pop().unwrap_or_default();
        (Poly::new(quot), u, v)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}
