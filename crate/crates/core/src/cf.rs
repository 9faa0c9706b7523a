//! Partial quotients and convergents of `e = [2; 1, 2, 1, 1, 4, 1, 1, 6, …]`.
//!
//! Indices are 1-based throughout: `a₁ = 2`, and `p₁/q₁ = 2/1` is the first
//! convergent. For `k ≥ 1` the pattern is `a₃ₖ₋₁ = 1`, `a₃ₖ = 2k`,
//! `a₃ₖ₊₁ = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{EForm, Rational};
use crate::error::{precondition, Error, Result};

/// The `i`-th partial quotient of `e` (1-based).
pub fn partial_quotient(i: usize) -> Result<u64> {
    match i {
        0 => Err(precondition("partial quotients are indexed from 1")),
        1 => Ok(2),
        i if i % 3 == 0 => Ok(2 * (i / 3) as u64),
        _ => Ok(1),
    }
}

/// Iterator over the partial quotients of `e`, starting at `a₁`.
#[derive(Debug, Clone, Default)]
pub struct EQuotients {
    next_index: usize,
}

impl Iterator for EQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        self.next_index += 1;
        partial_quotient(self.next_index).ok().map(BigInt::from)
    }
}

pub fn e_quotients() -> EQuotients {
    EQuotients::default()
}

/// The `index`-th convergent `p/q` of a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }

    /// `q·e − p`, the quantity whose sign says on which side of `e` the
    /// convergent lies.
    pub fn defect(&self) -> EForm {
        EForm::new(self.q.clone(), -&self.p)
    }
}

impl fmt::Display for Convergent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Streams convergents of `[a₁; a₂, …]` through
/// `pₙ = aₙpₙ₋₁ + pₙ₋₂`, `qₙ = aₙqₙ₋₁ + qₙ₋₂`, started from the virtual
/// seeds `p₀/q₀ = 1/0` and `p₋₁/q₋₁ = 0/1`.
#[derive(Debug, Clone)]
pub struct Convergents<I> {
    quotients: I,
    index: usize,
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

impl<I: Iterator<Item = BigInt>> Convergents<I> {
    pub fn new(quotients: I) -> Self {
        Self {
            quotients,
            index: 0,
            p: (BigInt::zero(), BigInt::one()),
            q: (BigInt::one(), BigInt::zero()),
        }
    }
}

impl<I: Iterator<Item = BigInt>> Iterator for Convergents<I> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.quotients.next()?;
        let p = &a * &self.p.1 + &self.p.0;
        let q = &a * &self.q.1 + &self.q.0;
        self.p = (std::mem::replace(&mut self.p.1, p.clone()), p.clone());
        self.q = (std::mem::replace(&mut self.q.1, q.clone()), q.clone());
        self.index += 1;
        Some(Convergent {
            index: self.index,
            p,
            q,
        })
    }
}

/// Unbounded stream of the convergents of `e`.
pub fn e_convergents() -> Convergents<EQuotients> {
    Convergents::new(e_quotients())
}

/// The first `count` convergents of `e`.
pub fn convergents(count: usize) -> Result<Vec<Convergent>> {
    if count == 0 {
        return Err(precondition("convergent count must be at least 1"));
    }
    Ok(e_convergents().take(count).collect())
}

/// The `index`-th convergent of `e` (1-based).
pub fn convergent(index: usize) -> Result<Convergent> {
    if index == 0 {
        return Err(precondition("convergents are indexed from 1"));
    }
    Ok(e_convergents()
        .nth(index - 1)
        .expect("the quotient stream of e is infinite"))
}

/// Exact value of the finite continued fraction `[a₁; a₂, …, aₖ]`, folded
/// from the innermost term outward. `a₁` may be any nonnegative integer; the
/// remaining terms must be positive.
pub fn cf_eval<T: Into<BigInt>>(quotients: impl IntoIterator<Item = T>) -> Result<Rational> {
    let terms: Vec<BigInt> = quotients.into_iter().map(Into::into).collect();
    for (i, a) in terms.iter().enumerate() {
        if a.is_negative() || (i > 0 && a.is_zero()) {
            return Err(Error::InvalidPartialQuotient {
                index: i + 1,
                value: a.to_string(),
            });
        }
    }
    let (last, rest) = terms.split_last().ok_or(Error::EmptyContinuedFraction)?;
    Ok(rest
        .iter()
        .rev()
        .fold(Rational::from_integer(last.clone()), |acc, a| {
            Rational::from_integer(a.clone()) + acc.recip()
        }))
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;
    use crate::arith::rat;

    #[test]
    fn quotient_pattern() {
        let first: Vec<u64> = (1..=12).map(|i| partial_quotient(i).unwrap()).collect();
        assert_eq!(first, [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8]);
        assert_eq!(partial_quotient(6).unwrap(), 4);
        assert_eq!(partial_quotient(9).unwrap(), 6);
        assert!(partial_quotient(0).is_err());
    }

    #[test]
    fn first_convergents() {
        let got: Vec<Rational> = convergents(9).unwrap().iter().map(Convergent::value).collect();
        let want = [
            rat(2, 1),
            rat(3, 1),
            rat(8, 3),
            rat(11, 4),
            rat(19, 7),
            rat(87, 32),
            rat(106, 39),
            rat(193, 71),
            rat(1264, 465),
        ];
        assert_eq!(got, want);
        assert_eq!(convergents(1).unwrap(), [Convergent { index: 1, p: 2.into(), q: 1.into() }]);
        assert_eq!(convergents(5).unwrap().last().unwrap().to_string(), "19/7");
        assert!(convergents(0).is_err());
        assert_eq!(convergent(11).unwrap().value(), rat(2721, 1001));
    }

    #[test]
    fn cf_eval_examples() {
        assert_eq!(cf_eval([2]).unwrap(), rat(2, 1));
        assert_eq!(cf_eval([2, 1, 2]).unwrap(), rat(8, 3));
        assert_eq!(cf_eval([0, 3]).unwrap(), rat(1, 3));
        assert_eq!(cf_eval(Vec::<i32>::new()), Err(Error::EmptyContinuedFraction));
        assert!(matches!(cf_eval([2, 0, 1]), Err(Error::InvalidPartialQuotient { index: 2, .. })));
        assert!(cf_eval([-1]).is_err());
    }

    #[test]
    fn fold_matches_recurrence() {
        let convs = convergents(60).unwrap();
        for len in 1..=60 {
            let folded = cf_eval(e_quotients().take(len)).unwrap();
            assert_eq!(folded, convs[len - 1].value(), "prefix {len}");
            // the recurrence already yields lowest terms
            assert_eq!(folded.numer(), &convs[len - 1].p);
            assert_eq!(folded.denom(), &convs[len - 1].q);
        }
    }

    #[test]
    fn determinant_and_coprimality() {
        let convs = convergents(200).unwrap();
        for w in convs.windows(2) {
            let (prev, cur) = (&w[0], &w[1]);
            let det = &cur.p * &prev.q - &prev.p * &cur.q;
            let expected = if cur.index % 2 == 0 { 1 } else { -1 };
            assert_eq!(det, BigInt::from(expected), "k = {}", cur.index);
        }
        for c in &convs {
            assert!(c.p.gcd(&c.q).is_one());
            assert!(c.q >= BigInt::one());
        }
    }

    #[test]
    fn consecutive_convergents_alternate() {
        let convs = convergents(100).unwrap();
        let signs: Vec<bool> = convs
            .windows(2)
            .map(|w| (&w[1].p * &w[0].q - &w[0].p * &w[1].q).is_positive())
            .collect();
        assert!(signs.windows(2).all(|s| s[0] != s[1]));
    }
}
