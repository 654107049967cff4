//! Base-`r` digit expansions, least significant digit first.

use crate::arith;
use crate::error::{domain, Error, Result};

/// Canonical base-`r` expansion of a nonnegative integer.
///
/// `digits[i]` is the coefficient of `base^i`. The last stored digit is
/// nonzero; zero has an empty digit list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadixExpansion {
    base: u64,
    digits: Vec<u64>,
}

pub(crate) fn check_base(r: u64) -> Result<()> {
    if r < 2 {
        Err(Error::InvalidBase(r))
    } else {
        Ok(())
    }
}

impl RadixExpansion {
    /// Builds an expansion from explicit digits, rejecting out-of-range
    /// digits and trailing zeros.
    pub fn from_digits(base: u64, digits: Vec<u64>) -> Result<Self> {
        check_base(base)?;
        if let Some(d) = digits.iter().find(|&&d| d >= base) {
            return Err(domain(format!("digit {d} out of range for base {base}")));
        }
        if digits.last() == Some(&0) {
            return Err(domain("expansion has a trailing zero digit"));
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `i`, zero beyond the stored length.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Digits at positions 0, 2, 4, ...
    pub fn even_digits(&self) -> impl Iterator<Item = u64> + '_ {
        self.digits.iter().copied().step_by(2)
    }

    /// Digits at positions 1, 3, 5, ...
    pub fn odd_digits(&self) -> impl Iterator<Item = u64> + '_ {
        self.digits.iter().copied().skip(1).step_by(2)
    }

    pub fn value(&self) -> Result<u64> {
        reassemble(self)
    }
}

pub fn expand(mut n: u64, r: u64) -> Result<RadixExpansion> {
    check_base(r)?;
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % r);
        n /= r;
    }
    Ok(RadixExpansion { base: r, digits })
}

/// Evaluates `Σ digits[i]·base^i`, failing on overflow.
pub fn reassemble(e: &RadixExpansion) -> Result<u64> {
    eval_digits(e.digits.iter().copied(), e.base)
}

/// Horner evaluation of least-significant-first `digits` in base `base`.
pub(crate) fn eval_digits<I>(digits: I, base: u64) -> Result<u64>
where
    I: DoubleEndedIterator<Item = u64>,
{
    digits
        .rev()
        .try_fold(0u64, |acc, d| arith::add(arith::mul(acc, base)?, d))
}

/// The exponent of the largest power of `r` dividing `n`.
pub fn valuation(mut n: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    if n == 0 {
        return Err(domain("valuation of 0 is undefined"));
    }
    let mut tau = 0;
    while n.is_multiple_of(r) {
        n /= r;
        tau += 1;
    }
    Ok(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expands_example_values() {
        assert_eq!(expand(27, 2).unwrap().digits(), &[1, 1, 0, 1, 1]);
        assert!(expand(0, 5).unwrap().is_empty());
        assert_eq!(expand(25, 2).unwrap().digits(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn reassembles_example_values() {
        let e = RadixExpansion::from_digits(2, vec![1, 1, 0, 1, 1]).unwrap();
        assert_eq!(reassemble(&e), Ok(27));
        let e = RadixExpansion::from_digits(3, vec![]).unwrap();
        assert_eq!(reassemble(&e), Ok(0));
        let e = RadixExpansion::from_digits(3, vec![2, 1]).unwrap();
        assert_eq!(reassemble(&e), Ok(5));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(expand(5, 1), Err(Error::InvalidBase(1)));
        assert_eq!(expand(5, 0), Err(Error::InvalidBase(0)));
        assert!(RadixExpansion::from_digits(2, vec![1, 2]).is_err());
        assert!(RadixExpansion::from_digits(10, vec![1, 0]).is_err());
        assert!(valuation(0, 2).is_err());
    }

    #[test]
    fn reassemble_overflow() {
        let e =
            RadixExpansion::from_digits(2, vec![0; 63].into_iter().chain([1]).collect()).unwrap();
        assert_eq!(reassemble(&e), Err(Error::Overflow));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(12, 2), Ok(2));
        assert_eq!(valuation(2, 3), Ok(0));
        assert_eq!(valuation(9, 3), Ok(2));
    }

    #[test]
    fn digit_views() {
        let e = expand(27, 2).unwrap();
        assert_eq!(e.even_digits().collect::<Vec<_>>(), vec![1, 0, 1]);
        assert_eq!(e.odd_digits().collect::<Vec<_>>(), vec![1, 1]);
        assert_eq!(e.digit(10), 0);
    }

    #[test]
    fn round_trip_sweep() {
        for r in [2, 3, 4, 5, 10] {
            for n in 0..=1_000_000u64 {
                let e = expand(n, r).unwrap();
                assert_eq!(e.value(), Ok(n));
            }
        }
    }

    proptest! {
        #[test]
        fn canonical_and_valuation(n in 1u64..=arith::LIMIT, r in 2u64..40) {
            let e = expand(n, r).unwrap();
            prop_assert_ne!(e.digits().last(), Some(&0));
            prop_assert!(e.digits().iter().all(|&d| d < r));
            prop_assert_eq!(e.value(), Ok(n));
            let zeros = e.digits().iter().take_while(|&&d| d == 0).count() as u64;
            prop_assert_eq!(valuation(n, r), Ok(zeros));
        }
    }
}
