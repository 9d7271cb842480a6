//! Exact integers and rationals, binomial coefficients, Catalan numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;

/// Always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// `C(n, k)`, zero when `k` lies outside `0..=n`.
///
/// A negative upper index is rejected rather than silently mapped to zero.
pub fn binomial(n: i64, k: i64) -> Result<ExactInteger> {
    if n < 0 {
        return Err(Error::NegativeArgument { name: "n", value: n });
    }
    Ok(binomial_unchecked(n as u64, k))
}

/// Binomial with a zero result for every `k` outside `0..=n`; `n` is already known to be non-negative.
pub(crate) fn binomial_unchecked(n: u64, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial where any negative upper index yields zero.
///
/// Used by determinant formulas whose entries may have a negative top.
pub(crate) fn binomial_or_zero(n: i64, k: i64) -> ExactInteger {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial_unchecked(n as u64, k)
    }
}

pub fn catalan(n: i64) -> Result<ExactInteger> {
    if n < 0 {
        return Err(Error::NegativeArgument { name: "n", value: n });
    }
    Ok(binomial_unchecked(2 * n as u64, n) / (n + 1))
}

pub fn rational(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer_rational(value: ExactInteger) -> ExactRational {
    BigRational::from_integer(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, i| acc * i)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(3, 1).unwrap(), BigInt::from(3));
        assert_eq!(binomial(4, -1).unwrap(), BigInt::zero());
        assert_eq!(binomial(4, 5).unwrap(), BigInt::zero());
        // 11! / (5! 6!)
        let direct = factorial(11) / (factorial(5) * factorial(6));
        assert_eq!(direct, BigInt::from(462));
        assert_eq!(binomial(11, 5).unwrap(), direct);
        assert_eq!(binomial(0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn binomial_rejects_negative_top() {
        assert_eq!(
            binomial(-1, 0),
            Err(Error::NegativeArgument { name: "n", value: -1 })
        );
        assert!(catalan(-2).is_err());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0).unwrap(), BigInt::one());
        assert_eq!(catalan(3).unwrap(), BigInt::from(5));
        assert_eq!(catalan(5).unwrap(), BigInt::from(42));
        for n in 0..=60 {
            assert_eq!(catalan(n).unwrap() * (n + 1), binomial(2 * n, n).unwrap());
        }
    }

    #[test]
    fn large_binomial_is_exact() {
        // C(130, 65) ~ 9.5e37
        let direct = factorial(130) / (factorial(65) * factorial(65));
        assert_eq!(binomial(130, 65).unwrap(), direct);
    }

    #[test]
    fn rationals_normalize() {
        let r = rational(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
        assert!(!r.is_integer());
        assert!(rational(8, 4).is_integer());
    }
}
