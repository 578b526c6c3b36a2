//! Exact arithmetic aliases and small combinatorial helpers.
//!
//! Every quantity that feeds a comparison is either an arbitrary-precision
//! nonnegative integer ([`Count`]) or an exact fraction ([`Ratio`], always in
//! lowest terms with positive denominator). No floating point anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub type Count = BigUint;
pub type Ratio = num_rational::BigRational;

/// Falling factorial (n)_k = n·(n−1)···(n−k+1); zero when k > n, one when k = 0.
pub fn falling_factorial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let mut acc = Count::one();
    for i in 0..k {
        acc *= Count::from(n - i);
    }
    acc
}

pub fn factorial(n: usize) -> Count {
    falling_factorial(n, n)
}

/// base^exp with the 0^0 = 1 convention.
pub fn count_pow(base: usize, exp: usize) -> Count {
    num_traits::pow::pow(Count::from(base), exp)
}

pub fn count_to_ratio(c: &Count) -> Ratio {
    Ratio::from_integer(BigInt::from(c.clone()))
}

pub fn ratio_from_counts(num: Count, den: Count) -> Ratio {
    assert!(!den.is_zero(), "zero denominator");
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio(num: i64, den: i64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// r^k by integer exponent, with the 0^0 = 1 convention.
pub fn ratio_pow(r: &Ratio, k: usize) -> Ratio {
    let k = u32::try_from(k).expect("exponent fits u32");
    Ratio::new(r.numer().pow(k), r.denom().pow(k))
}

/// Canonical text form "num/den", denominator always explicit and positive.
pub fn ratio_str(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses "a/b", a plain integer "a", or a decimal like "0.25" into an exact
/// fraction. Decimal forms are exact base-10 fractions, not floats.
pub fn parse_ratio(text: &str) -> Option<Ratio> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let digits = frac.len();
        if digits == 0 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        let frac: BigInt = frac.parse().ok()?;
        let scale = num_traits::pow::pow(BigInt::from(10), digits);
        let signed_frac = if negative { -frac } else { frac };
        return Some(Ratio::new(whole * &scale + signed_frac, scale));
    }
    let num: BigInt = text.parse().ok()?;
    Some(Ratio::from_integer(num))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 3), Count::from(60u32));
        assert_eq!(falling_factorial(5, 0), Count::one());
        assert_eq!(falling_factorial(3, 4), Count::zero());
        assert_eq!(factorial(5), Count::from(120u32));
    }

    #[test]
    fn ratio_powers() {
        assert_eq!(ratio_pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(ratio_pow(&ratio(0, 1), 0), ratio(1, 1));
        assert_eq!(ratio_pow(&ratio(-1, 2), 2), ratio(1, 4));
        assert_eq!(ratio_pow(&ratio(5, 7), 1), ratio(5, 7));
    }

    #[test]
    fn pow_convention() {
        assert_eq!(count_pow(0, 0), Count::one());
        assert_eq!(count_pow(0, 3), Count::zero());
        assert_eq!(count_pow(2, 10), Count::from(1024u32));
    }

    #[test]
    fn ratio_text_round_trip() {
        assert_eq!(ratio_str(&ratio(2, 5)), "2/5");
        assert_eq!(ratio_str(&ratio(4, 8)), "1/2");
        assert_eq!(ratio_str(&ratio(-1, 1)), "-1/1");
        assert_eq!(ratio_str(&ratio(3, -6)), "-1/2");
        assert_eq!(parse_ratio("2/5"), Some(ratio(2, 5)));
        assert_eq!(parse_ratio(" -3 "), Some(ratio(-3, 1)));
        assert_eq!(parse_ratio("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse_ratio("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(parse_ratio("x"), None);
    }
}
