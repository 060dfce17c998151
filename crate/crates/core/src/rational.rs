use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational number used throughout the toolkit.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serializes as `numerator/denominator`, always with an explicit
/// denominator (`3/1`, `-1/2`, `0/1`).
pub fn to_ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// The value as an `i64`, if it is an integer that fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

pub(crate) fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::from(1), |acc, x| {
        let d = x.denom();
        let g = num_integer::Integer::gcd(&acc, d);
        &acc / g * d
    })
}

/// `true` when `r` is a non-negative integer.
pub fn is_natural(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
