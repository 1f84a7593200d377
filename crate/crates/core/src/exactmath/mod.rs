//! Exact integers, rationals and the small amount of algebra built on them.

mod linalg;
mod poly;
mod series;

pub use linalg::{char_poly, rational_determinant};
pub use poly::UniPoly;
pub use series::{sinh_over_t, t_over_sinh_pow, TruncSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Formats a rational as `a` or `a/b`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeBinomialTop(a));
    }
    if b < 0 || b > a {
        return Ok(BigInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // exact at every step: acc is C(a, i) * ... / i!
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Bernoulli number `B_m` for even `m >= 0`, from the recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_even(m: i64) -> Result<Rational> {
    if m < 0 || m % 2 != 0 {
        return Err(Error::BadBernoulliIndex(m));
    }
    Ok(bernoulli_table(m as usize).swap_remove(m as usize))
}

/// `B_0 ..= B_max`, with `B_1 = -1/2`.
pub fn bernoulli_table(max: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(max + 1);
    table.push(Rational::one());
    for m in 1..=max {
        if m > 1 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                let c = binomial(m as i64 + 1, j as i64).expect("nonnegative top");
                acc += Rational::from_integer(c) * b;
            }
        }
        table.push(-acc / rat(m as i64 + 1));
    }
    table
}

/// `base^exp` with `0^0 = 1`.
pub fn pow_i64(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}
