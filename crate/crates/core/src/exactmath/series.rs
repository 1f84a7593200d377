use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Self::from_fn(n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order(), |i| &self.coeffs[i] * c)
    }

    /// Cauchy product through the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse by long division; the constant term must be
    /// nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `sinh(t) / t = sum_j t^(2j) / (2j+1)!` through `t^order`.
pub fn sinh_over_t(order: usize) -> TruncSeries {
    let mut fact = BigInt::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for i in 0..=order {
        // fact = (i+1)!
        fact *= BigInt::from(i + 1);
        coeffs.push(if i % 2 == 0 {
            Rational::new(BigInt::one(), fact.clone())
        } else {
            Rational::zero()
        });
    }
    TruncSeries { coeffs }
}

/// `(t / sinh t)^y` through `t^order`.
pub fn t_over_sinh_pow(y: u32, order: usize) -> TruncSeries {
    sinh_over_t(order)
        .inverse()
        .expect("constant term is 1")
        .pow(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn t_over_sinh_examples() {
        let s0 = t_over_sinh_pow(0, 4);
        assert_eq!(s0.coeffs(), &[rat(1), rat(0), rat(0), rat(0), rat(0)]);

        let s1 = t_over_sinh_pow(1, 4);
        assert_eq!(
            s1.coeffs(),
            &[rat(1), rat(0), frac(-1, 6), rat(0), frac(7, 360)]
        );

        let s2 = t_over_sinh_pow(2, 4);
        assert_eq!(
            s2.coeffs(),
            &[rat(1), rat(0), frac(-1, 3), rat(0), frac(1, 15)]
        );
        assert_eq!(s2, s1.mul(&s1));
    }

    #[test]
    fn odd_coefficients_vanish() {
        let s = t_over_sinh_pow(5, 21);
        for i in (1..=21).step_by(2) {
            assert!(s.coeff(i).is_zero());
        }
    }

    #[test]
    fn power_consistency() {
        let base = t_over_sinh_pow(1, 20);
        let mut acc = TruncSeries::one(20);
        for y in 0..=10u32 {
            let direct = t_over_sinh_pow(y, 20);
            for j in 0..=10 {
                assert_eq!(direct.coeff(2 * j), acc.coeff(2 * j), "y={y} j={j}");
            }
            acc = acc.mul(&base);
        }
    }

    #[test]
    fn inverse_rejects_zero_constant() {
        let s = TruncSeries::from_coeffs(3, vec![rat(0), rat(1)]);
        assert_eq!(s.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn division_undoes_multiplication() {
        let a = TruncSeries::from_coeffs(6, vec![rat(2), rat(-1), frac(1, 3)]);
        let b = sinh_over_t(6);
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    fn small_series() -> impl Strategy<Value = TruncSeries> {
        proptest::collection::vec((-20i64..20, 1i64..6), 7)
            .prop_map(|v| TruncSeries::from_coeffs(6, v.into_iter().map(|(a, b)| frac(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn mul_commutative(a in small_series(), b in small_series()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_associative(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn mul_distributes(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
