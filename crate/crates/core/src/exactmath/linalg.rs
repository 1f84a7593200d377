//! Exact determinants and characteristic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Integer polynomial, ascending coefficients, trailing zeros trimmed.
type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let len = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Division in `Z[x]` that is known to be exact.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    assert!(!den.is_empty(), "division by the zero polynomial");
    if num.is_empty() {
        return Vec::new();
    }
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = &den[dl - 1];
    assert!(rem.len() >= dl, "inexact polynomial division");
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + dl - 1];
        let (q, r) = top.div_rem(lead);
        assert!(r.is_zero(), "inexact polynomial division");
        if !q.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
        }
        quot[shift] = q;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(quot)
}

/// Characteristic polynomial `det(x I - A)` of a square integer matrix,
/// returned as ascending coefficients (monic, length `n + 1`).
///
/// Fraction-free (Bareiss) elimination over `Z[x]`: every division is exact,
/// so no rational ever appears.
pub fn char_poly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut m: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            assert_eq!(a[i].len(), n, "matrix must be square");
            (0..n)
                .map(|j| {
                    let c = -a[i][j].clone();
                    if i == j {
                        trim(vec![c, BigInt::one()])
                    } else {
                        trim(vec![c])
                    }
                })
                .collect()
        })
        .collect();

    let mut negate = false;
    let mut prev: IntPoly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                // singular in x, which cannot happen for x I - A
                None => return vec![BigInt::zero(); n + 1],
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly_sub(&poly_mul(&m[k][k], &m[i][j]), &poly_mul(&m[i][k], &m[k][j]));
                m[i][j] = poly_exact_div(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det.iter_mut().for_each(|c| *c = -c.clone());
    }
    det.resize(n + 1, BigInt::zero());
    det
}

/// Determinant over the rationals by Gaussian elimination.
pub fn rational_determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        let p = m[k][k].clone();
        det *= &p;
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &p;
            for (x, y) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= &f * y;
            }
        }
    }
    det
}
