//! Eigenvectors of `psi^l` on `K^*(U(n)) (x) Q` and spectra for all groups.
//!
//! The eigenvector for the eigenvalue `l^(n-k)` has coordinate
//!
//! ```text
//! (-1)^(i-1) sum_{j=0}^{floor(k/2)} p_j(n) / (k-2j)! * (n-2i)^(k-2j)
//! ```
//!
//! on `d(L^i s_n)`, where `(t / sinh t)^y = sum_j p_j(y) t^(2j)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    bernoulli_table, char_poly, factorial, pow_i64, rat, rational_determinant, sign, Rational,
    UniPoly,
};
use crate::ktheory::{adams_matrix, unitary_adams_matrix, Family, GroupSpec, KVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PjPolynomial {
    pub j: u32,
    pub poly: UniPoly,
}

/// `p_0 ..= p_max` from `p_0 = 1`,
/// `p_j(y) = -(y / 2j) sum_{k=1}^{j} 2^(2k) B_(2k) / (2k)! p_(j-k)(y)`.
pub fn pj_polynomials(max_j: u32) -> Vec<PjPolynomial> {
    let bern = bernoulli_table(2 * max_j as usize);
    // weights[k] = 2^(2k) B_(2k) / (2k)!
    let weights: Vec<Rational> = (0..=max_j)
        .map(|k| {
            let k2 = 2 * k;
            Rational::from_integer(pow_i64(2, k2)) * &bern[k2 as usize]
                / Rational::from_integer(factorial(k2))
        })
        .collect();

    let mut polys: Vec<UniPoly> = vec![UniPoly::one()];
    for j in 1..=max_j {
        let mut acc = UniPoly::zero();
        for k in 1..=j {
            acc = &acc + &polys[(j - k) as usize].scale(&weights[k as usize]);
        }
        let factor = UniPoly::var().scale(&Rational::new(BigInt::from(-1), BigInt::from(2 * j)));
        polys.push(&factor * &acc);
    }
    polys
        .into_iter()
        .enumerate()
        .map(|(j, poly)| PjPolynomial { j: j as u32, poly })
        .collect()
}

pub fn pj_polynomial(j: u32) -> PjPolynomial {
    pj_polynomials(j).pop().expect("at least p_0")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvector {
    pub n: u32,
    pub k: u32,
    pub vector: KVector,
}

impl Eigenvector {
    /// Exponent `n - k` of the eigenvalue `l^(n-k)`.
    pub fn exponent(&self) -> u32 {
        self.n - self.k
    }

    pub fn eigenvalue(&self, l: u32) -> BigInt {
        pow_i64(l as i64, self.exponent())
    }

    /// The same vector scaled by the least common multiple of its
    /// denominators.
    pub fn integer_cleared(&self) -> Vec<BigInt> {
        let lcm = self
            .vector
            .coords()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.vector
            .coords()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    }
}

fn eigenvector_with(n: u32, k: u32, pj_at_n: &[Rational]) -> Result<Eigenvector> {
    let group = GroupSpec::new(Family::U, n)?;
    if k >= n {
        return Err(Error::LevelOutOfRange { n, k });
    }
    let coords = (1..=n)
        .map(|i| {
            let base = n as i64 - 2 * i as i64;
            let inner: Rational = (0..=k / 2)
                .map(|j| {
                    let e = k - 2 * j;
                    &pj_at_n[j as usize] * Rational::from_integer(pow_i64(base, e))
                        / Rational::from_integer(factorial(e))
                })
                .sum();
            inner * rat(sign(i as i64 - 1))
        })
        .collect();
    Ok(Eigenvector {
        n,
        k,
        vector: KVector::from_coords(group, coords),
    })
}

fn pj_values(n: u32, max_j: u32) -> Vec<Rational> {
    let y = rat(n as i64);
    pj_polynomials(max_j).iter().map(|p| p.poly.eval(&y)).collect()
}

/// Eigenvector of `psi^l` on `U(n)` for the eigenvalue `l^(n-k)`, `0 <= k < n`.
pub fn eigenvector(n: u32, k: u32) -> Result<Eigenvector> {
    eigenvector_with(n, k, &pj_values(n, k / 2))
}

/// All `n` eigenvectors, `k = 0..n`.
pub fn eigenbasis(n: u32) -> Result<Vec<Eigenvector>> {
    let values = pj_values(n, n.saturating_sub(1) / 2);
    (0..n).map(|k| eigenvector_with(n, k, &values)).collect()
}

/// Determinant of the matrix whose columns are the eigenbasis vectors.
pub fn eigenbasis_determinant(n: u32) -> Result<Rational> {
    let basis = eigenbasis(n)?;
    let rows: Vec<Vec<Rational>> = (0..n as usize)
        .map(|i| basis.iter().map(|v| v.vector.coords()[i].clone()).collect())
        .collect();
    Ok(rational_determinant(&rows))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCheck {
    pub k: u32,
    pub eigenvalue: BigInt,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub n: u32,
    pub l: u32,
    pub levels: Vec<LevelCheck>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|c| c.passed)
    }
}

/// Checks `M(U(n), l) v_k = l^(n-k) v_k` for every level `k`.
pub fn verify_eigen_relation(n: u32, l: u32) -> Result<EigenReport> {
    let m = unitary_adams_matrix(n, l)?;
    let levels = eigenbasis(n)?
        .into_iter()
        .map(|v| {
            let eigenvalue = v.eigenvalue(l);
            let expected = v.vector.scaled(&Rational::from_integer(eigenvalue.clone()));
            LevelCheck {
                k: v.k,
                passed: m.apply(&v.vector) == expected,
                eigenvalue,
            }
        })
        .collect();
    Ok(EigenReport { n, l, levels })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub group: GroupSpec,
    pub l: u32,
    /// `l^(m_i + 1)` in exponent order.
    pub expected_eigenvalues: Vec<BigInt>,
    /// Ascending coefficients of `det(x I - M)`.
    pub char_poly: Vec<BigInt>,
    pub expected_char_poly: Vec<BigInt>,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.char_poly == self.expected_char_poly
    }
}

/// Ascending coefficients of `prod_i (x - roots[i])`.
pub fn poly_from_roots(roots: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for r in roots {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        out = next;
    }
    out
}

pub fn spectrum_check(group: GroupSpec, l: u32) -> Result<SpectrumReport> {
    let m = adams_matrix(group, l)?;
    let expected_eigenvalues: Vec<BigInt> = group
        .exponents()
        .iter()
        .map(|&e| pow_i64(l as i64, e + 1))
        .collect();
    Ok(SpectrumReport {
        group,
        l,
        char_poly: char_poly(&m.integer_entries()?),
        expected_char_poly: poly_from_roots(&expected_eigenvalues),
        expected_eigenvalues,
    })
}
