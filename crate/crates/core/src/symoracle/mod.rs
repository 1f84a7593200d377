//! Torus-weight model of the unitary computation.
//!
//! On the maximal torus, `d(L^k s_n)` restricts to
//! `sum_{|S| = k} lambda^S (x) sum_{i in S} t_i` with `t_i = d(lambda_i)`.
//! `psi^l` sends `lambda_i -> lambda_i^l` and `t_i -> l t_i`. Rewriting the
//! image back in terms of the restricted generators uses elementary and
//! complete homogeneous symmetric polynomials only; bounded compositions
//! never appear, so the coefficients obtained here are an oracle for
//! [`crate::counts`].
//!
//! Only linear combinations of the `t_i` occur, so a weight-level element is
//! stored as its vector of `t_i` coefficients ([`TVector`]).

mod sympoly;

pub use sympoly::SymPoly;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Complete,
}

/// Calls `f` on every subset of `0..n` of size `k`, as a sorted index list.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Calls `f` on every exponent tuple of length `n` summing to `d`.
fn for_each_composition(n: usize, d: u32, f: &mut impl FnMut(&[u32])) {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if i + 1 == cur.len() {
            cur[i] = left;
            f(cur);
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            go(i + 1, left - x, cur, f);
        }
    }
    if n == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    go(0, d, &mut vec![0; n], f);
}

/// `e_k` or `h_k` in `n` variables, straight from the definitions.
pub fn symmetric_basis(n: usize, k: u32, kind: SymKind) -> SymPoly {
    let mut out = SymPoly::zero(n);
    match kind {
        SymKind::Elementary => {
            if k as usize <= n {
                for_each_subset(n, k as usize, &mut |s| {
                    let mut e = vec![0; n];
                    s.iter().for_each(|&i| e[i] = 1);
                    out.add_assign_scaled(&SymPoly::monomial(e, BigInt::one()), &BigInt::one());
                });
            }
        }
        SymKind::Complete => {
            for_each_composition(n, k, &mut |e| {
                out.add_assign_scaled(&SymPoly::monomial(e.to_vec(), BigInt::one()), &BigInt::one());
            });
        }
    }
    out
}

/// `h_0 ..= h_max` from the elementary polynomials by
/// `h_(i+1) = e_1 h_i - e_2 h_(i-1) + .. + (-1)^i e_(i+1)`.
pub fn complete_from_elementary(n: usize, max: u32) -> Vec<SymPoly> {
    let e: Vec<SymPoly> = (0..=max)
        .map(|k| symmetric_basis(n, k, SymKind::Elementary))
        .collect();
    let mut h = vec![SymPoly::one(n)];
    for m in 1..=max {
        let mut acc = SymPoly::zero(n);
        for s in 1..=m {
            if e[s as usize].is_zero() {
                continue;
            }
            let term = e[s as usize].mul(&h[(m - s) as usize]);
            acc.add_assign_scaled(&term, &BigInt::from(sign(s as i64 + 1)));
        }
        h.push(acc);
    }
    h
}

/// Triangular matrices converting between `(sum_i lambda_i^j t_i)_j` and the
/// restricted generators: `M[i][j] = (-1)^(j+1) e_(i-j)` and
/// `Minv[i][j] = (-1)^(j+1) h_(i-j)` for `i >= j` (one-based), zero above
/// the diagonal.
pub fn conversion_matrices(n: usize, size: usize) -> (Vec<Vec<SymPoly>>, Vec<Vec<SymPoly>>) {
    let h = complete_from_elementary(n, size as u32);
    let build = |entry: &dyn Fn(usize) -> SymPoly| -> Vec<Vec<SymPoly>> {
        (1..=size)
            .map(|i| {
                (1..=size)
                    .map(|j| {
                        if i < j {
                            SymPoly::zero(n)
                        } else {
                            entry(i - j).scale(&BigInt::from(sign(j as i64 + 1)))
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let m = build(&|d| symmetric_basis(n, d as u32, SymKind::Elementary));
    let minv = build(&|d| h[d].clone());
    (m, minv)
}

pub fn matrix_product(a: &[Vec<SymPoly>], b: &[Vec<SymPoly>], n: usize) -> Vec<Vec<SymPoly>> {
    let size = a.len();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let mut acc = SymPoly::zero(n);
                    for t in 0..size {
                        acc = acc.add(&a[i][t].mul(&b[t][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Element `sum_i coeffs[i] (x) t_i` of `R(T) (x) K^-1(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TVector {
    pub coeffs: Vec<SymPoly>,
}

impl TVector {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![SymPoly::zero(n); n],
        }
    }

    /// `self += c * other`, `c` a polynomial.
    pub fn add_mul(&mut self, c: &SymPoly, other: &TVector) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.add(&c.mul(b));
        }
    }
}

/// Restriction of `d(L^k s_n)` to the torus.
pub fn wedge_weights(n: usize, k: usize) -> TVector {
    let mut out = TVector::zero(n);
    for_each_subset(n, k, &mut |s| {
        let mut e = vec![0; n];
        s.iter().for_each(|&i| e[i] = 1);
        let mono = SymPoly::monomial(e, BigInt::one());
        for &i in s {
            out.coeffs[i] = out.coeffs[i].add(&mono);
        }
    });
    out
}

/// `sum_i lambda_i^d (x) t_i`.
pub fn power_weights(n: usize, d: u32) -> TVector {
    TVector {
        coeffs: (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = d;
                SymPoly::monomial(e, BigInt::one())
            })
            .collect(),
    }
}

/// `psi^l` of the restricted `d(L^k s_n)`, without the overall factor `l`.
pub fn adams_image_weights(n: usize, l: u32, k: usize) -> TVector {
    let base = wedge_weights(n, k);
    TVector {
        coeffs: base.coeffs.iter().map(|c| c.substitute_power(l)).collect(),
    }
}

fn check_args(n: usize, l: u32, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter { name: "n", value: 0, reason: "must be >= 1" });
    }
    if l == 0 {
        return Err(Error::InvalidParameter { name: "l", value: 0, reason: "must be >= 1" });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter {
            name: "k",
            value: k as i64,
            reason: "must satisfy 1 <= k <= n",
        });
    }
    Ok(())
}

/// Signed coefficients `c_p` (`p = 1..=n`) with
/// `psi^l d(L^k) = l sum_p c_p d(L^p)` over `R(T)`.
///
/// Uses `d(L^k) = sum_j (-1)^(j+1) e_(k-j) v_j` with `lambda -> lambda^l`,
/// then `v_N = sum_q (-1)^(q+1) h_(N-q) d(L^q)` with `d(L^q) = 0` for `q > n`.
pub fn signed_symbolic_coefficients(n: usize, l: u32, k: usize) -> Result<Vec<SymPoly>> {
    check_args(n, l, k)?;
    let h = complete_from_elementary(n, l * k as u32);
    let mut out = vec![SymPoly::zero(n); n];
    for j in 1..=k {
        let e = symmetric_basis(n, (k - j) as u32, SymKind::Elementary).substitute_power(l);
        if e.is_zero() {
            continue;
        }
        let big_n = l as usize * j;
        for p in 1..=n.min(big_n) {
            let term = e.mul(&h[big_n - p]);
            out[p - 1].add_assign_scaled(&term, &BigInt::from(sign((j + 1 + p + 1) as i64)));
        }
    }
    Ok(out)
}

/// For each `p = 1..=n`, the sum of `lambda^(k_1..k_n)` over tuples with
/// `0 <= k_r <= l - 1` summing to `l k - p`, obtained as
/// `(-1)^(k+p) c_p` from [`signed_symbolic_coefficients`].
pub fn adams_symbolic_coefficients(n: usize, l: u32, k: usize) -> Result<Vec<SymPoly>> {
    let signed = signed_symbolic_coefficients(n, l, k)?;
    Ok(signed
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.scale(&BigInt::from(sign((k + i + 1) as i64))))
        .collect())
}

/// `prod_i (1 + lambda_i + .. + lambda_i^(l-1))`.
pub fn bounded_product(n: usize, l: u32) -> SymPoly {
    let mut acc = SymPoly::one(n);
    for i in 0..n {
        let mut f = SymPoly::zero(n);
        for d in 0..l {
            let mut e = vec![0; n];
            e[i] = d;
            f = f.add(&SymPoly::monomial(e, BigInt::one()));
        }
        acc = acc.mul(&f);
    }
    acc
}

/// `prod_i (1 - lambda_i^l) / (1 - lambda_i)` expanded as
/// `prod_i (1 - lambda_i^l)(1 + lambda_i + lambda_i^2 + ..)`, keeping
/// degrees `<= max_degree`.
pub fn geometric_product(n: usize, l: u32, max_degree: u32) -> SymPoly {
    let mut acc = SymPoly::one(n);
    for i in 0..n {
        let mut num = SymPoly::one(n);
        let mut e = vec![0; n];
        e[i] = l;
        num.add_assign_scaled(&SymPoly::monomial(e, BigInt::one()), &-BigInt::one());
        let mut geo = SymPoly::zero(n);
        for d in 0..=max_degree {
            let mut e = vec![0; n];
            e[i] = d;
            geo = geo.add(&SymPoly::monomial(e, BigInt::one()));
        }
        acc = acc.mul_truncated(&num, max_degree).mul_truncated(&geo, max_degree);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIdentityReport {
    pub n: usize,
    pub l: u32,
    pub max_degree: u32,
    /// Degrees at which the two sides of the product identity differ.
    pub product_mismatches: Vec<u32>,
    /// `(k, p)` at which the alternating `e`/`h` sum differs from the
    /// bounded-composition sum.
    pub coefficient_mismatches: Vec<(usize, usize)>,
}

impl ProductIdentityReport {
    pub fn passed(&self) -> bool {
        self.product_mismatches.is_empty() && self.coefficient_mismatches.is_empty()
    }
}

/// Compares both sides of
/// `prod (1 - lambda_i^l) / prod (1 - lambda_i) = prod (1 + .. + lambda_i^(l-1))`
/// degree by degree, and checks
/// `sum_{q<k} (-1)^q e_q(lambda^l) h_(l(k-q)-p) = [degree lk - p part]`
/// for `1 <= k, p <= n`.
pub fn verify_product_identity(n: usize, l: u32, max_degree: u32) -> Result<ProductIdentityReport> {
    check_args(n, l, 1)?;
    let rhs = bounded_product(n, l);
    let lhs = geometric_product(n, l, max_degree);
    let product_mismatches = (0..=max_degree)
        .filter(|&d| lhs.homogeneous_part(d) != rhs.homogeneous_part(d))
        .collect();

    let h: Vec<SymPoly> = (0..=l * n as u32)
        .map(|d| symmetric_basis(n, d, SymKind::Complete))
        .collect();
    let mut coefficient_mismatches = Vec::new();
    for k in 1..=n {
        for p in 1..=n {
            let mut acc = SymPoly::zero(n);
            for q in 0..k {
                let deg = l as i64 * (k - q) as i64 - p as i64;
                if deg < 0 {
                    continue;
                }
                let e = symmetric_basis(n, q as u32, SymKind::Elementary).substitute_power(l);
                acc.add_assign_scaled(&e.mul(&h[deg as usize]), &BigInt::from(sign(q as i64)));
            }
            let target = (l as i64 * k as i64 - p as i64) as u32;
            if acc != rhs.homogeneous_part(target) {
                coefficient_mismatches.push((k, p));
            }
        }
    }
    Ok(ProductIdentityReport {
        n,
        l,
        max_degree,
        product_mismatches,
        coefficient_mismatches,
    })
}

/// Checks that the coefficients of [`signed_symbolic_coefficients`] really
/// rebuild the torus image: `sum_p c_p d(L^p) = psi^l d(L^k) / l` as
/// `t`-vectors.
pub fn weight_decomposition_holds(n: usize, l: u32, k: usize) -> Result<bool> {
    let coeffs = signed_symbolic_coefficients(n, l, k)?;
    let mut rebuilt = TVector::zero(n);
    for (i, c) in coeffs.iter().enumerate() {
        rebuilt.add_mul(c, &wedge_weights(n, i + 1));
    }
    Ok(rebuilt == adams_image_weights(n, l, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::mu;

    fn var_sum(n: usize) -> SymPoly {
        (0..n).fold(SymPoly::zero(n), |acc, i| acc.add(&SymPoly::var(n, i)))
    }

    /// Sum of monomials over bounded tuples, by listing them.
    fn brute_bounded_sum(n: usize, l: u32, s: i64) -> SymPoly {
        let mut out = SymPoly::zero(n);
        if s < 0 {
            return out;
        }
        for_each_composition(n, s as u32, &mut |e| {
            if e.iter().all(|&x| x < l) {
                out = out.add(&SymPoly::monomial(e.to_vec(), BigInt::one()));
            }
        });
        out
    }

    #[test]
    fn basis_examples() {
        assert_eq!(symmetric_basis(2, 1, SymKind::Elementary), var_sum(2));
        let h2 = symmetric_basis(2, 2, SymKind::Complete);
        assert_eq!(h2.len(), 3);
        assert_eq!(h2.eval_at_ones(), BigInt::from(3));
        assert!(symmetric_basis(2, 3, SymKind::Elementary).is_zero());
        assert_eq!(symmetric_basis(3, 0, SymKind::Elementary), SymPoly::one(3));
        assert_eq!(symmetric_basis(3, 0, SymKind::Complete), SymPoly::one(3));
    }

    #[test]
    fn newton_recursion_matches_direct_complete() {
        for n in 1..=4 {
            let h = complete_from_elementary(n, 8);
            for (d, hd) in h.iter().enumerate() {
                assert_eq!(hd, &symmetric_basis(n, d as u32, SymKind::Complete), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn conversion_matrices_are_inverse() {
        for n in 1..=4 {
            for size in 1..=6 {
                let (m, minv) = conversion_matrices(n, size);
                let prod = matrix_product(&m, &minv, n);
                for (i, row) in prod.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        let expect = if i == j { SymPoly::one(n) } else { SymPoly::zero(n) };
                        assert_eq!(x, &expect, "n={n} size={size} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_rewriting_of_wedge_weights() {
        for n in 1..=4 {
            for k in 1..=n {
                let mut rebuilt = TVector::zero(n);
                for j in 1..=k {
                    let e = symmetric_basis(n, (k - j) as u32, SymKind::Elementary)
                        .scale(&BigInt::from(sign(j as i64 + 1)));
                    rebuilt.add_mul(&e, &power_weights(n, j as u32));
                }
                assert_eq!(rebuilt, wedge_weights(n, k));
            }
        }
    }

    #[test]
    fn symbolic_examples() {
        let c = adams_symbolic_coefficients(2, 2, 1).unwrap();
        assert_eq!(c[0], var_sum(2));
        assert_eq!(c[1], SymPoly::one(2));

        for n in 1..=4 {
            for k in 1..=n {
                let c = adams_symbolic_coefficients(n, 1, k).unwrap();
                for (i, cp) in c.iter().enumerate() {
                    let expect = if i + 1 == k { SymPoly::one(n) } else { SymPoly::zero(n) };
                    assert_eq!(cp, &expect);
                }
            }
        }
    }

    #[test]
    fn symbolic_matches_listing_and_counts() {
        for n in 1..=4 {
            for l in 1..=3 {
                for k in 1..=n {
                    let c = adams_symbolic_coefficients(n, l, k).unwrap();
                    for p in 1..=n {
                        let s = l as i64 * k as i64 - p as i64;
                        assert_eq!(c[p - 1], brute_bounded_sum(n, l, s));
                        assert_eq!(c[p - 1].eval_at_ones(), mu(n as u32, l, k as u32, p as i64));
                    }
                    assert!(weight_decomposition_holds(n, l, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn symbolic_coefficients_are_symmetric() {
        let perms: [&[usize]; 3] = [&[1, 0, 2], &[2, 0, 1], &[0, 2, 1]];
        for l in 1..=3 {
            for k in 1..=3 {
                for c in adams_symbolic_coefficients(3, l, k).unwrap() {
                    for perm in perms {
                        assert_eq!(c.permute(perm), c);
                    }
                }
            }
        }
    }

    #[test]
    fn product_identity_examples() {
        assert!(verify_product_identity(2, 1, 5).unwrap().passed());
        assert!(verify_product_identity(2, 2, 4).unwrap().passed());
        assert!(verify_product_identity(3, 3, 6).unwrap().passed());
        let one = geometric_product(3, 1, 6);
        assert_eq!(one, SymPoly::one(3));
    }

    #[test]
    fn bad_arguments() {
        assert!(adams_symbolic_coefficients(3, 2, 0).is_err());
        assert!(adams_symbolic_coefficients(3, 2, 4).is_err());
        assert!(adams_symbolic_coefficients(3, 0, 1).is_err());
        assert!(verify_product_identity(0, 2, 3).is_err());
    }
}
