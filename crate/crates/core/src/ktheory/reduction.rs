use super::group::{BasisKind, Family, GroupSpec};
use super::matrix::KVector;
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

/// Expresses `d(L^p rho)` for every exterior power `0 <= p <= dim(rho)` of the
/// defining representation `rho` in the group's primitive basis.
///
/// The rows come from representation relations:
///
/// * `L^p rho = L^(dim - p) rho` (the defining representations here are
///   self-dual with trivial determinant), so `d(L^0) = d(L^dim) = 0`.
/// * `Spin(2n+1)`: `S (x) S = L^0 + .. + L^n`, hence
///   `d(L^n) = 2^(n+1) d(S) - sum_{p<n} d(L^p)`.
/// * `Spin(2n)`: `S+^2 + S-^2 = 2 sum_{p>=1} L^(n-2p) + L^n` and
///   `S+ (x) S- = sum_{p>=0} L^(n-2p-1)`.
/// * `G2`: `L^2 = L^5 = rho1 + rho2`, `L^3 = L^4 = rho1^2 - rho2`.
///
/// `d` is a derivation through the augmentation, so
/// `d(a b) = dim(b) d(a) + dim(a) d(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTable {
    group: GroupSpec,
    rows: Vec<KVector>,
}

impl ReductionTable {
    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn defining_dim(&self) -> u32 {
        self.group.defining_dim()
    }

    /// `d(L^p rho)`; `p` ranges over `0..=dim`.
    pub fn row(&self, p: u32) -> &KVector {
        &self.rows[p as usize]
    }

    /// Maps `sum_p coeffs[p-1] d(L^p rho)` (for `p = 1..=dim`) into the basis.
    pub fn reduce(&self, coeffs: &[Rational]) -> KVector {
        assert_eq!(coeffs.len(), self.defining_dim() as usize);
        let mut out = KVector::zero(self.group);
        for (i, c) in coeffs.iter().enumerate() {
            out.add_scaled(&self.rows[i + 1], c);
        }
        out
    }
}

pub fn reduction_table(group: GroupSpec) -> Result<ReductionTable> {
    let n = group.n();
    let m = group.defining_dim();
    let unit = |kind| KVector::unit_of(group, kind);
    let wedge = |p| unit(BasisKind::Wedge(p));
    let zero = KVector::zero(group);
    let two_pow = |e: u32| Rational::from_integer(num_traits::pow(2.into(), e as usize));

    let mut rows: Vec<Option<KVector>> = vec![None; m as usize + 1];
    rows[0] = Some(zero.clone());
    rows[m as usize] = Some(zero.clone());

    match group.family() {
        Family::U | Family::SU => return Err(Error::NoReduction(group.family())),
        Family::Sp => {
            for p in 1..=n {
                rows[p as usize] = Some(wedge(p));
            }
        }
        Family::SpinOdd => {
            for p in 1..n {
                rows[p as usize] = Some(wedge(p));
            }
            let mut top = unit(BasisKind::SpinS).scaled(&two_pow(n + 1));
            for p in 1..n {
                top = top.minus(&wedge(p));
            }
            rows[n as usize] = Some(top);
        }
        Family::SpinEven => {
            for p in 1..=n - 2 {
                rows[p as usize] = Some(wedge(p));
            }
            let halves = unit(BasisKind::SpinPlus).plus(&unit(BasisKind::SpinMinus));

            let mut below = halves.scaled(&two_pow(n - 1));
            let mut j = n as i64 - 3;
            while j >= 1 {
                below = below.minus(&wedge(j as u32));
                j -= 2;
            }
            rows[n as usize - 1] = Some(below);

            let mut top = halves.scaled(&two_pow(n));
            let mut j = n as i64 - 2;
            while j >= 1 {
                top.add_scaled(&wedge(j as u32), &rat(-2));
                j -= 2;
            }
            rows[n as usize] = Some(top);
        }
        Family::G2 => {
            let rho1 = unit(BasisKind::G2Rho1);
            let rho2 = unit(BasisKind::G2Rho2);
            let l2 = rho1.plus(&rho2);
            // d(rho1^2 - rho2) = 2 * 7 d(rho1) - d(rho2)
            let l3 = rho1.scaled(&rat(14)).minus(&rho2);
            rows[1] = Some(rho1.clone());
            rows[2] = Some(l2.clone());
            rows[3] = Some(l3.clone());
            rows[4] = Some(l3);
            rows[5] = Some(l2);
            rows[6] = Some(rho1);
        }
    }

    // remaining rows by duality L^p = L^(m - p)
    for p in 1..m as usize {
        if rows[p].is_none() {
            let dual = rows[m as usize - p].clone();
            rows[p] = Some(dual.expect("dual row is filled first"));
        }
    }

    let rows: Vec<KVector> = rows.into_iter().map(|r| r.expect("all rows set")).collect();
    debug_assert!(rows.iter().all(|r| r.group() == group));
    Ok(ReductionTable { group, rows })
}
