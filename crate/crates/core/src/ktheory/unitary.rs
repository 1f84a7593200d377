use num_bigint::BigInt;

use super::group::{Family, GroupSpec};
use super::matrix::AdamsMatrix;
use crate::counts::mu;
use crate::error::{Error, Result};
use crate::exactmath::{sign, Rational};

pub(crate) fn check_l(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidParameter {
            name: "l",
            value: 0,
            reason: "Adams operations are built for l >= 1",
        });
    }
    Ok(())
}

/// Coefficients of `psi^l d(L^k s_m)` on `d(L^p s_m)`, `p = 1..=m`, in
/// `K^*(U(m))`: `(-1)^(k+p) l mu(m, l, k, p)`.
pub fn unitary_wedge_coefficients(m: u32, l: u32, k: u32) -> Vec<BigInt> {
    (1..=m)
        .map(|p| sign(k as i64 + p as i64) * BigInt::from(l) * mu(m, l, k, p as i64))
        .collect()
}

pub fn unitary_adams_matrix(n: u32, l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let group = GroupSpec::new(Family::U, n)?;
    let columns: Vec<Vec<BigInt>> = (1..=n).map(|k| unitary_wedge_coefficients(n, l, k)).collect();
    let entries = (0..n as usize)
        .map(|p| {
            columns
                .iter()
                .map(|c| Rational::from_integer(c[p].clone()))
                .collect()
        })
        .collect();
    Ok(AdamsMatrix::new(group, l, entries))
}

/// `U(n)` matrix with the row and column of `d(L^n s_n)` removed; that class
/// vanishes because the determinant is trivial on `SU(n)`.
pub fn special_unitary_adams_matrix(n: u32, l: u32) -> Result<AdamsMatrix> {
    let group = GroupSpec::new(Family::SU, n)?;
    let full = unitary_adams_matrix(n, l)?;
    let d = n as usize - 1;
    let entries = full.entries()[..d]
        .iter()
        .map(|row| row[..d].to_vec())
        .collect();
    Ok(AdamsMatrix::new(group, l, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn rows(m: &AdamsMatrix) -> Vec<Vec<i64>> {
        m.integer_entries()
            .unwrap()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn unitary_examples() {
        assert_eq!(rows(&unitary_adams_matrix(2, 2).unwrap()), [[4, 0], [-2, 2]]);
        assert_eq!(
            rows(&unitary_adams_matrix(3, 2).unwrap()),
            [[6, -2, 0], [-2, 6, 0], [0, -6, 2]]
        );
        for n in 1..=6 {
            let m = unitary_adams_matrix(n, 1).unwrap();
            assert_eq!(m, AdamsMatrix::identity(m.group()));
        }
    }

    #[test]
    fn unitary_u3_trace() {
        assert_eq!(unitary_adams_matrix(3, 2).unwrap().trace(), rat(14));
    }

    #[test]
    fn special_unitary_examples() {
        assert_eq!(rows(&special_unitary_adams_matrix(2, 2).unwrap()), [[4]]);
        for l in 1..=9 {
            assert_eq!(
                rows(&special_unitary_adams_matrix(2, l).unwrap()),
                [[(l * l) as i64]]
            );
        }
        let id = special_unitary_adams_matrix(5, 1).unwrap();
        assert_eq!(id, AdamsMatrix::identity(id.group()));
    }

    #[test]
    fn rejects_l_zero_and_bad_rank() {
        assert!(matches!(
            unitary_adams_matrix(3, 0),
            Err(Error::InvalidParameter { name: "l", .. })
        ));
        assert!(matches!(
            special_unitary_adams_matrix(1, 2),
            Err(Error::UnsupportedRank { .. })
        ));
    }
}
