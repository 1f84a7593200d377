//! `psi^l` pulled back from `U(dim rho)` along the defining representation
//! `rho`, then rewritten in the group's primitive basis.

use num_traits::One;

use super::group::{BasisKind, Family, GroupSpec};
use super::matrix::{AdamsMatrix, KVector};
use super::reduction::{reduction_table, ReductionTable};
use super::unitary::{check_l, unitary_wedge_coefficients};
use crate::error::Result;
use crate::exactmath::{frac, pow_i64, rat, Rational};

/// `psi^l d(L^k rho)` for any `1 <= k <= dim rho`, reduced into the basis.
pub fn pulled_back_wedge_image(table: &ReductionTable, l: u32, k: u32) -> KVector {
    let coeffs: Vec<Rational> = unitary_wedge_coefficients(table.defining_dim(), l, k)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    table.reduce(&coeffs)
}

pub fn pullback_adams_matrix(group: GroupSpec, l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let table = reduction_table(group)?;
    let n = group.n();
    let image = |k: u32| pulled_back_wedge_image(&table, l, k);

    let columns: Vec<KVector> = group
        .basis()
        .iter()
        .map(|b| match b.kind {
            BasisKind::Wedge(k) => image(k),
            BasisKind::SpinS => {
                // d(S) = 2^-(n+1) sum_{p=1}^{n} d(L^p)
                let mut acc = KVector::zero(group);
                for k in 1..=n {
                    acc = acc.plus(&image(k));
                }
                acc.scaled(&Rational::new(One::one(), pow_i64(2, n + 1)))
            }
            BasisKind::SpinPlus | BasisKind::SpinMinus => {
                half_spin_image(group, l, &image, b.kind == BasisKind::SpinPlus)
            }
            BasisKind::G2Rho1 => image(1),
            // rho2 = L^2 rho1 - rho1
            BasisKind::G2Rho2 => image(2).minus(&image(1)),
        })
        .collect();

    let m = AdamsMatrix::from_columns(group, l, &columns);
    m.ensure_integral()?;
    Ok(m)
}

/// `psi^l d(S+-) = 1/2 psi^l(d(S+) + d(S-)) +- 1/2 l^n (d(S+) - d(S-))`, with
/// `d(S+) + d(S-) = 2^-(n-1) sum_{p>=0} d(L^(n-2p-1))` and the difference
/// an eigenvector for `l^n`.
fn half_spin_image(
    group: GroupSpec,
    l: u32,
    image: &impl Fn(u32) -> KVector,
    plus: bool,
) -> KVector {
    debug_assert_eq!(group.family(), Family::SpinEven);
    let n = group.n();
    let mut sum = KVector::zero(group);
    let mut j = n as i64 - 1;
    while j >= 1 {
        sum = sum.plus(&image(j as u32));
        j -= 2;
    }
    let sum = sum.scaled(&Rational::new(One::one(), pow_i64(2, n - 1)));
    let diff = KVector::unit_of(group, BasisKind::SpinPlus)
        .minus(&KVector::unit_of(group, BasisKind::SpinMinus))
        .scaled(&Rational::from_integer(pow_i64(l as i64, n)));
    let half = frac(1, 2);
    let sign = if plus { rat(1) } else { rat(-1) };
    let mut out = sum.scaled(&half);
    out.add_scaled(&diff, &(half * sign));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ktheory::closed::g2_wedge2_closed_form;

    fn g(family: Family, n: u32) -> GroupSpec {
        GroupSpec::new(family, n).unwrap()
    }

    fn cols(m: &AdamsMatrix) -> Vec<Vec<i64>> {
        let ints = m.integer_entries().unwrap();
        (0..m.dim())
            .map(|k| ints.iter().map(|row| i64::try_from(&row[k]).unwrap()).collect())
            .collect()
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(
            cols(&pullback_adams_matrix(g(Family::Sp, 2), 2).unwrap()),
            [[8, -2], [-16, 12]]
        );
        assert_eq!(
            cols(&pullback_adams_matrix(g(Family::SpinOdd, 2), 2).unwrap()),
            [[12, -16], [-2, 8]]
        );
        assert_eq!(
            cols(&pullback_adams_matrix(GroupSpec::g2(), 2).unwrap()),
            [[12, -2], [-208, 56]]
        );
        assert_eq!(
            cols(&pullback_adams_matrix(g(Family::SpinEven, 3), 2).unwrap()),
            [[12, -8, -8], [-2, 8, 0], [-2, 0, 8]]
        );
    }

    #[test]
    fn g2_second_exterior_power() {
        let table = reduction_table(GroupSpec::g2()).unwrap();
        for l in 1..=8 {
            let img = pulled_back_wedge_image(&table, l, 2);
            assert_eq!(img.coords(), &g2_wedge2_closed_form(l), "l={l}");
        }
    }

    #[test]
    fn unitary_groups_rejected() {
        assert_eq!(
            pullback_adams_matrix(g(Family::U, 3), 2),
            Err(Error::NoReduction(Family::U))
        );
    }
}
