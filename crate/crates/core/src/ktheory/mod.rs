//! Adams operations on the primitive K-theory of each supported group.

mod closed;
mod group;
mod matrix;
mod pipeline;
mod reduction;
mod unitary;

pub use closed::{
    g2_closed_form_matrix, g2_wedge2_closed_form, spin_even_adams_matrix, spin_odd_adams_matrix,
    symplectic_adams_matrix,
};
pub use group::{BasisElement, BasisKind, Family, GroupSpec};
pub use matrix::{AdamsMatrix, KVector};
pub use pipeline::{pullback_adams_matrix, pulled_back_wedge_image};
pub use reduction::{reduction_table, ReductionTable};
pub use unitary::{special_unitary_adams_matrix, unitary_adams_matrix, unitary_wedge_coefficients};

use crate::error::{Error, Result};

/// `psi^l` for `G2`: the pullback computation, checked against the
/// polynomial closed form.
pub fn g2_adams_matrix(l: u32) -> Result<AdamsMatrix> {
    let m = pullback_adams_matrix(GroupSpec::g2(), l)?;
    if m != g2_closed_form_matrix(l)? {
        return Err(Error::PipelineMismatch {
            group: GroupSpec::g2(),
            l,
        });
    }
    Ok(m)
}

/// The closed-form matrix for any supported group.
pub fn closed_form_matrix(group: GroupSpec, l: u32) -> Result<AdamsMatrix> {
    let n = group.n();
    match group.family() {
        Family::U => unitary_adams_matrix(n, l),
        Family::SU => special_unitary_adams_matrix(n, l),
        Family::Sp => symplectic_adams_matrix(n, l),
        Family::SpinOdd => spin_odd_adams_matrix(n, l),
        Family::SpinEven => spin_even_adams_matrix(n, l),
        Family::G2 => g2_closed_form_matrix(l),
    }
}

/// Closed-form matrix, cross-checked against the pullback computation for
/// every family that has one.
pub fn adams_matrix(group: GroupSpec, l: u32) -> Result<AdamsMatrix> {
    let closed = closed_form_matrix(group, l)?;
    if matches!(group.family(), Family::U | Family::SU) {
        return Ok(closed);
    }
    if closed != pullback_adams_matrix(group, l)? {
        return Err(Error::PipelineMismatch { group, l });
    }
    Ok(closed)
}
