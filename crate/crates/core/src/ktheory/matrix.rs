use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{BasisKind, GroupSpec};
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, Rational};

/// Rational combination of a group's primitive generators, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector {
    group: GroupSpec,
    coords: Vec<Rational>,
}

impl KVector {
    pub fn zero(group: GroupSpec) -> Self {
        Self {
            group,
            coords: vec![Rational::zero(); group.basis_size()],
        }
    }

    pub fn unit(group: GroupSpec, index: usize) -> Self {
        let mut v = Self::zero(group);
        v.coords[index] = Rational::one();
        v
    }

    /// Unit vector of a basis element; panics if the element is not in the
    /// group's basis.
    pub fn unit_of(group: GroupSpec, kind: BasisKind) -> Self {
        let idx = group
            .index_of(kind)
            .unwrap_or_else(|| panic!("{kind:?} is not a basis element of {group}"));
        Self::unit(group, idx)
    }

    pub fn from_coords(group: GroupSpec, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), group.basis_size(), "wrong length for {group}");
        Self { group, coords }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &KVector, c: &Rational) {
        assert_eq!(self.group, other.group);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b * c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> KVector {
        Self {
            group: self.group,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn plus(&self, other: &KVector) -> KVector {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &KVector) -> KVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }
}

/// Matrix of `psi^l` on a group's primitive basis.
///
/// `entries[p][k]` is the coefficient of basis element `p` in the image of
/// basis element `k`: columns are images, and composition is the ordinary
/// product `M(m) * M(l) = M(ml)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdamsMatrix {
    group: GroupSpec,
    l: u32,
    entries: Vec<Vec<Rational>>,
}

impl AdamsMatrix {
    pub fn new(group: GroupSpec, l: u32, entries: Vec<Vec<Rational>>) -> Self {
        let d = group.basis_size();
        assert!(
            entries.len() == d && entries.iter().all(|r| r.len() == d),
            "matrix for {group} must be {d}x{d}"
        );
        Self { group, l, entries }
    }

    pub fn from_columns(group: GroupSpec, l: u32, columns: &[KVector]) -> Self {
        let d = group.basis_size();
        assert_eq!(columns.len(), d);
        let entries = (0..d)
            .map(|p| columns.iter().map(|c| c.coords[p].clone()).collect())
            .collect();
        Self::new(group, l, entries)
    }

    pub fn identity(group: GroupSpec) -> Self {
        let d = group.basis_size();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self::new(group, 1, entries)
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn column(&self, k: usize) -> KVector {
        KVector::from_coords(self.group, self.entries.iter().map(|r| r[k].clone()).collect())
    }

    pub fn apply(&self, v: &KVector) -> KVector {
        assert_eq!(self.group, v.group);
        let coords = self
            .entries
            .iter()
            .map(|row| row.iter().zip(&v.coords).map(|(a, b)| a * b).sum())
            .collect();
        KVector::from_coords(self.group, coords)
    }

    /// `self * rhs`, i.e. `psi^(self.l) after psi^(rhs.l)`.
    pub fn compose(&self, rhs: &AdamsMatrix) -> AdamsMatrix {
        assert_eq!(self.group, rhs.group);
        let d = self.dim();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|t| &self.entries[i][t] * &rhs.entries[t][j]).sum())
                    .collect()
            })
            .collect();
        AdamsMatrix::new(self.group, self.l * rhs.l, entries)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(Rational::is_integer)
    }

    /// Fails with the first non-integral position.
    pub fn ensure_integral(&self) -> Result<()> {
        for (row, r) in self.entries.iter().enumerate() {
            for (col, x) in r.iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NonIntegral {
                        group: self.group,
                        l: self.l,
                        row,
                        col,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn integer_entries(&self) -> Result<Vec<Vec<BigInt>>> {
        self.ensure_integral()?;
        Ok(self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_integer()).collect())
            .collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim()).map(|i| self.entries[i][i].clone()).sum()
    }
}

impl fmt::Display for AdamsMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
