use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    U,
    SU,
    Sp,
    /// `Spin(2n+1)`.
    SpinOdd,
    /// `Spin(2n)`.
    SpinEven,
    G2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::U,
        Family::SU,
        Family::Sp,
        Family::SpinOdd,
        Family::SpinEven,
        Family::G2,
    ];

    pub fn min_rank(self) -> u32 {
        match self {
            Family::SU => 2,
            Family::SpinEven => 3,
            _ => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::U => "U",
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::SpinOdd => "SpinOdd",
            Family::SpinEven => "SpinEven",
            Family::G2 => "G2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group family `{s}`"))
    }
}

/// A group together with its rank parameter.
///
/// `n` means: `U(n)`, `SU(n)`, `Sp(n)`, `Spin(2n+1)`, `Spin(2n)`. For `G2`
/// the parameter is ignored and stored as 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    n: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if family == Family::G2 {
            return Ok(Self::g2());
        }
        if n < family.min_rank() {
            return Err(Error::UnsupportedRank { family, rank: n });
        }
        Ok(Self { family, n })
    }

    pub fn g2() -> Self {
        Self {
            family: Family::G2,
            n: 2,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension of the representation whose exterior powers give the
    /// wedge generators.
    pub fn defining_dim(&self) -> u32 {
        match self.family {
            Family::U | Family::SU => self.n,
            Family::Sp | Family::SpinEven => 2 * self.n,
            Family::SpinOdd => 2 * self.n + 1,
            Family::G2 => 7,
        }
    }

    pub fn basis(&self) -> Vec<BasisElement> {
        let m = self.defining_dim();
        let wedges = |top: u32| (1..=top).map(move |k| BasisElement::wedge(k, m));
        match self.family {
            Family::U | Family::Sp => wedges(self.n).collect(),
            Family::SU => wedges(self.n - 1).collect(),
            Family::SpinOdd => wedges(self.n - 1)
                .chain([BasisElement::new(BasisKind::SpinS)])
                .collect(),
            Family::SpinEven => wedges(self.n - 2)
                .chain([
                    BasisElement::new(BasisKind::SpinPlus),
                    BasisElement::new(BasisKind::SpinMinus),
                ])
                .collect(),
            Family::G2 => vec![
                BasisElement::new(BasisKind::G2Rho1),
                BasisElement::new(BasisKind::G2Rho2),
            ],
        }
    }

    pub fn basis_size(&self) -> usize {
        match self.family {
            Family::U | Family::Sp | Family::SpinOdd | Family::SpinEven => self.n as usize,
            Family::SU => self.n as usize - 1,
            Family::G2 => 2,
        }
    }

    /// Position of a basis element, if it belongs to this group's basis.
    pub fn index_of(&self, kind: BasisKind) -> Option<usize> {
        self.basis().iter().position(|b| b.kind == kind)
    }

    /// Exponents `m_i`; `psi^l` has eigenvalues `l^(m_i + 1)`.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.n;
        match self.family {
            Family::U => (0..n).collect(),
            Family::SU => (1..n).collect(),
            Family::Sp | Family::SpinOdd => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::SpinEven => (1..n).map(|i| 2 * i - 1).chain([n - 1]).collect(),
            Family::G2 => vec![1, 5],
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::U => write!(f, "U({})", self.n),
            Family::SU => write!(f, "SU({})", self.n),
            Family::Sp => write!(f, "Sp({})", self.n),
            Family::SpinOdd => write!(f, "Spin({})", 2 * self.n + 1),
            Family::SpinEven => write!(f, "Spin({})", 2 * self.n),
            Family::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `d(L^k s)`, the class of the k-th exterior power of the defining
    /// representation.
    Wedge(u32),
    SpinS,
    SpinPlus,
    SpinMinus,
    G2Rho1,
    G2Rho2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub label: String,
}

impl BasisElement {
    fn new(kind: BasisKind) -> Self {
        let label = match kind {
            BasisKind::SpinS => "d(S)",
            BasisKind::SpinPlus => "d(S+)",
            BasisKind::SpinMinus => "d(S-)",
            BasisKind::G2Rho1 => "d(rho1)",
            BasisKind::G2Rho2 => "d(rho2)",
            BasisKind::Wedge(_) => unreachable!("wedge labels need the dimension"),
        };
        Self {
            kind,
            label: label.to_string(),
        }
    }

    fn wedge(k: u32, dim: u32) -> Self {
        Self {
            kind: BasisKind::Wedge(k),
            label: format!("d(L^{k} s_{dim})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: GroupSpec) -> Vec<String> {
        g.basis().into_iter().map(|b| b.label).collect()
    }

    #[test]
    fn basis_orders() {
        let g = GroupSpec::new(Family::SpinOdd, 3).unwrap();
        assert_eq!(labels(g), ["d(L^1 s_7)", "d(L^2 s_7)", "d(S)"]);
        let g = GroupSpec::new(Family::SpinEven, 4).unwrap();
        assert_eq!(labels(g), ["d(L^1 s_8)", "d(L^2 s_8)", "d(S+)", "d(S-)"]);
        let g = GroupSpec::new(Family::SU, 3).unwrap();
        assert_eq!(labels(g), ["d(L^1 s_3)", "d(L^2 s_3)"]);
        assert_eq!(labels(GroupSpec::g2()), ["d(rho1)", "d(rho2)"]);
        let g = GroupSpec::new(Family::SpinOdd, 1).unwrap();
        assert_eq!(labels(g), ["d(S)"]);
    }

    #[test]
    fn basis_size_matches_basis() {
        for family in Family::ALL {
            for n in family.min_rank()..=7 {
                let g = GroupSpec::new(family, n).unwrap();
                assert_eq!(g.basis().len(), g.basis_size(), "{g}");
                assert_eq!(g.exponents().len(), g.basis_size(), "{g}");
            }
        }
    }

    #[test]
    fn rank_limits() {
        assert!(GroupSpec::new(Family::SU, 1).is_err());
        assert!(GroupSpec::new(Family::SpinEven, 2).is_err());
        assert!(GroupSpec::new(Family::U, 0).is_err());
        assert_eq!(GroupSpec::new(Family::G2, 0).unwrap(), GroupSpec::g2());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(GroupSpec::new(Family::SpinOdd, 2).unwrap().to_string(), "Spin(5)");
        assert_eq!(GroupSpec::new(Family::SpinEven, 3).unwrap().to_string(), "Spin(6)");
        assert_eq!("spineven".parse::<Family>().unwrap(), Family::SpinEven);
        assert!("E8".parse::<Family>().is_err());
    }
}
