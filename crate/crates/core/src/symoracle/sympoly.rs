use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Polynomial with integer coefficients in `lambda_1 .. lambda_n`.
///
/// Keys are exponent tuples of length `n`; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// `lambda_i` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SymPoly, c: &BigInt) {
        assert_eq!(self.n, other.n);
        if c.is_zero() {
            return;
        }
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one());
        out
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        out.add_assign_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product keeping only monomials of total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &SymPoly, max_degree: u32) -> SymPoly {
        assert_eq!(self.n, other.n);
        let mut out = SymPoly::zero(self.n);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            if da > max_degree {
                continue;
            }
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da.saturating_add(db) > max_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `lambda_i -> lambda_i^l` for every variable.
    pub fn substitute_power(&self, l: u32) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * l).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max_degree: u32) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Value at `lambda_1 = .. = lambda_n = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> SymPoly {
        assert_eq!(perm.len(), self.n);
        let mut out = SymPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.n];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*l{}", i + 1)?,
                    _ => write!(f, "*l{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
