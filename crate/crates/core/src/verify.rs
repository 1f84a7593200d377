//! Invariant sweeps shared by the command-line `verify` command and the
//! acceptance suite.
//!
//! Each property walks its parameter tuples in a fixed order and stops at the
//! first counterexample. Properties are independent and run on separate
//! threads; results are always reported in declaration order.

use std::fmt;
use std::str::FromStr;
use std::thread;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counts::{mu, mu_closed, mu_enumerate, MuArgs};
use crate::eigen::{eigenbasis_determinant, pj_polynomials, spectrum_check, verify_eigen_relation};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, pow_i64, t_over_sinh_pow, Rational};
use crate::ktheory::{
    adams_matrix, closed_form_matrix, g2_adams_matrix, g2_closed_form_matrix,
    pullback_adams_matrix, reduction_table, AdamsMatrix, BasisKind, Family, GroupSpec, KVector,
};
use crate::symoracle::{adams_symbolic_coefficients, verify_product_identity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Matrices,
    Eigen,
    Oracle,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Counts => "counts",
            Suite::Matrices => "matrices",
            Suite::Eigen => "eigen",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "counts" => Ok(Suite::Counts),
            "matrices" => Ok(Suite::Matrices),
            "eigen" => Ok(Suite::Eigen),
            "oracle" => Ok(Suite::Oracle),
            _ => Err(format!("unknown suite '{s}'")),
        }
    }
}

/// Outcome of one property sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub suite: Suite,
    pub name: &'static str,
    /// Number of tuples checked, including the failing one.
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {}/{} ({} cases)", self.suite, self.name, self.checked),
            Some(c) => write!(f, "FAIL {}/{}: {}", self.suite, self.name, c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }
}

/// Counter plus first failure. `check` returns `Err(description)` on a
/// counterexample.
#[derive(Default)]
pub struct Sweep {
    checked: u64,
    failure: Option<String>,
}

impl Sweep {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one case. Returns `false` once a failure has been seen, so
    /// loops can stop early.
    pub fn case(&mut self, check: impl FnOnce() -> std::result::Result<(), String>) -> bool {
        if self.failure.is_some() {
            return false;
        }
        self.checked += 1;
        if let Err(e) = check() {
            self.failure = Some(e);
            return false;
        }
        true
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn finish(self) -> (u64, Option<String>) {
        (self.checked, self.failure)
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// `(a == b)` or a message built from `what`.
fn expect_eq<T: PartialEq + fmt::Debug>(a: &T, b: &T, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: {:?} != {:?}", what(), a, b))
    }
}

// ---------- counts ----------

pub fn check_mu_oracle(max_n: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for l in 1..=max_l {
            for k in 0..=n {
                for p in 0..=(l * n) as i64 {
                    let ok = s.case(|| {
                        let a = MuArgs::new(n as i64, l as i64, k as i64, p).map_err(err_str)?;
                        expect_eq(&mu_closed(a), &mu_enumerate(a), || {
                            format!("mu_closed vs enumeration at (n,l,k,p)=({n},{l},{k},{p})")
                        })
                    });
                    if !ok {
                        break 'outer;
                    }
                }
            }
        }
    }
    s.finish()
}

pub fn check_mu_duality(max_n: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for l in 1..=max_l {
            for k in 0..=n {
                for p in 0..=(l * n) as i64 {
                    let ok = s.case(|| {
                        expect_eq(&mu(n, l, k, p), &mu(n, l, n - k, n as i64 - p), || {
                            format!("duality at (n,l,k,p)=({n},{l},{k},{p})")
                        })
                    });
                    if !ok {
                        break 'outer;
                    }
                }
            }
        }
    }
    s.finish()
}

/// `sum_p mu(n,l,k,p) mu(n,m,p,q) = mu(n,ml,k,q)` for `1 <= k, q <= n`.
pub fn check_mu_multiplicativity(max_n: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for l in 1..=max_l {
            for m in 1..=max_l {
                for k in 1..=n {
                    for q in 1..=n as i64 {
                        let ok = s.case(|| {
                            let lhs: BigInt = (1..=n)
                                .map(|p| mu(n, l, k, p as i64) * mu(n, m, p, q))
                                .sum();
                            expect_eq(&lhs, &mu(n, m * l, k, q), || {
                                format!("multiplicativity at (n,l,m,k,q)=({n},{l},{m},{k},{q})")
                            })
                        });
                        if !ok {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    s.finish()
}

/// `mu(n,2,k,p) = C(n, 2k-p)` over `0 <= k <= n`, `0 <= p <= 2n`.
pub fn check_mu_psi2(max_n: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for k in 0..=n {
            for p in 0..=2 * n as i64 {
                let ok = s.case(|| {
                    let c = binomial(n as i64, 2 * k as i64 - p).map_err(err_str)?;
                    expect_eq(&mu(n, 2, k, p), &c, || format!("psi^2 at (n,k,p)=({n},{k},{p})"))
                });
                if !ok {
                    break 'outer;
                }
            }
        }
    }
    s.finish()
}

// ---------- matrices ----------

/// Groups with a pullback computation: `Sp(n)`, `Spin(2n+1)` for
/// `n <= max_rank`, `Spin(2n)` for `3 <= n <= max_rank`, and `G2`.
pub fn pullback_groups(max_rank: u32) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for family in [Family::Sp, Family::SpinOdd, Family::SpinEven] {
        for n in family.min_rank()..=max_rank {
            out.push(GroupSpec::new(family, n).expect("rank in range"));
        }
    }
    out.push(GroupSpec::g2());
    out
}

/// Every family at ranks up to `max_rank`, `G2` once.
pub fn all_groups(max_rank: u32) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for family in [Family::U, Family::SU] {
        for n in family.min_rank()..=max_rank {
            out.push(GroupSpec::new(family, n).expect("rank in range"));
        }
    }
    out.extend(pullback_groups(max_rank));
    out
}

pub fn check_closed_equals_pipeline(max_rank: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for g in pullback_groups(max_rank) {
        for l in 1..=max_l {
            let ok = s.case(|| {
                let closed = closed_form_matrix(g, l).map_err(err_str)?;
                let pulled = pullback_adams_matrix(g, l).map_err(err_str)?;
                if closed == pulled {
                    Ok(())
                } else {
                    Err(format!("{g}, l={l}: closed form\n{closed}\npipeline\n{pulled}"))
                }
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

/// `M(m) M(l) = M(ml)` for `l, m <= max_l`, and `M(1) = I`.
pub fn check_composition(max_rank: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for g in all_groups(max_rank) {
        let ok = s.case(|| {
            expect_eq(&adams_matrix(g, 1).map_err(err_str)?, &AdamsMatrix::identity(g), || {
                format!("{g}: M(1) is not the identity")
            })
        });
        if !ok {
            break;
        }
        let mats: Vec<AdamsMatrix> = match (1..=max_l * max_l).map(|l| adams_matrix(g, l)).collect() {
            Ok(m) => m,
            Err(e) => {
                s.case(|| Err(format!("{g}: {e}")));
                break;
            }
        };
        for l in 1..=max_l {
            for m in 1..=max_l {
                let ok = s.case(|| {
                    let lhs = mats[(m - 1) as usize].compose(&mats[(l - 1) as usize]);
                    expect_eq(&lhs, &mats[(m * l - 1) as usize], || {
                        format!("{g}: M({m}) M({l}) != M({})", m * l)
                    })
                });
                if !ok {
                    break 'outer;
                }
            }
        }
    }
    s.finish()
}

pub fn check_integrality(max_rank: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for g in all_groups(max_rank) {
        for l in 1..=max_l * max_l {
            let ok = s.case(|| {
                let closed = closed_form_matrix(g, l).map_err(err_str)?;
                closed.ensure_integral().map_err(err_str)?;
                if !matches!(g.family(), Family::U | Family::SU) {
                    pullback_adams_matrix(g, l)
                        .map_err(err_str)?
                        .ensure_integral()
                        .map_err(err_str)?;
                }
                Ok(())
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

/// Characteristic polynomial against `prod (x - l^(m_i + 1))` for
/// `l in ls`.
pub fn check_spectrum(max_rank: u32, ls: &[u32]) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for g in all_groups(max_rank) {
        for &l in ls {
            let ok = s.case(|| {
                let r = spectrum_check(g, l).map_err(err_str)?;
                expect_eq(&r.char_poly, &r.expected_char_poly, || {
                    format!("{g}, l={l}: characteristic polynomial")
                })
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

/// The printed `G2` polynomials agree with the pullback computation at
/// `l = 1..=max_l`.
pub fn check_g2_closed_form(max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    for l in 1..=max_l {
        let ok = s.case(|| {
            expect_eq(&g2_adams_matrix(l).map_err(err_str)?, &g2_closed_form_matrix(l).map_err(err_str)?, || {
                format!("G2, l={l}")
            })
        });
        if !ok {
            break;
        }
    }
    s.finish()
}

/// `psi^l (d(S+) - d(S-)) = l^n (d(S+) - d(S-))` on `Spin(2n)`.
pub fn check_half_spin_difference(max_rank: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 3..=max_rank {
        let g = GroupSpec::new(Family::SpinEven, n).expect("rank in range");
        let diff = KVector::unit_of(g, BasisKind::SpinPlus).minus(&KVector::unit_of(g, BasisKind::SpinMinus));
        for l in 1..=max_l {
            let ok = s.case(|| {
                let m = adams_matrix(g, l).map_err(err_str)?;
                let scale = Rational::from_integer(pow_i64(l as i64, n));
                expect_eq(&m.apply(&diff), &diff.scaled(&scale), || format!("{g}, l={l}"))
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

/// `d` of `L^2 S+ = L^2 S- = sum_{i >= 0} L^(n-4i-2) s_2n` on `Spin(2n)`,
/// in the primitive basis.
pub fn half_spin_exterior_square(n: u32) -> Result<KVector> {
    let g = GroupSpec::new(Family::SpinEven, n)?;
    let table = reduction_table(g)?;
    let mut out = KVector::zero(g);
    let mut j = n as i64 - 2;
    while j >= 0 {
        out = out.plus(table.row(j as u32));
        j -= 4;
    }
    Ok(out)
}

/// `psi^2 d(S+-) = 2^n d(S+-) - 2 d(L^2 S+-)` on `Spin(2n)`.
pub fn check_half_spin_square(min_rank: u32, max_rank: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in min_rank.max(3)..=max_rank {
        for kind in [BasisKind::SpinPlus, BasisKind::SpinMinus] {
            let ok = s.case(|| {
                let g = GroupSpec::new(Family::SpinEven, n).map_err(err_str)?;
                let m = adams_matrix(g, 2).map_err(err_str)?;
                let spin = KVector::unit_of(g, kind);
                let wedge2 = half_spin_exterior_square(n).map_err(err_str)?;
                let expected = spin
                    .scaled(&Rational::from_integer(pow_i64(2, n)))
                    .minus(&wedge2.scaled(&Rational::from_integer(BigInt::from(2))));
                expect_eq(&m.apply(&spin), &expected, || format!("{g}, {kind:?}"))
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

// ---------- eigen ----------

pub fn check_eigen_relation(max_n: u32, ls: &[u32]) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for &l in ls {
            let ok = s.case(|| {
                let r = verify_eigen_relation(n, l).map_err(err_str)?;
                match r.levels.iter().find(|c| !c.passed) {
                    None => Ok(()),
                    Some(c) => Err(format!("U({n}), l={l}: level k={} (eigenvalue {})", c.k, c.eigenvalue)),
                }
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

pub fn check_eigen_independence(max_n: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    for n in 1..=max_n {
        let ok = s.case(|| {
            let d = eigenbasis_determinant(n).map_err(err_str)?;
            if d.is_zero() {
                Err(format!("U({n}): eigenvectors are linearly dependent"))
            } else {
                Ok(())
            }
        });
        if !ok {
            break;
        }
    }
    s.finish()
}

/// `p_j(y)` equals the `t^(2j)` coefficient of `(t / sinh t)^y` for
/// `0 <= y <= max_y`, and has degree `j`.
pub fn check_pj(max_j: u32, max_y: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    let polys = pj_polynomials(max_j);
    for p in &polys {
        let ok = s.case(|| {
            expect_eq(&p.poly.degree(), &Some(p.j as usize), || format!("degree of p_{}", p.j))
        });
        if !ok {
            return s.finish();
        }
    }
    let order = 2 * max_j as usize + 1;
    'outer: for y in 0..=max_y {
        let series = t_over_sinh_pow(y, order);
        for p in &polys {
            let ok = s.case(|| {
                let value = p.poly.eval(&Rational::from_integer(BigInt::from(y)));
                expect_eq(&value, &series.coeff(2 * p.j as usize), || format!("p_{}({y})", p.j))
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

// ---------- oracle ----------

/// Torus-weight coefficients evaluated at `lambda = 1` reproduce `mu`.
pub fn check_symbolic_counts(max_n: u32, max_l: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for l in 1..=max_l {
            for k in 1..=n {
                let ok = s.case(|| {
                    let coeffs = adams_symbolic_coefficients(n as usize, l, k as usize).map_err(err_str)?;
                    let at_one: Vec<BigInt> = coeffs.iter().map(|c| c.eval_at_ones()).collect();
                    let counts: Vec<BigInt> = (1..=n).map(|p| mu(n, l, k, p as i64)).collect();
                    expect_eq(&at_one, &counts, || format!("(n,l,k)=({n},{l},{k})"))
                });
                if !ok {
                    break 'outer;
                }
            }
        }
    }
    s.finish()
}

pub fn check_product_identity(max_n: u32, max_l: u32, max_degree: u32) -> (u64, Option<String>) {
    let mut s = Sweep::new();
    'outer: for n in 1..=max_n {
        for l in 1..=max_l {
            let ok = s.case(|| {
                let r = verify_product_identity(n as usize, l, max_degree).map_err(err_str)?;
                if let Some(d) = r.product_mismatches.first() {
                    return Err(format!("(n,l)=({n},{l}): product identity differs in degree {d}"));
                }
                if let Some((k, p)) = r.coefficient_mismatches.first() {
                    return Err(format!("(n,l)=({n},{l}): coefficient identity fails at (k,p)=({k},{p})"));
                }
                Ok(())
            });
            if !ok {
                break 'outer;
            }
        }
    }
    s.finish()
}

// ---------- driver ----------

type Job = Box<dyn FnOnce() -> (u64, Option<String>) + Send>;

fn jobs(suite: Suite, max_rank: u32, max_l: u32) -> Vec<(Suite, &'static str, Job)> {
    let r = max_rank;
    let ml = max_l;
    let spectral_ls: Vec<u32> = (2..=ml.max(2)).collect();
    let mut out: Vec<(Suite, &'static str, Job)> = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Counts) {
        out.push((Suite::Counts, "mu-oracle", Box::new(move || check_mu_oracle(r, ml))));
        out.push((Suite::Counts, "mu-duality", Box::new(move || check_mu_duality(r, ml))));
        out.push((Suite::Counts, "mu-multiplicativity", Box::new(move || check_mu_multiplicativity(r, ml))));
        out.push((Suite::Counts, "mu-psi2", Box::new(move || check_mu_psi2(r))));
    }
    if want(Suite::Matrices) {
        let ls = spectral_ls.clone();
        out.push((Suite::Matrices, "closed-equals-pipeline", Box::new(move || check_closed_equals_pipeline(r, ml))));
        out.push((Suite::Matrices, "composition", Box::new(move || check_composition(r, ml))));
        out.push((Suite::Matrices, "integrality", Box::new(move || check_integrality(r, ml))));
        out.push((Suite::Matrices, "spectrum", Box::new(move || check_spectrum(r, &ls))));
        out.push((Suite::Matrices, "g2-closed-form", Box::new(move || check_g2_closed_form(ml.max(10)))));
        out.push((Suite::Matrices, "half-spin-difference", Box::new(move || check_half_spin_difference(r, ml))));
        out.push((Suite::Matrices, "half-spin-square", Box::new(move || check_half_spin_square(3, r))));
    }
    if want(Suite::Eigen) {
        let ls = spectral_ls;
        out.push((Suite::Eigen, "eigen-relation", Box::new(move || check_eigen_relation(r, &ls))));
        out.push((Suite::Eigen, "eigen-independence", Box::new(move || check_eigen_independence(r))));
        out.push((Suite::Eigen, "pj-series", Box::new(|| check_pj(10, 10))));
    }
    if want(Suite::Oracle) {
        out.push((Suite::Oracle, "symbolic-counts", Box::new(move || check_symbolic_counts(r, ml))));
        out.push((Suite::Oracle, "product-identity", Box::new(move || check_product_identity(r, ml, 12))));
    }
    out
}

/// Runs the selected suite. Each property runs on its own thread; the
/// report lists them in a fixed order regardless of completion order.
pub fn run_suite(suite: Suite, max_rank: u32, max_l: u32) -> VerifyReport {
    let jobs = jobs(suite, max_rank, max_l);
    let outcomes = thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(suite, name, job)| (suite, name, scope.spawn(job)))
            .collect();
        handles
            .into_iter()
            .map(|(suite, name, h)| {
                let (checked, counterexample) = h
                    .join()
                    .unwrap_or_else(|_| (0, Some("check panicked".to_string())));
                PropertyOutcome {
                    suite,
                    name,
                    checked,
                    counterexample,
                }
            })
            .collect()
    });
    VerifyReport { outcomes }
}
