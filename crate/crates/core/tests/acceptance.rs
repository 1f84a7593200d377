//! Acceptance criteria, one line each. Every comparison is exact.
//!
//! Run with `cargo test -p adams-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use adams_core::counts::mu;
use adams_core::eigen::spectrum_check;
use adams_core::exactmath::char_poly;
use adams_core::ktheory::g2_adams_matrix;
use adams_core::verify::{
    check_closed_equals_pipeline, check_composition, check_eigen_independence,
    check_eigen_relation, check_g2_closed_form, check_half_spin_difference,
    check_half_spin_square, check_integrality, check_mu_duality, check_mu_multiplicativity,
    check_mu_oracle, check_pj, check_product_identity, check_spectrum, check_symbolic_counts,
};
use adams_core::{Family, GroupSpec, Rational};
use num_bigint::BigInt;

type Outcome = Result<u64, String>;

fn merge(parts: &[(u64, Option<String>)]) -> Outcome {
    let mut total = 0;
    for (n, fail) in parts {
        total += n;
        if let Some(f) = fail {
            return Err(f.clone());
        }
    }
    Ok(total)
}

/// Number of tuples in [0, l-1]^n summing to `s`, by listing them.
fn listed_count(n: u32, l: u32, s: i64) -> u64 {
    fn go(left_parts: u32, l: u32, s: i64) -> u64 {
        if left_parts == 0 {
            return (s == 0) as u64;
        }
        (0..l as i64).filter(|&x| x <= s).map(|x| go(left_parts - 1, l, s - x)).sum()
    }
    if s < 0 {
        0
    } else {
        go(n, l, s)
    }
}

fn criterion_1() -> Outcome {
    let mut listed = 0;
    for n in 1..=6u32 {
        for l in 1..=4u32 {
            for k in 0..=n {
                for p in 0..=(l * n) as i64 {
                    listed += 1;
                    let want = BigInt::from(listed_count(n, l, (l * k) as i64 - p));
                    if mu(n, l, k, p) != want {
                        return Err(format!("listing disagrees at (n,l,k,p)=({n},{l},{k},{p})"));
                    }
                }
            }
        }
    }
    merge(&[check_mu_oracle(8, 6), (listed, None)])
}

fn criterion_4() -> Outcome {
    // Pascal's triangle, built here.
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for a in 1..=10usize {
        let prev = &rows[a - 1];
        let row = (0..=a)
            .map(|b| if b == 0 || b == a { 1 } else { prev[b - 1] + prev[b] })
            .collect();
        rows.push(row);
    }
    let choose = |a: u32, b: i64| -> u64 {
        if b < 0 || b > a as i64 {
            0
        } else {
            rows[a as usize][b as usize]
        }
    };
    let mut count = 0;
    for n in 1..=10u32 {
        for k in 0..=n {
            for p in 0..=2 * n as i64 {
                count += 1;
                if mu(n, 2, k, p) != BigInt::from(choose(n, 2 * k as i64 - p)) {
                    return Err(format!("(n,k,p)=({n},{k},{p})"));
                }
            }
        }
    }
    Ok(count)
}

/// `prod (x - r)` with ascending coefficients.
fn poly_with_roots(roots: &[i64]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    for &r in roots {
        let mut next = vec![BigInt::from(0); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        out = next;
    }
    out
}

fn criterion_8() -> Outcome {
    let g = |f, n| GroupSpec::new(f, n).unwrap();
    let concrete: [(GroupSpec, &[i64]); 5] = [
        (g(Family::U, 3), &[2, 4, 8]),
        (g(Family::Sp, 2), &[4, 16]),
        (g(Family::SpinOdd, 2), &[4, 16]),
        (g(Family::SpinEven, 3), &[4, 8, 16]),
        (GroupSpec::g2(), &[4, 64]),
    ];
    for (group, roots) in concrete {
        let r = spectrum_check(group, 2).map_err(|e| e.to_string())?;
        if r.char_poly != poly_with_roots(roots) {
            return Err(format!("{group}, l=2: spectrum is not {roots:?}"));
        }
    }
    merge(&[check_spectrum(6, &[2, 3, 5]), (concrete.len() as u64, None)])
}

fn criterion_11() -> Outcome {
    for l in 1..=10i64 {
        let l2 = l * l;
        let l6 = l2 * l2 * l2;
        // Columns psi^l d(rho1), psi^l d(rho2), each as (rho1, rho2) coefficients.
        let printed = [
            [
                Rational::new((2 * l6 + 13 * l2).into(), 15.into()),
                Rational::new((l2 - l6).into(), 30.into()),
            ],
            [
                Rational::new((52 * l2 * (1 - l2 * l2)).into(), 15.into()),
                Rational::new((l2 * (13 * l2 * l2 + 2)).into(), 15.into()),
            ],
        ];
        let m = g2_adams_matrix(l as u32).map_err(|e| e.to_string())?;
        for (k, col) in printed.iter().enumerate() {
            for (p, want) in col.iter().enumerate() {
                if m.entry(p, k) != want {
                    return Err(format!("l={l}: entry ({p},{k}) is {} not {want}", m.entry(p, k)));
                }
            }
        }
        let cp = char_poly(&m.integer_entries().map_err(|e| e.to_string())?);
        if cp != poly_with_roots(&[l2, l6]) {
            return Err(format!("l={l}: eigenvalues are not l^2, l^6"));
        }
    }
    merge(&[check_g2_closed_form(10), (10, None)])
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "mu closed form equals enumeration (n<=8, l<=6)", budget: secs(10), run: criterion_1 },
        Criterion { id: 2, name: "mu duality (n<=8, l<=6)", budget: secs(5), run: || merge(&[check_mu_duality(8, 6)]) },
        Criterion { id: 3, name: "mu multiplicativity (n<=6, l,m<=4)", budget: secs(5), run: || merge(&[check_mu_multiplicativity(6, 4)]) },
        Criterion { id: 4, name: "psi^2 specialization mu(n,2,k,p) = C(n,2k-p) (n<=10)", budget: secs(1), run: criterion_4 },
        Criterion { id: 5, name: "closed forms equal pullback matrices (rank<=5, l<=5)", budget: secs(30), run: || merge(&[check_closed_equals_pipeline(5, 5)]) },
        Criterion { id: 6, name: "composition M(m)M(l) = M(ml) and M(1) = I (l,m<=4)", budget: secs(30), run: || merge(&[check_composition(5, 4)]) },
        Criterion { id: 7, name: "integrality of all assembled matrices", budget: secs(10), run: || merge(&[check_integrality(6, 4)]) },
        Criterion { id: 8, name: "characteristic polynomials match exponents (rank<=6, l in {2,3,5})", budget: secs(10), run: criterion_8 },
        Criterion { id: 9, name: "U(n) eigenvectors (n<=8, l in {2,3,5}) and independence", budget: secs(10), run: || merge(&[check_eigen_relation(8, &[2, 3, 5]), check_eigen_independence(8)]) },
        Criterion { id: 10, name: "p_j recurrence equals (t/sinh t)^y series (y,j<=10), deg p_j = j", budget: secs(2), run: || merge(&[check_pj(10, 10)]) },
        Criterion { id: 11, name: "G2 printed closed forms (l=1..10)", budget: secs(1), run: criterion_11 },
        Criterion { id: 12, name: "symbolic oracle (n<=5, l<=4, degree<=12)", budget: secs(30), run: || merge(&[check_symbolic_counts(5, 4), check_product_identity(5, 4, 12)]) },
        Criterion { id: 13, name: "half-spin difference (n=3..5, l<=5) and l=2 exterior square", budget: secs(5), run: || merge(&[check_half_spin_difference(5, 5), check_half_spin_square(3, 5)]) },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let ms = elapsed.as_millis();
        match outcome {
            Ok(cases) if elapsed <= c.budget => {
                println!("PASS [{:>2}] {} ({cases} cases, {ms} ms)", c.id, c.name);
            }
            Ok(_) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: took {ms} ms, budget {} s", c.id, c.name, c.budget.as_secs());
            }
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why}", c.id, c.name);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
