//! Closed formulas for `Sp(n)`, `Spin(2n+1)`, `Spin(2n)` and `G2`,
//! evaluated term by term. The pullback route in `pipeline` must agree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{Family, GroupSpec};
use super::matrix::AdamsMatrix;
use super::unitary::check_l;
use crate::counts::{self, MuArgs};
use crate::error::Result;
use crate::exactmath::{frac, pow_i64, rat, sign, Rational};

fn r(x: BigInt) -> Rational {
    Rational::from_integer(x)
}

fn sg(e: i64) -> Rational {
    rat(sign(e))
}

fn two_pow(e: u32) -> Rational {
    r(pow_i64(2, e))
}

/// Count helpers with `n` and `l` fixed.
struct Counts {
    n: u32,
    l: u32,
}

impl Counts {
    fn args(&self, k: u32, p: i64) -> MuArgs {
        MuArgs { n: self.n, l: self.l, k, p }
    }
    fn mu(&self, k: u32, p: i64) -> Rational {
        r(counts::mu_closed(self.args(k, p)))
    }
    fn alpha(&self, k: u32, p: i64) -> Rational {
        r(counts::alpha(self.args(k, p)))
    }
    fn beta(&self, k: u32, p: i64) -> Rational {
        r(counts::beta(self.args(k, p)))
    }
}

fn zeros(d: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); d]; d]
}

/// `psi^l d(L^k s_2n) = (-1)^k l ( sum_{p<n} (-1)^p alpha(2n,l,k,p) d(L^p)
///                                 + (-1)^n mu(2n,l,k,n) d(L^n) )`.
pub fn symplectic_adams_matrix(n: u32, l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let group = GroupSpec::new(Family::Sp, n)?;
    let c = Counts { n: 2 * n, l };
    let lr = r(BigInt::from(l));
    let mut e = zeros(n as usize);
    for k in 1..=n {
        let front = &lr * sg(k as i64);
        for p in 1..n {
            e[p as usize - 1][k as usize - 1] = &front * sg(p as i64) * c.alpha(k, p as i64);
        }
        e[n as usize - 1][k as usize - 1] = &front * sg(n as i64) * c.mu(k, n as i64);
    }
    let m = AdamsMatrix::new(group, l, e);
    m.ensure_integral()?;
    Ok(m)
}

/// Basis `(d(L^1), .., d(L^(n-1)), d(S))` of `Spin(2n+1)`.
pub fn spin_odd_adams_matrix(n: u32, l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let group = GroupSpec::new(Family::SpinOdd, n)?;
    let c = Counts { n: 2 * n + 1, l };
    let lr = r(BigInt::from(l));
    let ni = n as i64;
    let s_idx = n as usize - 1;
    let mut e = zeros(n as usize);

    // bracket(k, p) = (-1)^p beta(k, p) - (-1)^n beta(k, n)
    let bracket = |k: u32, p: u32| c.beta(k, p as i64) * sg(p as i64) - c.beta(k, ni) * sg(ni);

    for k in 1..n {
        let front = &lr * sg(k as i64);
        for p in 1..n {
            e[p as usize - 1][k as usize - 1] = &front * bracket(k, p);
        }
        e[s_idx][k as usize - 1] = &front * sg(ni) * two_pow(n + 1) * c.beta(k, ni);
    }

    // d(S) column
    let pre = &lr / two_pow(n + 1);
    for p in 1..n {
        let inner: Rational = (1..=n).map(|k| bracket(k, p) * sg(k as i64)).sum();
        e[p as usize - 1][s_idx] = &pre * inner;
    }
    let diag: Rational = (1..=n).map(|k| c.beta(k, ni) * sg(k as i64 + ni)).sum();
    e[s_idx][s_idx] = &lr * diag;

    let m = AdamsMatrix::new(group, l, e);
    m.ensure_integral()?;
    Ok(m)
}

/// Basis `(d(L^1), .., d(L^(n-2)), d(S+), d(S-))` of `Spin(2n)`, `n >= 3`.
///
/// The half-spin columns are `psi^l d(S+-) = 1/2 psi^l(d(S+) + d(S-))
/// +- 1/2 l^n (d(S+) - d(S-))`; the `l^n` term appears once, not once per
/// summand of the `k`-sum.
pub fn spin_even_adams_matrix(n: u32, l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let group = GroupSpec::new(Family::SpinEven, n)?;
    let c = Counts { n: 2 * n, l };
    let lr = r(BigInt::from(l));
    let ni = n as i64;
    let d = n as usize;
    let (plus, minus) = (d - 2, d - 1);
    let mut e = zeros(d);
    let wedge = |j: i64| j as usize - 1;

    for k in 1..=n - 2 {
        let col = k as usize - 1;
        let front = &lr * sg(k as i64 + ni);
        let mut p = 1i64;
        while ni - 2 * p >= 1 {
            let a = ni - 2 * p;
            e[wedge(a)][col] += &front * (c.alpha(k, a) - c.mu(k, ni) * rat(2));
            let b = ni - 2 * p - 1;
            if b >= 1 {
                e[wedge(b)][col] -= &front * (c.alpha(k, b) - c.alpha(k, ni - 1));
            }
            p += 1;
        }
        let spin = &front * two_pow(n - 1) * (c.alpha(k, ni - 1) - c.mu(k, ni) * rat(2));
        e[plus][col] -= &spin;
        e[minus][col] -= &spin;
    }

    // half-spin columns
    let half_pow = &lr / two_pow(n);
    let mut wedge_part = vec![Rational::zero(); d];
    let mut spin_sum = Rational::zero();
    let mut kk = 0i64;
    while ni - 2 * kk > 1 {
        let big_k = (ni - 2 * kk - 1) as u32;
        let mut p = 1i64;
        while ni - 2 * p >= 1 {
            let b = ni - 2 * p - 1;
            if b >= 1 {
                wedge_part[wedge(b)] +=
                    &half_pow * (c.alpha(big_k, b) - c.alpha(big_k, ni - 1));
            }
            let a = ni - 2 * p;
            wedge_part[wedge(a)] -= &half_pow * (c.alpha(big_k, a) - c.mu(big_k, ni) * rat(2));
            p += 1;
        }
        spin_sum += c.alpha(big_k, ni - 1) - c.mu(big_k, ni) * rat(2);
        kk += 1;
    }
    let half_l = &lr * frac(1, 2);
    let shift = &half_l * r(pow_i64(l as i64, n - 1));
    let common = &half_l * spin_sum;
    for (col, s) in [(plus, 1i64), (minus, -1i64)] {
        for j in 0..d - 2 {
            e[j][col] = wedge_part[j].clone();
        }
        e[plus][col] = &common + &shift * rat(s);
        e[minus][col] = &common - &shift * rat(s);
    }

    let m = AdamsMatrix::new(group, l, e);
    m.ensure_integral()?;
    Ok(m)
}

fn lpow(l: u32, e: u32) -> Rational {
    r(pow_i64(l as i64, e))
}

/// Polynomial expressions in `l` for `G2` on `(d(rho1), d(rho2))`.
pub fn g2_closed_form_matrix(l: u32) -> Result<AdamsMatrix> {
    check_l(l)?;
    let (l2, l6) = (lpow(l, 2), lpow(l, 6));
    let one = Rational::one();
    let l4 = lpow(l, 4);
    let e = vec![
        vec![
            (&l6 * rat(2) + &l2 * rat(13)) / rat(15),
            &l2 * rat(52) * (&one - &l4) / rat(15),
        ],
        vec![
            (&l2 - &l6) / rat(30),
            &l2 * (&l4 * rat(13) + rat(2)) / rat(15),
        ],
    ];
    let m = AdamsMatrix::new(GroupSpec::g2(), l, e);
    m.ensure_integral()?;
    Ok(m)
}

/// `psi^l d(L^2 rho1)` on `(d(rho1), d(rho2))` as a polynomial in `l`.
pub fn g2_wedge2_closed_form(l: u32) -> [Rational; 2] {
    let (l2, l6) = (lpow(l, 2), lpow(l, 6));
    [
        (&l2 * rat(13) - &l6 * rat(10)) / rat(3),
        (&l6 * rat(5) + &l2) / rat(6),
    ]
}
