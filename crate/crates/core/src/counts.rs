//! Bounded-composition counts.
//!
//! `mu(n, l, k, p)` is the number of tuples `(k_1, .., k_n)` with
//! `0 <= k_r <= l - 1` and `k_1 + .. + k_n = l*k - p`. It is computed two
//! ways: an alternating binomial sum ([`mu_closed`]) and a dynamic program
//! over the parts ([`mu_enumerate`]). The two share no code beyond
//! [`MuArgs`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MuArgs {
    pub n: u32,
    pub l: u32,
    pub k: u32,
    /// May lie outside `1..=n`.
    pub p: i64,
}

impl MuArgs {
    pub fn new(n: i64, l: i64, k: i64, p: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter { name: "n", value: n, reason: "must be >= 1" });
        }
        if l < 1 {
            return Err(Error::InvalidParameter { name: "l", value: l, reason: "must be >= 1" });
        }
        if k < 0 {
            return Err(Error::InvalidParameter { name: "k", value: k, reason: "must be >= 0" });
        }
        let to_u32 = |name, v: i64| {
            u32::try_from(v).map_err(|_| Error::InvalidParameter {
                name,
                value: v,
                reason: "too large",
            })
        };
        Ok(Self {
            n: to_u32("n", n)?,
            l: to_u32("l", l)?,
            k: to_u32("k", k)?,
            p,
        })
    }

    /// Required sum of the parts, `l*k - p`.
    pub fn target(&self) -> i64 {
        self.l as i64 * self.k as i64 - self.p
    }

    /// The same `n, l, k` with a different `p`.
    pub fn with_p(self, p: i64) -> Self {
        Self { p, ..self }
    }

    fn max_sum(&self) -> i64 {
        self.n as i64 * (self.l as i64 - 1)
    }
}

/// Counts the tuples directly with a table over (parts used, partial sum).
pub fn mu_enumerate(args: MuArgs) -> BigInt {
    let s = args.target();
    if s < 0 || s > args.max_sum() {
        return BigInt::zero();
    }
    let s = s as usize;
    let bound = args.l as usize - 1;
    let mut ways = vec![BigInt::zero(); s + 1];
    ways[0] = BigInt::from(1);
    for _ in 0..args.n {
        let mut next = vec![BigInt::zero(); s + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            let lo = t.saturating_sub(bound);
            for w in &ways[lo..=t] {
                *slot += w;
            }
        }
        ways = next;
    }
    ways.swap_remove(s)
}

/// Inclusion-exclusion over the parts exceeding the bound:
/// `sum_q (-1)^q C(n, q) C(n + l(k - q) - p - 1, n - 1)`.
///
/// `q` runs while the reduced sum `l(k - q) - p` stays nonnegative. For
/// `p >= 1` that is `q <= k - 1`; for `p <= 0` the `q = k` term is needed
/// too. With `k = 0` the sum reduces to `[p = 0]` whenever `p >= 0`.
pub fn mu_closed(args: MuArgs) -> BigInt {
    let s = args.target();
    if s < 0 || s > args.max_sum() {
        return BigInt::zero();
    }
    let n = args.n as i64;
    let l = args.l as i64;
    let mut acc = BigInt::zero();
    for q in 0..=n {
        let reduced = s - l * q;
        if reduced < 0 {
            break;
        }
        let term = binomial(n, q).expect("n >= 0")
            * binomial(n + reduced - 1, n - 1).expect("top >= n - 1 >= 0");
        if q % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `mu` by the closed form; panics on `n == 0` or `l == 0`.
pub fn mu(n: u32, l: u32, k: u32, p: i64) -> BigInt {
    assert!(n >= 1 && l >= 1, "mu needs n >= 1 and l >= 1");
    mu_closed(MuArgs { n, l, k, p })
}

/// `mu(n, l, k, p) + mu(n, l, k, n - p)`.
pub fn alpha(args: MuArgs) -> BigInt {
    mu_closed(args) + mu_closed(args.with_p(args.n as i64 - args.p))
}

/// `mu(n, l, k, p) - mu(n, l, k, n - p)`.
pub fn beta(args: MuArgs) -> BigInt {
    mu_closed(args) - mu_closed(args.with_p(args.n as i64 - args.p))
}
