//! Exact arithmetic kernel: big-integer binomials, two alternating-sum
//! binomial identities, the partial-function counting identity and
//! Stirling's factorial sandwich.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::BigCount;

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` whenever `k > n`.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    BigCount::from(acc)
}

/// Exact factorial `m!`.
pub fn factorial(m: u64) -> BigCount {
    let mut acc = BigUint::one();
    for i in 2..=m {
        acc *= BigUint::from(i);
    }
    BigCount::from(acc)
}

fn signed_binomial(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k).into_biguint())
}

/// Both sides of an identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks `sum_{i=1..k} (-1)^(i-1) C(k-1, i-1) C(a-i, b) = C(a-k, b-k+1)`
/// for positive `k, a, b` with `k-1 <= b <= a-k`.
pub fn verify_identity_a(k: u64, a: u64, b: u64) -> Result<IdentityCheck> {
    if k == 0 || a == 0 || b == 0 {
        return Err(Error::domain("identity A requires positive k, a, b"));
    }
    if !(k - 1 <= b && b + k <= a) {
        return Err(Error::domain(format!(
            "identity A requires k-1 <= b <= a-k, got k={k} a={a} b={b}"
        )));
    }
    let mut lhs = BigInt::zero();
    for i in 1..=k {
        let term = signed_binomial(k - 1, i - 1) * signed_binomial(a - i, b);
        if i % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = signed_binomial(a - k, b + 1 - k);
    Ok(IdentityCheck { lhs, rhs })
}

/// Checks `sum_{i=1..k} (-1)^(i-1) C(k, i) C(a-i, b) = sum_{i=1..k} C(a-i, b-i+1)`
/// for positive `k, a, b` with `k-1 <= b` and `b+k <= a`.
pub fn verify_identity_b(k: u64, a: u64, b: u64) -> Result<IdentityCheck> {
    if k == 0 || a == 0 || b == 0 {
        return Err(Error::domain("identity B requires positive k, a, b"));
    }
    if !(k - 1 <= b && b + k <= a) {
        return Err(Error::domain(format!(
            "identity B requires k-1 <= b and b+k <= a, got k={k} a={a} b={b}"
        )));
    }
    let mut lhs = BigInt::zero();
    for i in 1..=k {
        let term = signed_binomial(k, i) * signed_binomial(a - i, b);
        if i % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let mut rhs = BigInt::zero();
    for i in 1..=k {
        rhs += signed_binomial(a - i, b + 1 - i);
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// Counts partial functions from an `universe_size`-point set into an
/// `alphabet_size`-point set two ways: `sum_i C(N, i) n^i` and `(n+1)^N`.
pub fn partial_count(universe_size: u32, alphabet_size: u32) -> (BigCount, BigCount) {
    let n_big = BigUint::from(alphabet_size);
    let mut sum = BigUint::zero();
    for i in 0..=universe_size {
        sum += binomial(universe_size as u64, i as u64).into_biguint() * n_big.pow(i);
    }
    let closed = BigUint::from(alphabet_size + 1).pow(universe_size);
    (BigCount::from(sum), BigCount::from(closed))
}

/// Stirling sandwich for `m!`:
/// `sqrt(2*pi) m^(m+1/2) e^-m  <=  m!  <=  e m^(m+1/2) e^-m`.
pub fn factorial_bounds(m: u64) -> Result<(f64, f64)> {
    if m == 0 {
        return Err(Error::domain("factorial_bounds requires m >= 1"));
    }
    let mf = m as f64;
    // Work in logs to dodge overflow, then exponentiate once.
    let log_core = (mf + 0.5) * mf.ln() - mf;
    let lower = 0.5 * (2.0 * std::f64::consts::PI).ln() + log_core;
    let upper = 1.0 + log_core;
    if upper > f64::MAX.ln() {
        return Err(Error::domain(format!("m = {m} overflows f64 range")));
    }
    Ok((lower.exp(), upper.exp()))
}
