//! The subset norm: members of the universe family all have size
//! `H = G / 2^n`, and the norm of `A` is the least size of a witness
//! `x` contained in no member. Includes the localization operator, the
//! exact lower/upper ratio bounds with the extremal family attaining the
//! upper one, the Stirling factorial bound and the refutation of a
//! previously claimed `1 - 2^(-kn)` mass lower bound.

use num_bigint::BigInt;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exact::{BigCount, ExactRatio};
use crate::sets::{Family, SubsetMask, Universe};

/// Budget for materializing the full universe family.
pub const UNIVERSE_BUDGET: u64 = 1_000_000;

/// Parameters of the subset norm: `2^n` divides `G` and `H = G / 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetNormParams {
    n: u32,
    g: u32,
    h: u32,
}

impl SubsetNormParams {
    pub fn new(n: u32, g: u32) -> Result<Self> {
        if n == 0 || g == 0 {
            return Err(Error::domain("n and G must be positive"));
        }
        Universe::new(g)?;
        if n >= 32 || !g.is_multiple_of(1 << n) {
            return Err(Error::domain(format!("2^{n} must divide G = {g}")));
        }
        let h = g >> n;
        Ok(SubsetNormParams { n, g, h })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.g).expect("validated on construction")
    }

    /// `|X| = C(G, H)`.
    pub fn universe_size(&self) -> BigCount {
        binomial(self.g as u64, self.h as u64)
    }
}

/// The full universe family: every `H`-subset of `G`, canonical order.
pub fn universe_x(params: &SubsetNormParams) -> Result<Family> {
    let size = params.universe_size();
    if size > BigCount::from_u64(UNIVERSE_BUDGET) {
        return Err(Error::budget(format!(
            "C({}, {}) = {} exceeds {}",
            params.g(),
            params.h(),
            size,
            UNIVERSE_BUDGET
        )));
    }
    Family::new(
        params.universe(),
        params.universe().subsets_of_size(params.h()),
    )
}

fn check_members(params: &SubsetNormParams, a: &Family) -> Result<()> {
    if a.universe().size() != params.g() {
        return Err(Error::domain("family universe does not match G"));
    }
    for m in a.members() {
        if m.len() != params.h() {
            return Err(Error::domain(format!(
                "member {m} has size {} but H = {}",
                m.len(),
                params.h()
            )));
        }
    }
    Ok(())
}

/// Norm value together with its minimal witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Norm2Result {
    pub norm: u32,
    pub witness: SubsetMask,
}

/// Least `|x|` over `x` contained in no member of `A`; the witness is the
/// least such mask by (size, bit-vector value). The empty family has norm
/// 0 with the empty witness, and no value exceeds `H + 1`.
pub fn norm2(params: &SubsetNormParams, a: &Family) -> Result<Norm2Result> {
    check_members(params, a)?;
    if a.is_empty() {
        return Ok(Norm2Result {
            norm: 0,
            witness: SubsetMask::EMPTY,
        });
    }
    for size in 1..=params.h() + 1 {
        for x in params.universe().subsets_of_size(size) {
            if a.members().iter().all(|m| !x.is_subset_of(*m)) {
                return Ok(Norm2Result {
                    norm: size,
                    witness: x,
                });
            }
        }
    }
    unreachable!("a set of size H+1 is contained in no H-set");
}

/// `A(l)`: the members containing `l`.
pub fn localize(a: &Family, l: u32) -> Result<Family> {
    if !a.universe().contains(l) {
        return Err(Error::domain(format!("element {l} outside universe")));
    }
    Family::new(
        a.universe(),
        a.members()
            .iter()
            .copied()
            .filter(|m| m.contains(l))
            .collect(),
    )
}

/// Exact lower bound on `|A| / |X|` for nonempty `A` with norm at least
/// `k + 1`: `(G-H)! (H-k)! / (G-k)!`.
pub fn ratio_lower_bound(params: &SubsetNormParams, k: u32) -> Result<ExactRatio> {
    if k > params.h() {
        return Err(Error::domain("k must be at most H"));
    }
    // (G-H)! (H-k)! / (G-k)!  =  1 / ( C(G-k, H-k) * (G-H+1..=G-k product / ..) )
    // computed directly from factorials for clarity.
    let num = &crate::combinatorics::factorial((params.g() - params.h()) as u64)
        * &crate::combinatorics::factorial((params.h() - k) as u64);
    let den = crate::combinatorics::factorial((params.g() - k) as u64);
    ExactRatio::from_counts(&num, &den)
}

/// Exact upper bound on `|A| / |X|` for `A` with norm at most `k`:
/// `1 - prod_{i<k} (H-i)/(G-i)`. Attained by [`extremal_family`].
pub fn ratio_upper_bound(params: &SubsetNormParams, k: u32) -> Result<ExactRatio> {
    if k > params.h() {
        return Err(Error::domain("k must be at most H"));
    }
    let mut prod = ExactRatio::one();
    for i in 0..k {
        prod = prod.mul(&ExactRatio::new(
            BigInt::from(params.h() - i),
            BigInt::from(params.g() - i),
        )?);
    }
    Ok(ExactRatio::one().sub(&prod))
}

/// `prod_{i<k} (H-i)/(G-i)` itself, the quantity compared against
/// `2^(-nk)` in the refutation.
pub fn miss_product(params: &SubsetNormParams, k: u32) -> Result<ExactRatio> {
    Ok(ExactRatio::one().sub(&ratio_upper_bound(params, k)?))
}

/// The union of the avoidance families of the first `k` points:
/// all members missing at least one of `0..k`. Has norm exactly `k` and
/// size `C(G,H) - C(G-k, H-k)`.
pub fn extremal_family(params: &SubsetNormParams, k: u32) -> Result<Family> {
    if k == 0 || k > params.h() {
        return Err(Error::domain("need 1 <= k <= H"));
    }
    let x = universe_x(params)?;
    let low = SubsetMask(((1u64 << k) - 1) as u32);
    Family::new(
        params.universe(),
        x.members()
            .iter()
            .copied()
            .filter(|m| !low.is_subset_of(*m))
            .collect(),
    )
}

/// Float evaluation of the Stirling-based closed form; always
/// strictly below the exact `ratio_lower_bound`.
pub fn stirling_ratio_bound(params: &SubsetNormParams, k: u32) -> Result<f64> {
    let (g, h) = (params.g() as f64, params.h() as f64);
    let kf = k as f64;
    if !(0 < k && k < params.h() && params.h() < params.g()) {
        return Err(Error::domain("need 0 < k < H < G"));
    }
    let front = 2.0 * std::f64::consts::PI / std::f64::consts::E
        * ((g - h) * (h - kf) / (g - kf)).sqrt();
    // Power quotient evaluated in logs.
    let log_pow = g * (g - h).ln() + h * (h - kf).ln() + kf * (g - kf).ln()
        - g * (g - kf).ln()
        - h * (g - h).ln()
        - kf * (h - kf).ln();
    Ok(front * log_pow.exp())
}

/// The refutation record for one `(n, G, k)` instance: the extremal
/// family has norm `k` yet mass strictly above `1 - 2^(-kn)`.
#[derive(Debug, Clone)]
pub struct RefutationCheck {
    pub norm_of_extremal: u32,
    pub ratio: ExactRatio,
    pub miss_product: ExactRatio,
    pub threshold: ExactRatio,
    pub product_below_threshold: bool,
    pub ratio_above_claimed_bound: bool,
    pub refuted: bool,
}

/// Builds the extremal family and verifies the three exact comparisons
/// refuting the claimed `|A|/|X| >= 1 - 2^(-kn)` lower bound.
pub fn refutation_check(params: &SubsetNormParams, k: u32) -> Result<RefutationCheck> {
    if k < 2 || k > params.h() {
        return Err(Error::domain("need 2 <= k <= H"));
    }
    let family = extremal_family(params, k)?;
    let norm_of_extremal = norm2(params, &family)?.norm;
    let ratio = ExactRatio::from_counts(&family.counting_norm(), &params.universe_size())?;
    let product = miss_product(params, k)?;
    let expected_size = binomial(params.g() as u64, params.h() as u64).checked_sub(&binomial(
        (params.g() - k) as u64,
        (params.h() - k) as u64,
    ))?;
    if family.counting_norm() != expected_size {
        return Err(Error::domain("extremal family size identity failed"));
    }
    let threshold = ExactRatio::new(BigInt::from(1), BigInt::from(2u64).pow(params.n() * k))?;
    let product_below_threshold = product < threshold;
    let claimed = ExactRatio::one().sub(&threshold);
    let ratio_above_claimed_bound = ratio > claimed;
    let refuted = norm_of_extremal == k && product_below_threshold && ratio_above_claimed_bound;
    Ok(RefutationCheck {
        norm_of_extremal,
        ratio,
        miss_product: product,
        threshold,
        product_below_threshold,
        ratio_above_claimed_bound,
        refuted,
    })
}
