//! The exclusion norm: `F / (|G \ A| + 1)` for `A` a subset of the ground
//! set `{0..G-1}`, together with its size relationship, the partition
//! threshold, triangle-inequality counterexamples and the corrected union
//! bound.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::ExactRatio;
use crate::sets::{SubsetMask, Universe};

/// Parameters `0 < F < G` of the exclusion norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExclusionParams {
    f: u32,
    g: u32,
}

impl ExclusionParams {
    pub fn new(f: u32, g: u32) -> Result<Self> {
        if !(0 < f && f < g) {
            return Err(Error::domain(format!("need 0 < F < G, got F={f} G={g}")));
        }
        Universe::new(g)?;
        Ok(ExclusionParams { f, g })
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.g).expect("validated on construction")
    }

    fn check_subset(&self, a: SubsetMask) -> Result<()> {
        if !a.is_subset_of(self.universe().full_mask()) {
            return Err(Error::domain("set not within ground set G"));
        }
        Ok(())
    }
}

/// `norm1(A) = F / (|G \ A| + 1)`.
pub fn norm1(params: &ExclusionParams, a: SubsetMask) -> Result<ExactRatio> {
    params.check_subset(a)?;
    let excluded = params.g - a.len();
    ExactRatio::new(BigInt::from(params.f), BigInt::from(excluded + 1))
}

/// Inverts the norm back to a size: `|A| = G + 1 - F/k`.
pub fn size_from_norm1(params: &ExclusionParams, k: &ExactRatio) -> Result<ExactRatio> {
    if !k.is_positive() {
        return Err(Error::domain("norm value must be positive"));
    }
    let f = ExactRatio::from_int(params.f as i64);
    let g_plus_1 = ExactRatio::from_int(params.g as i64 + 1);
    Ok(g_plus_1.sub(&f.div(k)?))
}

/// Outcome of the partition threshold check: both norms land on opposite
/// sides of `2F / (G + 2)`.
#[derive(Debug, Clone)]
pub struct PartitionBounds {
    pub norm_a: ExactRatio,
    pub norm_b: ExactRatio,
    pub threshold: ExactRatio,
    pub holds: bool,
}

pub fn partition_bounds(
    params: &ExclusionParams,
    a: SubsetMask,
    b: SubsetMask,
) -> Result<PartitionBounds> {
    params.check_subset(a)?;
    params.check_subset(b)?;
    let full = params.universe().full_mask();
    if a.union(b) != full || !a.intersect(b).is_empty() {
        return Err(Error::domain("A and B must partition G"));
    }
    let norm_a = norm1(params, a)?;
    let norm_b = norm1(params, b)?;
    let threshold = ExactRatio::new(BigInt::from(2 * params.f), BigInt::from(params.g + 2))?;
    let (lo, hi) = if norm_a <= norm_b {
        (&norm_a, &norm_b)
    } else {
        (&norm_b, &norm_a)
    };
    let holds = *lo <= threshold && threshold <= *hi;
    Ok(PartitionBounds {
        norm_a,
        norm_b,
        threshold,
        holds,
    })
}

/// A witnessed failure of the triangle inequality.
#[derive(Debug, Clone)]
pub struct TriangleCounterexample {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub norm_a: ExactRatio,
    pub norm_b: ExactRatio,
    pub norm_union: ExactRatio,
}

/// Produces a partition `(A, B)` of `G` with
/// `norm1(A u B) > norm1(A) + norm1(B)`. Exists whenever `G >= 3`.
pub fn triangle_counterexample(params: &ExclusionParams) -> Result<TriangleCounterexample> {
    if params.g < 3 {
        return Err(Error::domain("need G >= 3 so that |A|*|B| >= 2"));
    }
    // Splitting off the first floor(G/2) elements gives |A|*|B| >= 2.
    let half = params.g / 2;
    let a = SubsetMask(((1u64 << half) - 1) as u32);
    let b = a.complement_in(params.universe());
    let norm_a = norm1(params, a)?;
    let norm_b = norm1(params, b)?;
    let norm_union = norm1(params, a.union(b))?;
    if norm_union <= norm_a.add(&norm_b) {
        return Err(Error::domain("no counterexample for these parameters"));
    }
    Ok(TriangleCounterexample {
        a,
        b,
        norm_a,
        norm_b,
        norm_union,
    })
}

/// Outcome of the union-bound check. `Q = F/k + F/l - G - 1`; whenever
/// `Q > 0` the union norm satisfies `j <= F/Q`. The source states the
/// opposite direction, so failures of `j >= F/Q` are recorded as a
/// discrepancy instead of a violation.
#[derive(Debug, Clone)]
pub struct UnionBoundCheck {
    pub norm_a: ExactRatio,
    pub norm_b: ExactRatio,
    pub norm_union: ExactRatio,
    /// `F/Q` when `Q > 0`; `None` when the bound imposes no constraint.
    pub bound: Option<ExactRatio>,
    /// The corrected inequality `j <= F/Q` (vacuously true for `Q <= 0`).
    pub corrected_holds: bool,
    /// Whether the stated direction `j >= F/Q` happens to hold here.
    pub stated_direction_holds: bool,
}

pub fn union_bound_check(
    params: &ExclusionParams,
    a: SubsetMask,
    b: SubsetMask,
) -> Result<UnionBoundCheck> {
    params.check_subset(a)?;
    params.check_subset(b)?;
    let norm_a = norm1(params, a)?;
    let norm_b = norm1(params, b)?;
    let norm_union = norm1(params, a.union(b))?;
    let f = ExactRatio::from_int(params.f as i64);
    let g_plus_1 = ExactRatio::from_int(params.g as i64 + 1);
    let q = f.div(&norm_a)?.add(&f.div(&norm_b)?).sub(&g_plus_1);
    let bound = if q.is_positive() {
        Some(f.div(&q)?)
    } else {
        None
    };
    let corrected_holds = match &bound {
        Some(limit) => norm_union <= *limit,
        None => true,
    };
    let stated_direction_holds = match &bound {
        Some(limit) => norm_union >= *limit,
        None => true,
    };
    Ok(UnionBoundCheck {
        norm_a,
        norm_b,
        norm_union,
        bound,
        corrected_holds,
        stated_direction_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(f: u32, g: u32) -> ExclusionParams {
        ExclusionParams::new(f, g).unwrap()
    }

    fn ratio(n: i64, d: i64) -> ExactRatio {
        ExactRatio::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn norm1_limiting_cases() {
        let p = params(2, 4);
        assert_eq!(norm1(&p, SubsetMask::EMPTY).unwrap(), ratio(2, 5));
        assert_eq!(norm1(&p, p.universe().full_mask()).unwrap(), ratio(2, 1));
        // |G \ A| = 2 for A = {0,1}.
        assert_eq!(
            norm1(&p, SubsetMask::from_elements(&[0, 1])).unwrap(),
            ratio(2, 3)
        );
    }

    #[test]
    fn size_relationship_round_trip() {
        for g in 2..=8u32 {
            for f in 1..g {
                let p = params(f, g);
                for a in p.universe().subsets() {
                    let k = norm1(&p, a).unwrap();
                    let size = size_from_norm1(&p, &k).unwrap();
                    assert_eq!(size, ExactRatio::from_int(a.len() as i64));
                }
            }
        }
    }

    #[test]
    fn size_from_norm1_edges() {
        let p = params(2, 4);
        assert_eq!(
            size_from_norm1(&p, &ratio(2, 1)).unwrap(),
            ExactRatio::from_int(4)
        );
        assert_eq!(
            size_from_norm1(&p, &ratio(2, 5)).unwrap(),
            ExactRatio::from_int(0)
        );
        assert_eq!(
            size_from_norm1(&p, &ratio(2, 3)).unwrap(),
            ExactRatio::from_int(2)
        );
        assert!(size_from_norm1(&p, &ExactRatio::zero()).is_err());
    }

    #[test]
    fn monotone_under_inclusion() {
        for g in 2..=8u32 {
            for f in 1..g {
                let p = params(f, g);
                for a in p.universe().subsets() {
                    for b in p.universe().subsets() {
                        if a.is_subset_of(b) {
                            assert!(norm1(&p, a).unwrap() <= norm1(&p, b).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_bounds_examples() {
        let p = params(2, 4);
        let r = partition_bounds(
            &p,
            SubsetMask::from_elements(&[0, 1]),
            SubsetMask::from_elements(&[2, 3]),
        )
        .unwrap();
        assert_eq!(r.norm_a, ratio(2, 3));
        assert_eq!(r.norm_b, ratio(2, 3));
        assert_eq!(r.threshold, ratio(2, 3));
        assert!(r.holds);

        let r = partition_bounds(
            &p,
            SubsetMask::from_elements(&[0]),
            SubsetMask::from_elements(&[1, 2, 3]),
        )
        .unwrap();
        assert_eq!(r.norm_a, ratio(1, 2));
        assert_eq!(r.norm_b, ratio(1, 1));
        assert!(r.holds);

        let p = params(3, 5);
        let r = partition_bounds(&p, SubsetMask::EMPTY, p.universe().full_mask()).unwrap();
        assert_eq!(r.norm_a, ratio(1, 2));
        assert_eq!(r.norm_b, ratio(3, 1));
        assert_eq!(r.threshold, ratio(6, 7));
        assert!(r.holds);

        assert!(partition_bounds(
            &p,
            SubsetMask::from_elements(&[0]),
            SubsetMask::from_elements(&[0, 1, 2, 3, 4])
        )
        .is_err());
    }

    #[test]
    fn partition_threshold_sweep() {
        for g in 2..=10u32 {
            for f in 1..g {
                let p = params(f, g);
                for a in p.universe().subsets() {
                    let b = a.complement_in(p.universe());
                    let r = partition_bounds(&p, a, b).unwrap();
                    assert!(r.holds, "threshold violated at F={f} G={g} A={a}");
                }
            }
        }
    }

    #[test]
    fn triangle_counterexamples() {
        let c = triangle_counterexample(&params(2, 4)).unwrap();
        assert_eq!(c.a, SubsetMask::from_elements(&[0, 1]));
        assert_eq!(c.norm_union, ratio(2, 1));
        assert!(c.norm_union > c.norm_a.add(&c.norm_b));

        let c = triangle_counterexample(&params(3, 5)).unwrap();
        assert_eq!(c.a, SubsetMask::from_elements(&[0, 1]));
        assert_eq!(c.norm_union, ratio(3, 1));
        assert_eq!(c.norm_a.add(&c.norm_b), ratio(7, 4));

        let c = triangle_counterexample(&params(2, 3)).unwrap();
        assert_eq!(c.a, SubsetMask::from_elements(&[0]));
        assert_eq!(c.norm_a.add(&c.norm_b), ratio(5, 3));

        assert!(triangle_counterexample(&params(1, 2)).is_err());
    }

    #[test]
    fn union_bound_examples() {
        let p = params(2, 4);
        let r = union_bound_check(&p, SubsetMask::singleton(0), SubsetMask::singleton(0)).unwrap();
        assert_eq!(r.bound.as_ref().unwrap(), &ratio(2, 3));
        assert_eq!(r.norm_union, ratio(1, 2));
        assert!(r.corrected_holds);
        assert!(!r.stated_direction_holds);

        let r = union_bound_check(
            &p,
            SubsetMask::from_elements(&[0, 1]),
            SubsetMask::from_elements(&[2, 3]),
        )
        .unwrap();
        assert_eq!(r.bound.as_ref().unwrap(), &ratio(2, 1));
        assert_eq!(r.norm_union, ratio(2, 1));
        assert!(r.corrected_holds && r.stated_direction_holds);

        let full = p.universe().full_mask();
        let r = union_bound_check(&p, full, full).unwrap();
        assert!(r.bound.is_none());
        assert!(r.corrected_holds);
    }

    #[test]
    fn corrected_union_bound_exhaustive() {
        for g in 2..=8u32 {
            for f in 1..g {
                let p = params(f, g);
                for a in p.universe().subsets() {
                    for b in p.universe().subsets() {
                        let r = union_bound_check(&p, a, b).unwrap();
                        assert!(r.corrected_holds, "failed at F={f} G={g} A={a} B={b}");
                    }
                }
            }
        }
    }
}
