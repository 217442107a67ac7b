//! Profile maps between function sets and set families: `P` sends a
//! partial function to its 1-positions, `P*` keeps the profiles of a
//! fixed weight class, and `P+` keeps profiles of size at least 2 as a
//! polygon family. These connect the Hall norm to the subset and
//! graph-coloring norms.

use crate::coloring::{splitting_number, PolygonFamily};
use crate::error::{Error, Result};
use crate::hall::{delta, hall_norm4, FnSet, PartialFn};
use crate::sets::{Family, SubsetMask, Universe};
use crate::subset_norm::{norm2, SubsetNormParams};

/// The 1-positions of a partial function. Restricted to total functions
/// this is a bijection onto the subsets of the point set.
pub fn profile(sigma: &PartialFn) -> SubsetMask {
    sigma.ones()
}

/// Recovers the total function with the given profile.
pub fn profile_inverse(n: u32, p: SubsetMask) -> Result<PartialFn> {
    PartialFn::total(n, p)
}

/// Outcome of the subset-norm bridge: `B` is a family of `H`-subsets,
/// `A` its preimage under the profile map, and the Hall norm of `A`
/// stays within one of the subset norm of `B`.
#[derive(Debug, Clone)]
pub struct SubsetBridgeCheck {
    pub subset_norm: u32,
    pub hall_norm: u32,
    pub preimage: FnSet,
    pub holds: bool,
}

/// Checks `norm4(P^{-1}[B]) <= norm2(B) + 1` with the subset norm taken
/// over the ground set `{0..N-1}` itself.
pub fn subset_bridge_check(n: u32, points: u32, b: &Family) -> Result<SubsetBridgeCheck> {
    let params = SubsetNormParams::new(n, points)?;
    if b.universe().size() != points {
        return Err(Error::domain("family universe must match the point count"));
    }
    let subset_norm = norm2(&params, b)?.norm;
    let members: Vec<SubsetMask> = b.members().to_vec();
    let preimage = FnSet::new(points, members)?;
    let (hall, _) = hall_norm4(&preimage)?;
    Ok(SubsetBridgeCheck {
        subset_norm,
        hall_norm: hall,
        holds: hall <= subset_norm + 1,
        preimage,
    })
}

/// Profiles of the members whose weight is exactly `H = N / 2^n`.
pub fn pstar(a: &FnSet, n: u32) -> Result<Family> {
    let params = SubsetNormParams::new(n, a.n())?;
    let h = params.h();
    Family::new(
        Universe::new(a.n())?,
        a.members()
            .iter()
            .copied()
            .filter(|m| m.len() == h)
            .collect(),
    )
}

/// One found violation of the profile-avoidance claim: a minimal
/// avoiding function whose profile sits inside a member profile.
#[derive(Debug, Clone)]
pub struct PstarViolation {
    pub set: FnSet,
    pub sigma: PartialFn,
    pub containing_profile: SubsetMask,
}

/// Report of a scan for violations of the claim that profiles of
/// minimal avoiding functions never embed into `P*` members. The claim
/// fails already when the profile is empty, so the scan reports rather
/// than asserts.
#[derive(Debug, Clone)]
pub struct PstarScanReport {
    pub cases: u64,
    pub violations: u64,
    pub first: Option<PstarViolation>,
}

/// Scans function sets for counterexamples to the claim: exhaustively in
/// mask order when all `2^(2^N)` subsets fit the budget, by seeded
/// sampling otherwise.
pub fn pstar_claim_scan(points: u32, budget: u64, seed: u64) -> Result<PstarScanReport> {
    use rand::{Rng, SeedableRng};

    if points > 6 {
        return Err(Error::budget("profile scan limited to 6 points"));
    }
    // Smallest admissible class exponent: 2^n must divide N.
    let n = (1..=points)
        .find(|n| SubsetNormParams::new(*n, points).is_ok())
        .ok_or_else(|| Error::domain("no weight class divides the point count"))?;
    let total = 1u64 << points;
    let exhaustive = total <= 20 && (1u128 << total) <= budget.max(1) as u128;
    let case_count = if exhaustive {
        (1u128 << total) as u64
    } else {
        budget.max(1)
    };

    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let mut cases = 0u64;
    let mut violations = 0u64;
    let mut first: Option<PstarViolation> = None;
    for index in 0..case_count {
        let bits: u128 = if exhaustive {
            index as u128
        } else {
            rng.random::<u128>() & ((1u128 << total) - 1)
        };
        let members: Vec<SubsetMask> = (0..total)
            .filter(|i| bits & (1 << i) != 0)
            .map(|i| SubsetMask(i as u32))
            .collect();
        let a = FnSet::new(points, members)?;
        let profiles = pstar(&a, n)?;
        if !profiles.is_empty() {
            let d = delta(&a)?;
            for sigma in d.members() {
                if let Some(p) = profiles
                    .members()
                    .iter()
                    .find(|p| profile(sigma).is_subset_of(**p))
                {
                    violations += 1;
                    if first.is_none() {
                        first = Some(PstarViolation {
                            set: a.clone(),
                            sigma: *sigma,
                            containing_profile: *p,
                        });
                    }
                    break;
                }
            }
        }
        cases += 1;
    }
    Ok(PstarScanReport {
        cases,
        violations,
        first,
    })
}

/// Profiles of weight at least 2, as a polygon family.
pub fn pplus(a: &FnSet) -> Result<PolygonFamily> {
    PolygonFamily::from_masks(
        Universe::new(a.n())?,
        a.members()
            .iter()
            .copied()
            .filter(|m| m.len() >= 2)
            .collect(),
    )
}

/// The bundle of profile-family bounds for one function set.
#[derive(Debug, Clone)]
pub struct PplusBoundsCheck {
    pub hall_norm: u32,
    pub splitting: u32,
    /// Splitting lower bound from a common subfunction of the minimal
    /// avoiding family, when one with at least one point exists.
    pub common_dom_size: u32,
    pub single_sigma_bound_holds: bool,
    /// The stated midline claim `norm4 = k+2 >= N/2+1 => splitting >= k`;
    /// `None` when the hypothesis is not triggered.
    pub midline_bound_holds: Option<bool>,
    /// `norm4 <= |p| + 1` for every nonempty `p` with no superset among
    /// the profiles. The stated claim also admits the empty `p`, which
    /// is tracked separately because it fails on every nonempty set
    /// without weight-2 profiles.
    pub no_superset_bound_holds: bool,
    /// Empty-`p` reading of the same claim (`norm4 <= 1` when there are
    /// no profiles of weight 2 or more); `None` when profiles exist.
    pub empty_profile_claim_holds: Option<bool>,
    /// Largest profile size, when profiles exist.
    pub max_profile_size: u32,
    /// The stated bound `norm4 <= max profile size + 1`; fails on
    /// complements of single functions, where the norm reaches N+1.
    pub max_profile_bound_holds: bool,
    /// The safe bound derived from the nonempty-profile proposition:
    /// `norm4 <= max profile size + 2`.
    pub max_profile_safe_bound_holds: bool,
}

pub fn pplus_bounds_check(a: &FnSet) -> Result<PplusBoundsCheck> {
    let points = a.n();
    if points > 10 {
        return Err(Error::budget("profile bounds check limited to 10 points"));
    }
    let (hall, _) = hall_norm4(a)?;
    let plus = pplus(a)?;
    let (splitting, _) = splitting_number(&plus)?;

    // Largest common subfunction of the minimal avoiding family; when
    // that family is empty any function qualifies, so take a total one.
    let d = delta(a)?;
    let common = match d.members().iter().copied().reduce(|acc, s| {
        let shared = acc.domain().intersect(s.domain());
        let disagree = acc.ones().union(s.ones()).difference(acc.ones().intersect(s.ones()));
        acc.restrict(shared.difference(disagree))
    }) {
        Some(c) => c,
        None => PartialFn::total(points, SubsetMask::EMPTY)?,
    };
    let common_dom_size = common.len();
    let single_sigma_bound_holds = splitting + 1 >= common_dom_size;

    let midline_bound_holds = if hall >= 2 && 2 * hall >= points + 2 {
        let k = hall - 2;
        Some(splitting >= k)
    } else {
        None
    };

    // Upward-closure scan: for every p with no superset among the
    // profiles, norm4 <= |p| + 1.
    let full = ((1u64 << points) - 1) as u32;
    let mut has_superset = vec![false; (full as usize) + 1];
    for m in plus.members() {
        has_superset[m.0 as usize] = true;
    }
    // Propagate downward: p has a superset profile iff p itself is one
    // or some p + {x} has.
    for p in (0..=full).rev() {
        if has_superset[p as usize] {
            for x in 0..points {
                if p & (1 << x) != 0 {
                    has_superset[(p & !(1 << x)) as usize] = true;
                }
            }
        }
    }
    let mut no_superset_bound_holds = true;
    for p in 1..=full {
        if !has_superset[p as usize] && hall > SubsetMask(p).len() + 1 {
            no_superset_bound_holds = false;
            break;
        }
    }
    let empty_profile_claim_holds = if plus.is_empty() {
        Some(hall <= 1)
    } else {
        None
    };
    let max_profile = plus.members().iter().map(|m| m.len()).max().unwrap_or(0);
    let max_profile_bound_holds = plus.is_empty() || hall <= max_profile + 1;
    let max_profile_safe_bound_holds = plus.is_empty() || hall <= max_profile + 2;
    Ok(PplusBoundsCheck {
        hall_norm: hall,
        splitting,
        common_dom_size,
        single_sigma_bound_holds,
        midline_bound_holds,
        no_superset_bound_holds,
        empty_profile_claim_holds,
        max_profile_size: max_profile,
        max_profile_bound_holds,
        max_profile_safe_bound_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::{dset, FnFamily};

    fn fnset(n: u32, masks: &[u32]) -> FnSet {
        FnSet::new(n, masks.iter().map(|&m| SubsetMask(m)).collect()).unwrap()
    }

    fn weight_class(n: u32, w: u32) -> FnSet {
        FnSet::new(
            n,
            (0..1u32 << n)
                .map(SubsetMask)
                .filter(|m| m.len() == w)
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn profile_read_off() {
        let total = PartialFn::total(4, SubsetMask(0)).unwrap();
        assert_eq!(profile(&total), SubsetMask::EMPTY);
        let total = PartialFn::total(4, SubsetMask(0b0101)).unwrap();
        assert_eq!(profile(&total), SubsetMask::from_elements(&[0, 2]));
        let partial = PartialFn::from_pairs(&[(0, 1), (3, 0)]).unwrap();
        assert_eq!(profile(&partial), SubsetMask::singleton(0));
    }

    #[test]
    fn profile_bijection_on_totals() {
        for n in 1..=6u32 {
            for bits in 0..1u32 << n {
                let p = SubsetMask(bits);
                let f = profile_inverse(n, p).unwrap();
                assert_eq!(profile(&f), p);
            }
        }
    }

    #[test]
    fn subset_bridge_examples() {
        let u4 = Universe::new(4).unwrap();
        let b = Family::new(u4, vec![SubsetMask::from_elements(&[0, 1])]).unwrap();
        let r = subset_bridge_check(1, 4, &b).unwrap();
        assert_eq!(r.subset_norm, 1);
        assert_eq!(r.hall_norm, 2);
        assert!(r.holds);
        assert_eq!(r.preimage.members(), &[SubsetMask(0b0011)]);

        let x = Family::new(u4, u4.subsets_of_size(2)).unwrap();
        let r = subset_bridge_check(1, 4, &x).unwrap();
        assert_eq!(r.subset_norm, 3);
        assert!(r.hall_norm <= 4);
        assert!(r.holds);

        let r = subset_bridge_check(1, 4, &Family::empty(u4)).unwrap();
        assert_eq!((r.subset_norm, r.hall_norm), (0, 1));
        assert!(r.holds);
    }

    #[test]
    fn pstar_examples() {
        // Weight class H: for n=1, N=4, H = 2.
        let a = fnset(4, &[0b0011, 0b0111]);
        let p = pstar(&a, 1).unwrap();
        assert_eq!(p.members(), &[SubsetMask::from_elements(&[0, 1])]);

        assert!(pstar(&FnSet::empty(4), 1).unwrap().is_empty());

        let all_weight2 = weight_class(4, 2);
        let p = pstar(&all_weight2, 1).unwrap();
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn pstar_scan_finds_violation_at_two_points() {
        let r = pstar_claim_scan(2, 1 << 16, 1).unwrap();
        assert!(r.violations > 0);
        let v = r.first.unwrap();
        assert!(profile(&v.sigma).is_subset_of(v.containing_profile));
        // The empty set is vacuously clean.
        let clean = pstar(&FnSet::empty(2), 1).unwrap();
        assert!(clean.is_empty());
    }

    #[test]
    fn pplus_examples() {
        let all_weight2 = weight_class(4, 2);
        let p = pplus(&all_weight2).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.members().iter().all(|m| m.len() == 2));

        assert!(pplus(&fnset(4, &[0b0000, 0b0001])).unwrap().is_empty());
        let p = pplus(&fnset(4, &[0b0111])).unwrap();
        assert_eq!(p.members(), &[SubsetMask::from_elements(&[0, 1, 2])]);
    }

    #[test]
    fn edge_lemma_small() {
        // Every edge of dom(sigma) other than P(sigma) appears among the
        // profiles of D({sigma}).
        for n in 2..=5u32 {
            for dom_bits in 0..1u32 << n {
                let dom = SubsetMask(dom_bits);
                if dom.len() < 2 {
                    continue;
                }
                let mut ones = 0u32;
                loop {
                    let sigma = PartialFn::new(dom, SubsetMask(ones)).unwrap();
                    let d = dset(&FnFamily::new(n, vec![sigma]).unwrap()).unwrap();
                    let plus = pplus(&d).unwrap();
                    for e in crate::coloring::edges_of(dom) {
                        if e != profile(&sigma) {
                            assert!(
                                plus.members().contains(&e),
                                "edge {e} missing for sigma over {dom} at n={n}"
                            );
                        }
                    }
                    if ones == dom_bits {
                        break;
                    }
                    ones = (ones.wrapping_sub(dom_bits)) & dom_bits;
                }
            }
        }
    }

    #[test]
    fn pplus_bounds_weight_two_observation() {
        let a = weight_class(4, 2);
        let r = pplus_bounds_check(&a).unwrap();
        assert!(r.hall_norm <= 4);
        assert_eq!(r.splitting, 4);
        assert!(r.no_superset_bound_holds);
        assert!(r.max_profile_bound_holds);
    }

    #[test]
    fn empty_profile_claim_fails_on_nonempty_sets() {
        // The stated claim would give norm 1 here; the true value is 2.
        let a = fnset(4, &[0b0000]);
        let r = pplus_bounds_check(&a).unwrap();
        assert_eq!(r.hall_norm, 2);
        assert_eq!(r.empty_profile_claim_holds, Some(false));
        assert!(r.no_superset_bound_holds);
    }

    #[test]
    fn max_profile_corollary_fails_on_single_function_complements() {
        // All functions except the constant-one function: the norm is
        // N+1 = 4 while every profile has size at most N-1 = 2.
        let a = FnSet::new(3, (0..7u32).map(SubsetMask).collect()).unwrap();
        let r = pplus_bounds_check(&a).unwrap();
        assert_eq!(r.hall_norm, 4);
        assert_eq!(r.max_profile_size, 2);
        assert!(!r.max_profile_bound_holds);
        assert!(r.max_profile_safe_bound_holds);
        assert!(r.no_superset_bound_holds);
    }

    #[test]
    fn pplus_two_block_construction() {
        // Two disjoint all-zero halves: norm floor(N/2)+1, profiles split
        // by two sets.
        let n = 4;
        let d = FnFamily::new(
            n,
            vec![
                PartialFn::from_pairs(&[(0, 0), (1, 0)]).unwrap(),
                PartialFn::from_pairs(&[(2, 0), (3, 0)]).unwrap(),
            ],
        )
        .unwrap();
        let a = dset(&d).unwrap();
        let (v, _) = hall_norm4(&a).unwrap();
        assert_eq!(v, n / 2 + 1);
        let plus = pplus(&a).unwrap();
        let (c, _) = splitting_number(&plus).unwrap();
        assert_eq!(c, 2);
    }
}
