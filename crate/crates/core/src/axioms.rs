//! The two norm axioms, checked over a finite ground collection:
//! monotonicity under inclusion, positivity of the whole ground set,
//! and the unit bound on singletons. Exhaustive up to 12 ground
//! elements, seeded sampling beyond.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::coloring::{norm3, PolygonFamily};
use crate::error::Result;
use crate::exact::ExactRatio;
use crate::exclusion::{norm1, ExclusionParams};
use crate::hall::{hall_norm4, FnSet};
use crate::sets::{Family, SubsetMask, Universe};
use crate::subset_norm::{norm2, universe_x, SubsetNormParams};

pub const EXHAUSTIVE_GROUND_LIMIT: u32 = 12;

/// One norm instance together with the ground collection the axioms
/// quantify over.
#[derive(Debug, Clone)]
pub enum AxiomCase {
    /// The counting norm on a ground set of the given size.
    Counting { ground_size: u32 },
    /// The exclusion norm on the subsets of its ground set.
    Exclusion { params: ExclusionParams },
    /// The subset norm on the subfamilies of the universe family.
    Subset { params: SubsetNormParams },
    /// The coloring norm on the subfamilies of all polygons.
    Coloring { vertices: u32 },
    /// The Hall norm on the subsets of all total functions.
    Hall { points: u32 },
}

impl AxiomCase {
    pub fn name(&self) -> &'static str {
        match self {
            AxiomCase::Counting { .. } => "counting",
            AxiomCase::Exclusion { .. } => "exclusion",
            AxiomCase::Subset { .. } => "subset",
            AxiomCase::Coloring { .. } => "coloring",
            AxiomCase::Hall { .. } => "hall",
        }
    }
}

/// Outcome of an axiom check.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub norm: &'static str,
    pub ground_size: u32,
    pub pairs_checked: u64,
    pub exhaustive: bool,
    pub monotone: bool,
    pub positive_on_ground: bool,
    pub singleton_bound: bool,
    /// Singleton values exceeding 1, rendered for the report.
    pub singleton_excesses: Vec<String>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.monotone && self.positive_on_ground && self.singleton_bound
    }
}

struct GroundNorm {
    size: u32,
    norm: Box<dyn Fn(u32) -> Result<ExactRatio> + Sync>,
    describe: Box<dyn Fn(u32) -> String + Sync>,
}

fn ground_of(case: &AxiomCase) -> Result<GroundNorm> {
    match case {
        AxiomCase::Counting { ground_size } => {
            let size = *ground_size;
            Ok(GroundNorm {
                size,
                norm: Box::new(|mask| Ok(ExactRatio::from_int(mask.count_ones() as i64))),
                describe: Box::new(|mask| SubsetMask(mask).to_string()),
            })
        }
        AxiomCase::Exclusion { params } => {
            let params = *params;
            Ok(GroundNorm {
                size: params.g(),
                norm: Box::new(move |mask| norm1(&params, SubsetMask(mask))),
                describe: Box::new(|mask| SubsetMask(mask).to_string()),
            })
        }
        AxiomCase::Subset { params } => {
            let params = *params;
            let x = universe_x(&params)?;
            let members: Vec<SubsetMask> = x.members().to_vec();
            let universe = params.universe();
            let describe_members = members.clone();
            Ok(GroundNorm {
                size: members.len() as u32,
                norm: Box::new(move |mask| {
                    let chosen: Vec<SubsetMask> = members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, m)| *m)
                        .collect();
                    let fam = Family::new(universe, chosen)?;
                    Ok(ExactRatio::from_int(norm2(&params, &fam)?.norm as i64))
                }),
                describe: Box::new(move |mask| describe_family(&describe_members, mask)),
            })
        }
        AxiomCase::Coloring { vertices } => {
            let universe = Universe::new(*vertices)?;
            let polygons = PolygonFamily::full(universe)?;
            let members: Vec<SubsetMask> = polygons.members().to_vec();
            let describe_members = members.clone();
            Ok(GroundNorm {
                size: members.len() as u32,
                norm: Box::new(move |mask| {
                    let chosen: Vec<SubsetMask> = members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, m)| *m)
                        .collect();
                    let fam = PolygonFamily::from_masks(universe, chosen)?;
                    Ok(ExactRatio::from_int(norm3(&fam)?.0 as i64))
                }),
                describe: Box::new(move |mask| describe_family(&describe_members, mask)),
            })
        }
        AxiomCase::Hall { points } => {
            let points = *points;
            let all: Vec<SubsetMask> = (0..1u32 << points).map(SubsetMask).collect();
            let members = all.clone();
            Ok(GroundNorm {
                size: 1 << points,
                norm: Box::new(move |mask| {
                    let chosen: Vec<SubsetMask> = members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, m)| *m)
                        .collect();
                    let set = FnSet::new(points, chosen)?;
                    Ok(ExactRatio::from_int(hall_norm4(&set)?.0 as i64))
                }),
                describe: Box::new(move |mask| format!("functions mask {mask:#x}")),
            })
        }
    }
}

fn describe_family(members: &[SubsetMask], mask: u32) -> String {
    let chosen: Vec<String> = members
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, m)| m.to_string())
        .collect();
    format!("{{{}}}", chosen.join(", "))
}

/// Runs the axiom check; exhaustive over all `B <= C` pairs when the
/// ground is small, seeded random pairs otherwise.
pub fn axiom_check(case: &AxiomCase, seed: u64, samples: u64) -> Result<AxiomReport> {
    let ground = ground_of(case)?;
    let m = ground.size;
    let full: u64 = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
    let exhaustive = m <= EXHAUSTIVE_GROUND_LIMIT;

    let mut values: Vec<Option<ExactRatio>> = if exhaustive {
        vec![None; (full as usize) + 1]
    } else {
        Vec::new()
    };
    let eval = |mask: u32, values: &mut Vec<Option<ExactRatio>>| -> Result<ExactRatio> {
        if exhaustive {
            if values[mask as usize].is_none() {
                values[mask as usize] = Some((ground.norm)(mask)?);
            }
            Ok(values[mask as usize].clone().expect("just inserted"))
        } else {
            (ground.norm)(mask)
        }
    };

    let mut monotone = true;
    let mut pairs_checked = 0u64;
    if exhaustive {
        for c in 0..=full as u32 {
            let norm_c = eval(c, &mut values)?;
            // Walk all submasks of c.
            let mut b = c;
            loop {
                if eval(b, &mut values)? > norm_c {
                    monotone = false;
                }
                pairs_checked += 1;
                if b == 0 {
                    break;
                }
                b = (b - 1) & c;
            }
            if !monotone {
                break;
            }
        }
    } else {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let c = (rng.random::<u64>() & full) as u32;
            let b = (rng.random::<u64>() as u32) & c;
            if eval(b, &mut values)? > eval(c, &mut values)? {
                monotone = false;
            }
            pairs_checked += 1;
        }
    }

    let positive_on_ground = if m > 1 {
        eval(if m >= 32 { u32::MAX } else { full as u32 }, &mut values)?.is_positive()
    } else {
        true
    };

    let one = ExactRatio::one();
    let mut singleton_bound = true;
    let mut singleton_excesses = Vec::new();
    for i in 0..m.min(32) {
        let value = eval(1 << i, &mut values)?;
        if value > one {
            singleton_bound = false;
            if singleton_excesses.len() < 4 {
                singleton_excesses
                    .push(format!("norm({}) = {}", (ground.describe)(1 << i), value));
            }
        }
    }

    Ok(AxiomReport {
        norm: case.name(),
        ground_size: m,
        pairs_checked,
        exhaustive,
        monotone,
        positive_on_ground,
        singleton_bound,
        singleton_excesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_norm_satisfies_axioms() {
        let r = axiom_check(&AxiomCase::Counting { ground_size: 4 }, 1, 0).unwrap();
        assert!(r.all_hold());
        assert!(r.exhaustive);
    }

    #[test]
    fn exclusion_norm_satisfies_axioms() {
        let params = ExclusionParams::new(2, 4).unwrap();
        let r = axiom_check(&AxiomCase::Exclusion { params }, 1, 0).unwrap();
        assert!(r.all_hold());
    }

    #[test]
    fn subset_norm_satisfies_axioms() {
        let params = SubsetNormParams::new(1, 4).unwrap();
        let r = axiom_check(&AxiomCase::Subset { params }, 1, 0).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.ground_size, 6);
    }

    #[test]
    fn coloring_norm_satisfies_axioms() {
        let r = axiom_check(&AxiomCase::Coloring { vertices: 4 }, 1, 0).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.ground_size, 11);
    }

    #[test]
    fn large_grounds_fall_back_to_sampling() {
        // C(6,3) = 20 members, past the exhaustive limit.
        let params = SubsetNormParams::new(1, 6).unwrap();
        let r = axiom_check(&AxiomCase::Subset { params }, 1, 200).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.pairs_checked, 200);
        assert!(r.all_hold());
    }

    #[test]
    fn hall_norm_fails_singleton_axiom() {
        let r = axiom_check(&AxiomCase::Hall { points: 3 }, 1, 0).unwrap();
        assert!(r.monotone);
        assert!(r.positive_on_ground);
        assert!(!r.singleton_bound);
        assert!(!r.singleton_excesses.is_empty());
        assert!(r.singleton_excesses[0].ends_with("= 2"));
    }
}
