//! Named verification suites over every module, exhaustive extremal
//! searches, and the consolidated report of divergences from the source
//! material's printed claims.
//!
//! Every suite is addressable by name, deterministic in its
//! `(name, params, seed, budget)` quadruple, and aggregates violations
//! order-independently so worker count never changes the outcome.

mod suites;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::BigCount;
use crate::exclusion::ExclusionParams;
use crate::sets::{SubsetMask, Universe};
use crate::subset_norm::SubsetNormParams;

type GroundNormFn = Box<dyn Fn(&[SubsetMask]) -> Result<u32>>;

/// Identifies one run of one suite.
#[derive(Debug, Clone)]
pub struct SuiteSpec {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub seed: u64,
    pub budget: u64,
}

impl SuiteSpec {
    pub fn new(name: &str) -> Self {
        SuiteSpec {
            name: name.to_string(),
            params: BTreeMap::new(),
            seed: 1,
            budget: 1000,
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn param(&self, key: &str, default: i64) -> i64 {
        self.params.get(key).copied().unwrap_or(default)
    }
}

/// A single failed check, rendered small enough to replay by hand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub case: String,
    pub detail: String,
}

/// A spot where computation disagrees with a printed claim. These are
/// expected findings, not failures.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Discrepancy {
    pub claim: String,
    pub instance: String,
    pub replay: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, i64>,
    pub seed: u64,
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub discrepancies: Vec<Discrepancy>,
    pub budget_exceeded: bool,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    /// One CSV row: suite, cases, violations, discrepancies, pass flag.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}\n",
            self.suite,
            self.cases,
            self.violations.len(),
            self.discrepancies.len(),
            if self.passed() { "pass" } else { "fail" }
        )
    }

    pub fn csv_header() -> &'static str {
        "suite,cases,violations,discrepancies,status\n"
    }
}

/// Raw material a suite body produces; the runner sorts and caps it.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub cases: u64,
    pub violations: Vec<Violation>,
    pub discrepancies: Vec<Discrepancy>,
}

impl Outcome {
    pub(crate) fn case(&mut self) {
        self.cases += 1;
    }

    pub(crate) fn violation(&mut self, case: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            case: case.into(),
            detail: detail.into(),
        });
    }

    pub(crate) fn check(&mut self, ok: bool, case: impl Into<String>, detail: impl Into<String>) {
        if !ok {
            self.violation(case, detail);
        }
    }

    pub(crate) fn discrepancy(
        &mut self,
        claim: impl Into<String>,
        instance: impl Into<String>,
        replay: impl Into<String>,
    ) {
        self.discrepancies.push(Discrepancy {
            claim: claim.into(),
            instance: instance.into(),
            replay: replay.into(),
        });
    }

    pub(crate) fn absorb(&mut self, other: Outcome) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self.discrepancies.extend(other.discrepancies);
    }
}

/// Deterministic per-case stream: one seed, one counter-selected stream
/// per case index, so sharded execution reproduces the sequential run.
pub(crate) fn case_rng(seed: u64, index: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

type SuiteFn = fn(&SuiteSpec) -> Result<Outcome>;

pub(crate) struct SuiteDef {
    pub name: &'static str,
    pub run: SuiteFn,
}

/// Every registered suite name, in registry order.
pub fn suite_names() -> Vec<&'static str> {
    suites::registry().iter().map(|d| d.name).collect()
}

/// Runs one named suite. Violations are reported smallest-payload
/// first; at most 16 are kept.
pub fn run_suite(spec: &SuiteSpec) -> Result<Report> {
    let def = suites::registry()
        .into_iter()
        .find(|d| d.name == spec.name)
        .ok_or_else(|| Error::usage(format!("unknown suite {:?}", spec.name)))?;
    let mut outcome = (def.run)(spec)?;
    outcome
        .violations
        .sort_by(|a, b| (a.case.len(), &a.case).cmp(&(b.case.len(), &b.case)));
    outcome.violations.truncate(16);
    outcome.discrepancies.sort();
    outcome.discrepancies.dedup();
    Ok(Report {
        suite: spec.name.clone(),
        params: spec.params.clone(),
        seed: spec.seed,
        cases: outcome.cases,
        violations: outcome.violations,
        discrepancies: outcome.discrepancies,
        budget_exceeded: false,
    })
}

/// What to optimize in an exhaustive family scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalObjective {
    /// Largest family size subject to norm at most the target.
    MaxSizeAtNormAtMost,
    /// Smallest family size subject to norm at least the target.
    MinSizeAtNormAtLeast,
}

/// Which norm's family space to scan.
#[derive(Debug, Clone)]
pub enum ExtremalDomain {
    Subset(SubsetNormParams),
    Coloring(u32),
    Hall(u32),
}

#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub value: BigCount,
    pub witness: String,
}

/// Exact optimum by full enumeration of the family space.
pub fn exhaustive_extremal(
    domain: &ExtremalDomain,
    objective: ExtremalObjective,
    target: u32,
) -> Result<ExtremalResult> {
    use crate::coloring::{norm3, PolygonFamily};
    use crate::hall::{hall_norm4, FnSet};
    use crate::sets::Family;
    use crate::subset_norm::{norm2, universe_x};

    // Ground collection and a norm evaluator over selection masks.
    let (ground, norm): (Vec<SubsetMask>, GroundNormFn) =
        match domain {
            ExtremalDomain::Subset(params) => {
                let params = *params;
                let x = universe_x(&params)?;
                (
                    x.members().to_vec(),
                    Box::new(move |chosen| {
                        let fam = Family::new(params.universe(), chosen.to_vec())?;
                        Ok(norm2(&params, &fam)?.norm)
                    }),
                )
            }
            ExtremalDomain::Coloring(vertices) => {
                let universe = Universe::new(*vertices)?;
                let all = crate::coloring::PolygonFamily::full(universe)?;
                (
                    all.members().to_vec(),
                    Box::new(move |chosen| {
                        let fam = PolygonFamily::from_masks(universe, chosen.to_vec())?;
                        Ok(norm3(&fam)?.0)
                    }),
                )
            }
            ExtremalDomain::Hall(points) => {
                let points = *points;
                let all: Vec<SubsetMask> = (0..1u32 << points).map(SubsetMask).collect();
                (
                    all,
                    Box::new(move |chosen| {
                        let set = FnSet::new(points, chosen.to_vec())?;
                        Ok(hall_norm4(&set)?.0)
                    }),
                )
            }
        };

    let m = ground.len();
    if m > 20 {
        return Err(Error::budget(format!(
            "extremal scan over 2^{m} families exceeds the enumeration budget"
        )));
    }
    let select = |mask: u32| -> Vec<SubsetMask> {
        ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, s)| *s)
            .collect()
    };
    let describe = |chosen: &[SubsetMask]| -> String {
        format!(
            "{{{}}}",
            chosen
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    };

    let mut order: Vec<u32> = (0..(1u64 << m) as u32).collect();
    order.sort_by_key(|mask| (mask.count_ones(), *mask));
    match objective {
        ExtremalObjective::MinSizeAtNormAtLeast => {
            for mask in order {
                let chosen = select(mask);
                if norm(&chosen)? >= target {
                    return Ok(ExtremalResult {
                        value: BigCount::from_u64(chosen.len() as u64),
                        witness: describe(&chosen),
                    });
                }
            }
            Err(Error::domain("no family reaches the requested norm"))
        }
        ExtremalObjective::MaxSizeAtNormAtMost => {
            let mut best: Option<(usize, String)> = None;
            for mask in order {
                let chosen = select(mask);
                if best.as_ref().is_some_and(|(b, _)| chosen.len() <= *b) {
                    continue;
                }
                if norm(&chosen)? <= target {
                    best = Some((chosen.len(), describe(&chosen)));
                }
            }
            let (size, witness) =
                best.ok_or_else(|| Error::domain("no family satisfies the norm cap"))?;
            Ok(ExtremalResult {
                value: BigCount::from_u64(size as u64),
                witness,
            })
        }
    }
}

/// The standing list of computed-vs-stated divergences, with live
/// instance values and replay commands.
pub fn discrepancy_report() -> Result<Report> {
    let mut discrepancies = Vec::new();

    // Union-bound direction for the exclusion norm.
    let params = ExclusionParams::new(2, 4)?;
    let single = SubsetMask::singleton(0);
    let check = crate::exclusion::union_bound_check(&params, single, single)?;
    discrepancies.push(Discrepancy {
        claim: "union norm is bounded below by F/Q".into(),
        instance: format!(
            "F=2 G=4 A=B={{0}}: union norm {} < bound {}; the algebra forces an upper bound",
            check.norm_union,
            check.bound.as_ref().expect("Q > 0 here").render()
        ),
        replay: "normforge verify --suite norm1.union_bound".into(),
    });

    // k-gon splitting closed form.
    let kgon = crate::coloring::kgon_analysis(4, 2)?;
    discrepancies.push(Discrepancy {
        claim: "all k-gons split by min(ceil(N/(k-1)), floor(N/k)+1) parts".into(),
        instance: format!(
            "N=4 k=2: exact splitting number {} vs stated {}; also N=7 k=3: 4 vs 3",
            kgon.exact, kgon.stated
        ),
        replay: "normforge kgon --N 4 --k 2".into(),
    });

    // Profile-avoidance claim for the weight-class map.
    let scan = crate::bridges::pstar_claim_scan(2, 1 << 16, 1)?;
    let first = scan.first.expect("the two-point scan finds violations");
    discrepancies.push(Discrepancy {
        claim: "profiles of minimal avoiding functions never embed into weight-class profiles"
            .into(),
        instance: format!(
            "N=2: {} violating sets; empty profiles embed everywhere (first offender profile {})",
            scan.violations, first.containing_profile
        ),
        replay: "normforge bridge pstar-scan --N 2 --budget 65536".into(),
    });

    // Hall norm singleton axiom.
    let report = crate::axioms::axiom_check(&crate::axioms::AxiomCase::Hall { points: 3 }, 1, 0)?;
    discrepancies.push(Discrepancy {
        claim: "the Hall norm satisfies the singleton axiom".into(),
        instance: format!(
            "N=3: {}; every singleton set scores 2",
            report
                .singleton_excesses
                .first()
                .cloned()
                .unwrap_or_default()
        ),
        replay: "normforge verify --suite hall.axioms".into(),
    });

    // Statement-vs-proof slips in the gluing and cutting propositions.
    discrepancies.push(Discrepancy {
        claim: "gluing/cutting proofs match their statements".into(),
        instance: "cut proof drops the stated 1/2 factor; glue proof names the wrong family \
                   union; both statements verify as printed"
            .into(),
        replay: "normforge verify --suite hall.cut_13b && normforge verify --suite hall.glue_13x"
            .into(),
    });

    Ok(Report {
        suite: "discrepancies".into(),
        params: BTreeMap::new(),
        seed: 0,
        cases: discrepancies.len() as u64,
        violations: Vec::new(),
        discrepancies,
        budget_exceeded: false,
    })
}
