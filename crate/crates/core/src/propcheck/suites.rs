//! Suite bodies. One function per registered suite name; each receives
//! the spec (params, seed, budget) and returns raw cases/violations.

use rand::Rng;
use rayon::prelude::*;

use super::{case_rng, ExtremalDomain, ExtremalObjective, Outcome, SuiteDef, SuiteSpec};
use crate::axioms::{axiom_check, AxiomCase};
use crate::coloring::{
    ceil_log2, kgon_analysis, norm3, psi_step, splitting_number, Norm3Oracle, PolygonFamily,
    Reducer,
};
use crate::combinatorics::{
    binomial, factorial, factorial_bounds, partial_count, verify_identity_a, verify_identity_b,
};
use crate::error::Result;
use crate::exact::{BigCount, ExactRatio};
use crate::exclusion::{norm1, partition_bounds, size_from_norm1, union_bound_check, ExclusionParams};
use crate::hall::{
    cut, delta, dset, empty_r_bound_check, expand_total, glue, hall_norm, hall_norm4, hn,
    lr_split, preceq, FnFamily, FnSet, PartialFn,
};
use crate::sets::{emit_family, parse_family, Family, SubsetMask, Universe};
use crate::subset_norm::{
    localize, norm2, ratio_upper_bound, universe_x, SubsetNormParams,
};

pub(super) fn registry() -> Vec<SuiteDef> {
    macro_rules! defs {
        ($(($name:literal, $fun:ident)),+ $(,)?) => {
            vec![$(SuiteDef { name: $name, run: $fun }),+]
        };
    }
    defs![
        ("comb.identity_a", comb_identity_a),
        ("comb.identity_b", comb_identity_b),
        ("comb.partial_count", comb_partial_count),
        ("comb.pascal", comb_pascal),
        ("comb.factorial_bounds", comb_factorial_bounds),
        ("setcore.restrict", setcore_restrict),
        ("setcore.restrict_complement", setcore_restrict_complement),
        ("setcore.codec", setcore_codec),
        ("norm1.monotone", norm1_monotone),
        ("norm1.size", norm1_size),
        ("norm1.axioms", norm1_axioms),
        ("norm1.partition", norm1_partition),
        ("norm1.union_bound", norm1_union_bound),
        ("norm2.sandwich", norm2_sandwich),
        ("norm2.localize", norm2_localize),
        ("norm2.monotone", norm2_monotone),
        ("norm2.lower_bound", norm2_lower_bound),
        ("norm2.upper_bound", norm2_upper_bound),
        ("norm2.count_identity", norm2_count_identity),
        ("norm3.monotone", norm3_monotone),
        ("norm3.oracle", norm3_oracle),
        ("norm3.threshold_chain", norm3_threshold_chain),
        ("norm3.split_product", norm3_split_product),
        ("norm3.triangle", norm3_triangle),
        ("norm3.psi_monotone", norm3_psi_monotone),
        ("norm3.vertex_deletion", norm3_vertex_deletion),
        ("norm3.star", norm3_star),
        ("norm3.extension", norm3_extension),
        ("norm3.log_bound", norm3_log_bound),
        ("coloring.kgon", coloring_kgon),
        ("hall.roundtrip", hall_roundtrip),
        ("hall.delta_minimal", hall_delta_minimal),
        ("hall.subset_lemma", hall_subset_lemma),
        ("hall.delta_order", hall_delta_order),
        ("hall.hn_antitone", hall_hn_antitone),
        ("hall.hn_oracle", hall_hn_oracle),
        ("hall.thm6.30", hall_thm6_30),
        ("hall.split_13a", hall_split_13a),
        ("hall.cut_13b", hall_cut_13b),
        ("hall.glue_13x", hall_glue_13x),
        ("hall.empty_r", hall_empty_r),
        ("hall.axioms", hall_axioms),
        ("hall.triangle_failure", hall_triangle_failure),
        ("hall.size_bound", hall_size_bound),
        ("bridge.profile_bijection", bridge_profile_bijection),
        ("bridge.subset", bridge_subset),
        ("bridge.edge_lemma", bridge_edge_lemma),
        ("bridge.pplus_bounds", bridge_pplus_bounds),
        ("bridge.no_strong_relationship", bridge_no_strong_relationship),
        ("axioms.matrix", axioms_matrix),
    ]
}

// ---------------------------------------------------------------- helpers

fn random_mask<R: Rng>(rng: &mut R, n: u32) -> SubsetMask {
    SubsetMask(rng.random::<u32>() & (((1u64 << n) - 1) as u32))
}

fn random_pfn<R: Rng>(rng: &mut R, n: u32, allow_empty: bool) -> PartialFn {
    loop {
        let domain = random_mask(rng, n);
        if domain.is_empty() && !allow_empty {
            continue;
        }
        let ones = SubsetMask(rng.random::<u32>()).intersect(domain);
        return PartialFn::new(domain, ones).expect("ones within domain");
    }
}

fn random_fnfamily<R: Rng>(rng: &mut R, n: u32, max_members: u32, allow_empty_fn: bool) -> FnFamily {
    let count = rng.random_range(0..=max_members);
    let members = (0..count)
        .map(|_| random_pfn(rng, n, allow_empty_fn))
        .collect();
    FnFamily::new(n, members).expect("members fit the point count")
}

fn random_fnset<R: Rng>(rng: &mut R, n: u32) -> FnSet {
    let members = (0..1u32 << n)
        .map(SubsetMask)
        .filter(|_| rng.random::<bool>())
        .collect();
    FnSet::new(n, members).expect("masks fit the point count")
}

fn random_family<R: Rng>(rng: &mut R, universe: Universe) -> Family {
    let members = universe.subsets().filter(|_| rng.random::<bool>()).collect();
    Family::new(universe, members).expect("masks within universe")
}

/// Shards `total` seeded cases over the worker pool; merge order is the
/// case index, so the result does not depend on the pool size.
fn run_seeded<F>(total: u64, body: F) -> Outcome
where
    F: Fn(u64) -> Outcome + Sync + Send,
{
    let mut merged = Outcome::default();
    let pieces: Vec<Outcome> = (0..total).into_par_iter().map(body).collect();
    for piece in pieces {
        merged.absorb(piece);
    }
    merged
}

/// Selection-mask indexed subset norms over the universe family.
fn norm2_table(params: &SubsetNormParams) -> Result<(Vec<SubsetMask>, Vec<u32>)> {
    let x = universe_x(params)?;
    let members = x.members().to_vec();
    let mut norms = Vec::with_capacity(1 << members.len());
    for mask in 0..(1u32 << members.len()) {
        let fam = Family::new(params.universe(), pick(&members, mask))?;
        norms.push(norm2(params, &fam)?.norm);
    }
    Ok((members, norms))
}

/// Selection-mask indexed splitting numbers and norms over all
/// polygons.
fn coloring_tables(vertices: u32) -> Result<(Vec<SubsetMask>, Vec<u32>, Vec<u32>)> {
    let universe = Universe::new(vertices)?;
    let members = PolygonFamily::full(universe)?.members().to_vec();
    let mut split = Vec::with_capacity(1 << members.len());
    let mut norms = Vec::with_capacity(1 << members.len());
    for mask in 0..(1u32 << members.len()) {
        let fam = PolygonFamily::from_masks(universe, pick(&members, mask))?;
        let (c, _) = splitting_number(&fam)?;
        split.push(c);
        norms.push(ceil_log2(c));
    }
    Ok((members, split, norms))
}

fn pick(members: &[SubsetMask], mask: u32) -> Vec<SubsetMask> {
    members
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, m)| *m)
        .collect()
}

fn fnset_of_bits(n: u32, bits: u32) -> FnSet {
    let members = (0..1u32 << n)
        .filter(|i| bits & (1 << i) != 0)
        .map(SubsetMask)
        .collect();
    FnSet::new(n, members).expect("masks fit")
}

// ----------------------------------------------------------- comb suites

fn comb_identity_a(spec: &SuiteSpec) -> Result<Outcome> {
    let max_a = spec.param("max_a", 20) as u64;
    let mut out = Outcome::default();
    for a in 1..=max_a {
        for k in 1..=a {
            for b in 1..=a {
                if k - 1 <= b && b + k <= a {
                    out.case();
                    let c = verify_identity_a(k, a, b)?;
                    out.check(
                        c.holds(),
                        format!("k={k} a={a} b={b}"),
                        format!("lhs {} != rhs {}", c.lhs, c.rhs),
                    );
                }
            }
        }
    }
    Ok(out)
}

fn comb_identity_b(spec: &SuiteSpec) -> Result<Outcome> {
    let max_a = spec.param("max_a", 20) as u64;
    let mut out = Outcome::default();
    for a in 1..=max_a {
        for k in 1..=a {
            for b in 1..=a {
                if k - 1 <= b && b + k <= a {
                    out.case();
                    let c = verify_identity_b(k, a, b)?;
                    out.check(
                        c.holds(),
                        format!("k={k} a={a} b={b}"),
                        format!("lhs {} != rhs {}", c.lhs, c.rhs),
                    );
                }
            }
        }
    }
    Ok(out)
}

fn comb_partial_count(spec: &SuiteSpec) -> Result<Outcome> {
    let max_points = spec.param("max_points", 12) as u32;
    let max_values = spec.param("max_values", 8) as u32;
    let mut out = Outcome::default();
    for n in 1..=max_points {
        for v in 1..=max_values {
            out.case();
            let (sum, closed) = partial_count(n, v);
            out.check(
                sum == closed,
                format!("N={n} n={v}"),
                format!("sum {sum} != closed form {closed}"),
            );
        }
    }
    Ok(out)
}

fn comb_pascal(spec: &SuiteSpec) -> Result<Outcome> {
    let max_c = spec.param("max_c", 64) as u64;
    let mut out = Outcome::default();
    for c in 0..=max_c {
        for d in 0..=c {
            out.case();
            let lhs = &binomial(c, d) + &binomial(c, d + 1);
            out.check(
                lhs == binomial(c + 1, d + 1),
                format!("c={c} d={d}"),
                "Pascal recurrence failed",
            );
        }
    }
    Ok(out)
}

fn comb_factorial_bounds(spec: &SuiteSpec) -> Result<Outcome> {
    let max_m = spec.param("max_m", 100) as u64;
    let mut out = Outcome::default();
    for m in 1..=max_m {
        out.case();
        let (lo, hi) = factorial_bounds(m)?;
        let exact = factorial(m).to_f64();
        out.check(
            lo <= exact * (1.0 + 1e-9) && hi >= exact * (1.0 - 1e-9),
            format!("m={m}"),
            format!("sandwich [{lo}, {hi}] misses {exact}"),
        );
    }
    Ok(out)
}

// -------------------------------------------------------- setcore suites

fn setcore_restrict(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    // Exhaustive over the full powerset family on 4 elements.
    let u4 = Universe::new(4)?;
    let all = Family::new(u4, u4.subsets().collect())?;
    for z1 in u4.subsets() {
        for z2 in u4.subsets() {
            out.case();
            let nested = all.restrict(z1)?.restrict(z2)?;
            let direct = all.restrict(z1.intersect(z2))?;
            out.check(
                nested == direct,
                format!("z1={z1} z2={z2}"),
                "restriction does not compose by intersection",
            );
        }
    }
    out.check(
        all.restrict(u4.full_mask())? == all,
        "full mask",
        "restriction to the universe must be the identity",
    );
    // Seeded random families on a larger universe.
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let u6 = Universe::new(6).expect("size ok");
        let fam = random_family(&mut rng, u6);
        let z1 = random_mask(&mut rng, 6);
        let z2 = random_mask(&mut rng, 6);
        let nested = fam
            .restrict(z1)
            .and_then(|f| f.restrict(z2))
            .expect("masks in range");
        let direct = fam.restrict(z1.intersect(z2)).expect("masks in range");
        piece.check(
            nested == direct && fam.restrict(u6.full_mask()).expect("ok") == fam,
            format!("seeded case {i}"),
            "restriction law failed",
        );
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn setcore_restrict_complement(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=6u32);
        let universe = Universe::new(n).expect("size ok");
        let fam = random_family(&mut rng, universe);
        for v in 0..n {
            let z = SubsetMask::singleton(v).complement_in(universe);
            let restricted = fam.restrict(z).expect("mask in range");
            let filtered: Vec<SubsetMask> = fam
                .members()
                .iter()
                .copied()
                .filter(|m| !m.contains(v))
                .collect();
            piece.check(
                restricted.members() == filtered.as_slice(),
                format!("case {i} v={v}"),
                "complement restriction is not the vertex filter",
            );
        }
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn setcore_codec(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(1..=8u32);
        let universe = Universe::new(n).expect("size ok");
        let fam = random_family(&mut rng, universe);
        let emitted = emit_family(&fam);
        match parse_family(&emitted) {
            Ok(back) => piece.check(
                back == fam && emit_family(&back) == emitted,
                format!("case {i}"),
                "codec round trip is not the identity",
            ),
            Err(e) => piece.violation(format!("case {i}"), format!("emit produced bad JSON: {e}")),
        }
        piece
    });
    out.absorb(merged);
    Ok(out)
}

// ---------------------------------------------------------- norm1 suites

fn exclusion_sweep(
    spec: &SuiteSpec,
    mut body: impl FnMut(&mut Outcome, &ExclusionParams) -> Result<()>,
) -> Result<Outcome> {
    let max_g = spec.param("max_g", 8) as u32;
    let mut out = Outcome::default();
    for g in 2..=max_g {
        for f in 1..g {
            let params = ExclusionParams::new(f, g)?;
            body(&mut out, &params)?;
        }
    }
    Ok(out)
}

fn norm1_monotone(spec: &SuiteSpec) -> Result<Outcome> {
    exclusion_sweep(spec, |out, params| {
        for b in params.universe().subsets() {
            let norm_b = norm1(params, b)?;
            let mut a = b.0;
            loop {
                out.case();
                out.check(
                    norm1(params, SubsetMask(a))? <= norm_b,
                    format!("F={} G={} A={} B={b}", params.f(), params.g(), SubsetMask(a)),
                    "monotonicity failed",
                );
                if a == 0 {
                    break;
                }
                a = (a - 1) & b.0;
            }
        }
        Ok(())
    })
}

fn norm1_size(spec: &SuiteSpec) -> Result<Outcome> {
    exclusion_sweep(spec, |out, params| {
        for a in params.universe().subsets() {
            out.case();
            let recovered = size_from_norm1(params, &norm1(params, a)?)?;
            out.check(
                recovered == ExactRatio::from_int(a.len() as i64),
                format!("F={} G={} A={a}", params.f(), params.g()),
                format!("size relationship returned {recovered}"),
            );
        }
        Ok(())
    })
}

fn norm1_axioms(spec: &SuiteSpec) -> Result<Outcome> {
    exclusion_sweep(spec, |out, params| {
        out.case();
        let report = axiom_check(&AxiomCase::Exclusion { params: *params }, 1, 0)?;
        out.check(
            report.all_hold(),
            format!("F={} G={}", params.f(), params.g()),
            "exclusion norm failed a norm axiom",
        );
        Ok(())
    })
}

fn norm1_partition(spec: &SuiteSpec) -> Result<Outcome> {
    let max_g = spec.param("max_g", 10) as u32;
    let mut out = Outcome::default();
    for g in 2..=max_g {
        for f in 1..g {
            let params = ExclusionParams::new(f, g)?;
            for a in params.universe().subsets() {
                out.case();
                let b = a.complement_in(params.universe());
                let r = partition_bounds(&params, a, b)?;
                out.check(
                    r.holds,
                    format!("F={f} G={g} A={a}"),
                    format!(
                        "threshold {} not between {} and {}",
                        r.threshold, r.norm_a, r.norm_b
                    ),
                );
            }
        }
    }
    Ok(out)
}

fn norm1_union_bound(spec: &SuiteSpec) -> Result<Outcome> {
    let mut stated_failures = 0u64;
    let mut sample = String::new();
    let max_g = spec.param("max_g", 8) as u32;
    let mut out = exclusion_sweep(spec, |out, params| {
        for a in params.universe().subsets() {
            for b in params.universe().subsets() {
                out.case();
                let r = union_bound_check(params, a, b)?;
                out.check(
                    r.corrected_holds,
                    format!("F={} G={} A={a} B={b}", params.f(), params.g()),
                    "corrected union bound failed",
                );
                if !r.stated_direction_holds {
                    stated_failures += 1;
                    if sample.is_empty() {
                        sample = format!(
                            "F={} G={} A={a} B={b}: union {} < bound {}",
                            params.f(),
                            params.g(),
                            r.norm_union,
                            r.bound.as_ref().expect("bound exists").render()
                        );
                    }
                }
            }
        }
        Ok(())
    })?;
    if stated_failures > 0 {
        out.discrepancy(
            "stated union bound direction (lower bound)",
            format!("{stated_failures} failing pairs up to G={max_g}; first: {sample}"),
            "normforge verify --suite norm1.union_bound",
        );
    }
    Ok(out)
}

// ---------------------------------------------------------- norm2 suites

fn norm2_sandwich(spec: &SuiteSpec) -> Result<Outcome> {
    let params = SubsetNormParams::new(1, 4)?;
    let (members, norms) = norm2_table(&params)?;
    let mut out = Outcome::default();
    let count = 1u32 << members.len();
    for a in 0..count {
        for b in 0..count {
            out.case();
            let (na, nb, nu) = (norms[a as usize], norms[b as usize], norms[(a | b) as usize]);
            out.check(
                na.max(nb) <= nu && nu <= na + nb,
                format!("n=1 G=4 A#{a:02x} B#{b:02x}"),
                format!("sandwich failed: {na}, {nb}, union {nu}"),
            );
        }
    }
    // Seeded spot checks at a larger ground set.
    let big = SubsetNormParams::new(1, 6)?;
    let x = universe_x(&big)?;
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let sel_a: Vec<SubsetMask> = x
            .members()
            .iter()
            .copied()
            .filter(|_| rng.random::<bool>())
            .collect();
        let sel_b: Vec<SubsetMask> = x
            .members()
            .iter()
            .copied()
            .filter(|_| rng.random::<bool>())
            .collect();
        let fam_a = Family::new(big.universe(), sel_a).expect("in range");
        let fam_b = Family::new(big.universe(), sel_b).expect("in range");
        let union = fam_a.union(&fam_b).expect("same universe");
        let na = norm2(&big, &fam_a).expect("budget ok").norm;
        let nb = norm2(&big, &fam_b).expect("budget ok").norm;
        let nu = norm2(&big, &union).expect("budget ok").norm;
        piece.check(
            na.max(nb) <= nu && nu <= na + nb,
            format!("n=1 G=6 case {i}"),
            format!("sandwich failed: {na}, {nb}, union {nu}"),
        );
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn norm2_localize(_spec: &SuiteSpec) -> Result<Outcome> {
    let params = SubsetNormParams::new(1, 4)?;
    let (members, norms) = norm2_table(&params)?;
    let mut out = Outcome::default();
    for mask in 0..(1u32 << members.len()) {
        let fam = Family::new(params.universe(), pick(&members, mask))?;
        for l in 0..params.g() {
            out.case();
            let local = localize(&fam, l)?;
            let local_norm = norm2(&params, &local)?.norm;
            out.check(
                local_norm + 1 >= norms[mask as usize],
                format!("A#{mask:02x} l={l}"),
                format!(
                    "localization dropped too far: {} vs {}",
                    local_norm, norms[mask as usize]
                ),
            );
        }
    }
    Ok(out)
}

fn norm2_monotone(_spec: &SuiteSpec) -> Result<Outcome> {
    let params = SubsetNormParams::new(1, 4)?;
    let (members, norms) = norm2_table(&params)?;
    let mut out = Outcome::default();
    for b in 0..(1u32 << members.len()) {
        let mut a = b;
        loop {
            out.case();
            out.check(
                norms[a as usize] <= norms[b as usize],
                format!("A#{a:02x} B#{b:02x}"),
                "inclusion monotonicity failed",
            );
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    Ok(out)
}

fn norm2_lower_bound(_spec: &SuiteSpec) -> Result<Outcome> {
    let params = SubsetNormParams::new(1, 4)?;
    let (members, norms) = norm2_table(&params)?;
    let mut out = Outcome::default();
    for k in 0..=2u32 {
        out.case();
        let min_size = (1..(1u32 << members.len()))
            .filter(|mask| norms[*mask as usize] > k)
            .map(|mask| mask.count_ones())
            .min();
        let Some(min_size) = min_size else {
            out.violation(format!("k={k}"), "no nonempty family reaches the norm");
            continue;
        };
        // ceil(C(G,k) / C(H,k))
        let gk = binomial(params.g() as u64, k as u64);
        let hk = binomial(params.h() as u64, k as u64);
        let num = gk.as_biguint();
        let den = hk.as_biguint();
        let bound = (num + den - 1u32) / den;
        out.check(
            BigCount::from_u64(min_size as u64).as_biguint() >= &bound,
            format!("k={k}"),
            format!("minimum size {min_size} below bound {bound}"),
        );
    }
    Ok(out)
}

fn norm2_upper_bound(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (n, g, k, expected) in [(1u32, 4u32, 1u32, 3u64), (1, 4, 2, 5), (2, 4, 1, 3)] {
        out.case();
        let params = SubsetNormParams::new(n, g)?;
        let (members, norms) = norm2_table(&params)?;
        let max_size = (0..(1u32 << members.len()))
            .filter(|mask| norms[*mask as usize] <= k)
            .map(|mask| mask.count_ones())
            .max()
            .unwrap_or(0) as u64;
        let bound = ratio_upper_bound(&params, k)?
            .mul(&ExactRatio::from_count(&params.universe_size()));
        out.check(
            max_size == expected && ExactRatio::from_int(max_size as i64) == bound,
            format!("n={n} G={g} k={k}"),
            format!("max size {max_size}, expected {expected}, bound {bound}"),
        );
    }
    Ok(out)
}

fn norm2_count_identity(spec: &SuiteSpec) -> Result<Outcome> {
    let max_g = spec.param("max_g", 20) as u64;
    let mut out = Outcome::default();
    for g in 1..=max_g {
        for h in 1..=g {
            for k in 1..=h {
                out.case();
                let lhs = binomial(g, h).checked_sub(&binomial(g - k, h - k))?;
                let mut rhs = BigCount::zero();
                for i in 1..=k {
                    rhs += &binomial(g - i, h - i + 1);
                }
                out.check(
                    lhs == rhs,
                    format!("G={g} H={h} k={k}"),
                    format!("count identity failed: {lhs} != {rhs}"),
                );
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------- norm3 suites

fn norm3_monotone(_spec: &SuiteSpec) -> Result<Outcome> {
    let (members, _, norms) = coloring_tables(4)?;
    let mut out = Outcome::default();
    for b in 0..(1u32 << members.len()) {
        let mut a = b;
        loop {
            out.case();
            out.check(
                norms[a as usize] <= norms[b as usize],
                format!("A#{a:03x} B#{b:03x}"),
                "inclusion monotonicity failed",
            );
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    Ok(out)
}

fn norm3_oracle(_spec: &SuiteSpec) -> Result<Outcome> {
    let universe = Universe::new(4)?;
    let (members, _, norms) = coloring_tables(4)?;
    let mut oracle = Norm3Oracle::new(universe)?;
    let mut out = Outcome::default();
    for mask in 0..(1u32 << members.len()) {
        out.case();
        let fam = PolygonFamily::from_masks(universe, pick(&members, mask))?;
        let recursive = oracle.norm(&fam)?;
        out.check(
            recursive == norms[mask as usize],
            format!("A#{mask:03x}"),
            format!(
                "recursive norm {recursive} != splitting norm {}",
                norms[mask as usize]
            ),
        );
    }
    Ok(out)
}

fn norm3_threshold_chain(_spec: &SuiteSpec) -> Result<Outcome> {
    let universe = Universe::new(4)?;
    let (members, _, _) = coloring_tables(4)?;
    let mut oracle = Norm3Oracle::new(universe)?;
    let mut out = Outcome::default();
    for mask in 0..(1u32 << members.len()) {
        let fam = PolygonFamily::from_masks(universe, pick(&members, mask))?;
        for n in 1..=3u32 {
            out.case();
            let above = oracle.ge(&fam, n + 1)?;
            let below = oracle.ge(&fam, n)?;
            out.check(
                !above || below,
                format!("A#{mask:03x} n={n}"),
                "threshold chain broken",
            );
        }
    }
    Ok(out)
}

fn norm3_split_product(_spec: &SuiteSpec) -> Result<Outcome> {
    let (members, split, _) = coloring_tables(4)?;
    let mut out = Outcome::default();
    let count = 1u32 << members.len();
    for a in 0..count {
        for b in 0..count {
            out.case();
            out.check(
                split[(a | b) as usize] <= split[a as usize] * split[b as usize],
                format!("A#{a:03x} B#{b:03x}"),
                "product bound on splitting failed",
            );
        }
    }
    // Rook construction: blocks {0,1} and {2,3} at four vertices.
    let universe = Universe::new(4)?;
    let cross = PolygonFamily::from_masks(
        universe,
        vec![
            SubsetMask::from_elements(&[0, 2]),
            SubsetMask::from_elements(&[0, 3]),
            SubsetMask::from_elements(&[1, 2]),
            SubsetMask::from_elements(&[1, 3]),
        ],
    )?;
    let within = PolygonFamily::from_masks(
        universe,
        vec![
            SubsetMask::from_elements(&[0, 1]),
            SubsetMask::from_elements(&[2, 3]),
        ],
    )?;
    let both = PolygonFamily::new(cross.family().union(within.family())?)?;
    out.case();
    let (ca, _) = splitting_number(&cross)?;
    let (cb, _) = splitting_number(&within)?;
    let (cu, _) = splitting_number(&both)?;
    out.check(
        (ca, cb, cu) == (2, 2, 4),
        "rook construction",
        format!("expected (2, 2, 4), got ({ca}, {cb}, {cu})"),
    );
    Ok(out)
}

fn norm3_triangle(_spec: &SuiteSpec) -> Result<Outcome> {
    let (members, _, norms) = coloring_tables(4)?;
    let mut out = Outcome::default();
    let count = 1u32 << members.len();
    for a in 0..count {
        for b in 0..count {
            out.case();
            out.check(
                norms[(a | b) as usize] <= norms[a as usize] + norms[b as usize],
                format!("A#{a:03x} B#{b:03x}"),
                "triangle inequality failed",
            );
        }
    }
    Ok(out)
}

fn norm3_psi_monotone(_spec: &SuiteSpec) -> Result<Outcome> {
    let universe = Universe::new(4)?;
    let (members, _, norms) = coloring_tables(4)?;
    let mut out = Outcome::default();
    for mask in 0..(1u32 << members.len()) {
        let fam = PolygonFamily::from_masks(universe, pick(&members, mask))?;
        for reducer in [Reducer::LexMinEdge, Reducer::LexMaxEdge] {
            out.case();
            let reduced = psi_step(&fam, &reducer)?;
            let (after, _) = norm3(&reduced)?;
            out.check(
                norms[mask as usize] <= after,
                format!("A#{mask:03x} {reducer:?}"),
                format!("norm dropped from {} to {after}", norms[mask as usize]),
            );
        }
    }
    Ok(out)
}

fn norm3_vertex_deletion(_spec: &SuiteSpec) -> Result<Outcome> {
    let (members, _, norms) = coloring_tables(4)?;
    let mut out = Outcome::default();
    // Per-vertex mask of the member indices avoiding that vertex.
    let keep: Vec<u32> = (0..4)
        .map(|v| {
            members
                .iter()
                .enumerate()
                .filter(|(_, m)| !m.contains(v))
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    for mask in 0..(1u32 << members.len()) {
        for v in 0..4u32 {
            out.case();
            let deleted = mask & keep[v as usize];
            out.check(
                norms[deleted as usize] + 1 >= norms[mask as usize],
                format!("A#{mask:03x} v={v}"),
                "vertex deletion dropped the norm by more than one",
            );
        }
    }
    Ok(out)
}

fn norm3_star(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 6) as u32;
    let mut out = Outcome::default();
    for n in 2..=max_n {
        let universe = Universe::new(n)?;
        for v in 0..n {
            out.case();
            let star = PolygonFamily::from_masks(
                universe,
                universe
                    .subsets()
                    .filter(|m| m.len() >= 2 && m.contains(v))
                    .collect(),
            )?;
            let (value, _) = norm3(&star)?;
            out.check(
                value == 1,
                format!("N={n} v={v}"),
                format!("star family norm {value}"),
            );
        }
    }
    Ok(out)
}

fn norm3_extension(_spec: &SuiteSpec) -> Result<Outcome> {
    let (members, _, norms) = coloring_tables(4)?;
    let bigger = Universe::new(5)?;
    let mut out = Outcome::default();
    for mask in 0..(1u32 << members.len()) {
        out.case();
        let fam = PolygonFamily::from_masks(bigger, pick(&members, mask))?;
        let (value, _) = norm3(&fam)?;
        out.check(
            value == norms[mask as usize],
            format!("A#{mask:03x}"),
            format!(
                "embedding changed the norm: {} vs {value}",
                norms[mask as usize]
            ),
        );
    }
    Ok(out)
}

fn norm3_log_bound(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in [3u32, 4] {
        let (members, split, norms) = coloring_tables(n)?;
        let cap = ceil_log2(n);
        for mask in 0..(1u32 << members.len()) {
            out.case();
            out.check(
                norms[mask as usize] <= cap && split[mask as usize] <= n,
                format!("N={n} A#{mask:03x}"),
                format!("norm {} above cap {cap}", norms[mask as usize]),
            );
        }
    }
    Ok(out)
}

fn coloring_kgon(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 10) as u32;
    let mut out = Outcome::default();
    for n in 2..=max_n {
        for k in 2..=n {
            out.case();
            let r = kgon_analysis(n, k)?;
            let oracle = n.div_ceil(k - 1);
            out.check(
                r.exact == oracle,
                format!("N={n} k={k}"),
                format!("exact {} != part-size oracle {oracle}", r.exact),
            );
            if !r.matches {
                out.discrepancy(
                    "k-gon splitting closed form",
                    format!("N={n} k={k}: exact {} vs stated {}", r.exact, r.stated),
                    format!("normforge kgon --N {n} --k {k}"),
                );
            }
        }
    }
    Ok(out)
}

// ----------------------------------------------------------- hall suites

fn hall_roundtrip(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for bits in 0u32..256 {
        out.case();
        let a = fnset_of_bits(3, bits);
        let back = dset(&delta(&a)?)?;
        out.check(
            back == a,
            format!("A bits {bits:#04x}"),
            "round trip through delta and dset failed",
        );
    }
    Ok(out)
}

fn hall_delta_minimal(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for bits in 0u32..256 {
        out.case();
        let a = fnset_of_bits(3, bits);
        let d = delta(&a)?;
        for sigma in d.members() {
            let avoid = a.members().iter().all(|f| !sigma.extended_by(*f));
            // Every proper subfunction must meet A, not just the
            // immediate ones the implementation checks.
            let mut all_proper_meet = true;
            let dom = sigma.domain().0;
            let mut sub = dom;
            loop {
                sub = sub.wrapping_sub(1) & dom;
                if sub == dom {
                    break;
                }
                let rho = sigma.restrict(SubsetMask(sub));
                if a.members().iter().all(|f| !rho.extended_by(*f)) {
                    all_proper_meet = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
            }
            out.check(
                avoid && all_proper_meet,
                format!("A bits {bits:#04x}"),
                "a reported member is not minimal avoiding",
            );
        }
    }
    Ok(out)
}

fn hall_subset_lemma(spec: &SuiteSpec) -> Result<Outcome> {
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(3..=6u32);
        let a = random_fnset(&mut rng, n);
        let sigma = random_pfn(&mut rng, n, true);
        let avoids = a.members().iter().all(|f| !sigma.extended_by(*f));
        if avoids {
            let d = delta(&a).expect("within budget");
            let found = d.members().iter().any(|rho| rho.is_subfn_of(&sigma));
            piece.check(
                found,
                format!("case {i} n={n}"),
                "no minimal subfunction below an avoiding function",
            );
        }
        piece
    });
    Ok(merged)
}

fn hall_delta_order(_spec: &SuiteSpec) -> Result<Outcome> {
    let n = 3;
    let mut out = Outcome::default();
    let deltas: Vec<FnFamily> = (0u32..256)
        .map(|bits| delta(&fnset_of_bits(n, bits)).expect("within budget"))
        .collect();
    // Injectivity.
    for x in 0..256usize {
        for y in x + 1..256 {
            out.case();
            out.check(
                deltas[x] != deltas[y],
                format!("bits {x:#04x} vs {y:#04x}"),
                "distinct sets share a minimal family",
            );
        }
    }
    // Adding a function refines the family; inclusion matches the order.
    for bits in 0u32..256 {
        for f in 0..8u32 {
            out.case();
            let with = bits | (1 << f);
            out.check(
                preceq(&deltas[with as usize], &deltas[bits as usize]),
                format!("bits {bits:#04x} +f{f}"),
                "adding a function does not refine",
            );
        }
    }
    for x in 0u32..256 {
        for y in 0u32..256 {
            out.case();
            let subset = x & y == x;
            let refines = preceq(&deltas[y as usize], &deltas[x as usize]);
            out.check(
                subset == refines,
                format!("bits {x:#04x} vs {y:#04x}"),
                "inclusion does not match the refinement order",
            );
        }
    }
    Ok(out)
}

fn hall_hn_antitone(spec: &SuiteSpec) -> Result<Outcome> {
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=6u32);
        let family = random_fnfamily(&mut rng, n, 8, true);
        let m = family.len();
        let mut values = vec![0u32; 1 << m];
        for s in 0..(1u32 << m) {
            let sub = FnFamily::new(
                n,
                family
                    .members()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| s & (1 << j) != 0)
                    .map(|(_, p)| *p)
                    .collect(),
            )
            .expect("members ok");
            values[s as usize] = hn(&sub).expect("within budget");
        }
        for sup in 0..(1u32 << m) {
            let mut sub = sup;
            loop {
                if values[sup as usize] > values[sub as usize] {
                    piece.violation(
                        format!("case {i} sub {sub:#x} sup {sup:#x}"),
                        "hn grew under inclusion",
                    );
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & sup;
            }
        }
        piece
    });
    Ok(merged)
}

/// Independent refinement oracle: enumerate all per-member subfunction
/// choices, dedup each image, and maximize hn over them. Junk members
/// never help because hn is antitone under inclusion.
fn hn_refinement_oracle(family: &FnFamily) -> Result<u32> {
    if family.is_empty() {
        return hn(family);
    }
    let options: Vec<Vec<PartialFn>> = family
        .members()
        .iter()
        .map(|sigma| {
            let dom = sigma.domain().0;
            let mut subs = Vec::new();
            let mut d = 0u32;
            loop {
                subs.push(sigma.restrict(SubsetMask(d)));
                if d == dom {
                    break;
                }
                d = (d.wrapping_sub(dom)) & dom;
            }
            subs
        })
        .collect();
    let mut best = 0u32;
    let mut odometer = vec![0usize; options.len()];
    loop {
        let image = FnFamily::new(
            family.n(),
            odometer
                .iter()
                .enumerate()
                .map(|(i, &j)| options[i][j])
                .collect(),
        )?;
        best = best.max(hn(&image)?);
        let mut i = 0;
        loop {
            if i == odometer.len() {
                return Ok(best);
            }
            odometer[i] += 1;
            if odometer[i] < options[i].len() {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

fn hall_hn_oracle(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    // Worked fixed case: the flipped singletons of a total function.
    let d = delta(&fnset_of_bits(4, 1 << 0b0000))?;
    out.case();
    let (value, _) = hall_norm(&d)?;
    out.check(
        value == hn_refinement_oracle(&d)?,
        "flipped singletons",
        "implementation disagrees with the refinement oracle",
    );
    let cases = spec.budget.min(300);
    let merged = run_seeded(cases, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = 4;
        let count = rng.random_range(1..=3u32);
        let members = (0..count).map(|_| random_pfn(&mut rng, n, true)).collect();
        let family = FnFamily::new(n, members).expect("members ok");
        let (value, _) = hall_norm(&family).expect("within budget");
        let oracle = hn_refinement_oracle(&family).expect("within budget");
        piece.check(
            value == oracle,
            format!("case {i}"),
            format!("HN {value} != refinement oracle {oracle}"),
        );
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn hall_thm6_30(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 8) as u32;
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=max_n);
        let family = random_fnfamily(&mut rng, n, 5, false);
        let z = random_mask(&mut rng, n);
        let (l, r) = lr_split(&family, z).expect("split ok");
        let (hl, _) = hall_norm(&l).expect("within budget");
        let (hr, _) = hall_norm(&r).expect("within budget");
        let union = l.union(&r).expect("same points");
        let (hu, _) = hall_norm(&union).expect("within budget");
        piece.check(
            hu == hl.min(hr),
            format!("case {i} n={n} Z={z}"),
            format!("HN(L u R) = {hu}, HN(L) = {hl}, HN(R) = {hr}"),
        );
        piece
    });
    Ok(merged)
}

fn hall_split_13a(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 8) as u32;
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=max_n);
        let family = random_fnfamily(&mut rng, n, 6, false);
        let value = hn(&family).expect("within budget");
        if value <= 1 {
            return piece;
        }
        let z = random_mask(&mut rng, n);
        let (l, r) = lr_split(&family, z).expect("split ok");
        let hl = hn(&l).expect("within budget");
        let hr = hn(&r).expect("within budget");
        piece.check(
            2 * hl >= value && 2 * hr >= value,
            format!("case {i} n={n} Z={z}"),
            format!("half bound failed: hn={value}, left {hl}, right {hr}"),
        );
        piece
    });
    Ok(merged)
}

fn hall_cut_13b(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 8) as u32;
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=max_n);
        let a = random_fnset(&mut rng, n);
        if a.is_empty() {
            return piece;
        }
        let z = random_mask(&mut rng, n);
        let result = cut(&a, z).expect("norm above 1 for nonempty sets");
        let zc = z.complement_in_bits(n);
        for g in result.left.members() {
            for h in result.right.members() {
                let f = expand_total(*g, z).union(expand_total(*h, zc));
                if !a.contains(f) {
                    piece.violation(
                        format!("case {i} n={n} Z={z}"),
                        "cut box escapes the original set",
                    );
                    return piece;
                }
            }
        }
        if !z.is_empty() && !zc.is_empty() {
            let (value, _) = hall_norm4(&a).expect("within budget");
            let (vl, _) = hall_norm4(&result.left).expect("within budget");
            let (vr, _) = hall_norm4(&result.right).expect("within budget");
            piece.check(
                2 * vl >= value && 2 * vr >= value,
                format!("case {i} n={n} Z={z}"),
                format!("half norms {vl}/{vr} under value {value}"),
            );
        }
        piece
    });
    Ok(merged)
}

fn hall_glue_13x(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for bits1 in 1u32..16 {
        for bits2 in 1u32..16 {
            out.case();
            let a1 = fnset_of_bits(2, bits1);
            let a2 = fnset_of_bits(2, bits2);
            let (v1, _) = hall_norm4(&a1)?;
            let (v2, _) = hall_norm4(&a2)?;
            let glued = glue(&a1, &a2)?;
            let (v, _) = hall_norm4(&glued)?;
            out.check(
                v >= v1.min(v2),
                format!("A1 bits {bits1:#x} A2 bits {bits2:#x}"),
                format!("glued norm {v} below min({v1}, {v2})"),
            );
        }
    }
    Ok(out)
}

fn hall_empty_r(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    // Extremal equality case 1: a single total function, |Z| = N/2.
    for n in [4u32, 6, 8] {
        out.case();
        let f = PartialFn::total(n, SubsetMask(0b0101 & (((1u64 << n) - 1) as u32)))?;
        let family = FnFamily::new(n, vec![f])?;
        let z = SubsetMask(((1u64 << (n / 2)) - 1) as u32);
        let r = empty_r_bound_check(&family, z)?;
        out.check(
            r.holds && r.equality,
            format!("total function n={n}"),
            format!("expected equality, HN = {} and HN(L) = {}", r.hn_family, r.hn_left),
        );
    }
    // Extremal equality case 2: the cone over a total function is the
    // singleton family of that function.
    out.case();
    let rho = PartialFn::total(6, SubsetMask(0b110011))?;
    let cone = FnFamily::new(6, vec![rho])?;
    let r = empty_r_bound_check(&cone, SubsetMask(0b000111))?;
    out.check(
        r.holds && r.equality,
        "cone over a total function",
        "expected equality in the cone case",
    );
    // Seeded majority-inside families.
    let max_n = spec.param("max_n", 8) as u32;
    let merged = run_seeded(spec.budget, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(2..=max_n);
        let z = loop {
            let z = random_mask(&mut rng, n);
            if !z.is_empty() {
                break z;
            }
        };
        let count = rng.random_range(1..=5u32);
        let mut members = Vec::new();
        for _ in 0..count {
            let sigma = random_pfn(&mut rng, n, false);
            let inside = sigma.domain().intersect(z).len();
            let outside = sigma.len() - inside;
            if inside >= outside {
                members.push(sigma);
            } else {
                // Force the majority into the window.
                members.push(sigma.restrict(z));
            }
        }
        let members: Vec<PartialFn> = members.into_iter().filter(|m| !m.is_empty()).collect();
        if members.is_empty() {
            return piece;
        }
        let family = FnFamily::new(n, members).expect("members ok");
        let r = empty_r_bound_check(&family, z).expect("right split empty by construction");
        piece.check(
            r.holds,
            format!("case {i} n={n} Z={z}"),
            format!("bound failed: HN = {}, HN(L) = {}", r.hn_family, r.hn_left),
        );
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn hall_axioms(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    out.case();
    let report = axiom_check(&AxiomCase::Hall { points: 3 }, 1, 0)?;
    out.check(
        report.monotone && report.positive_on_ground,
        "N=3",
        "monotonicity or positivity failed",
    );
    if report.singleton_bound {
        out.violation("N=3", "singleton axiom unexpectedly holds");
    } else {
        out.discrepancy(
            "the Hall norm satisfies the singleton axiom",
            report
                .singleton_excesses
                .first()
                .cloned()
                .unwrap_or_default(),
            "normforge verify --suite hall.axioms",
        );
    }
    Ok(out)
}

fn hall_triangle_failure(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in 2..=4u32 {
        out.case();
        let a = dset(&FnFamily::new(n, vec![PartialFn::from_pairs(&[(0, 0)])?])?)?;
        let b = dset(&FnFamily::new(n, vec![PartialFn::from_pairs(&[(0, 1)])?])?)?;
        let (va, _) = hall_norm4(&a)?;
        let (vb, _) = hall_norm4(&b)?;
        let union = a.union(&b)?;
        let (vu, _) = hall_norm4(&union)?;
        out.check(
            va == 2 && vb == 2 && union == FnSet::all(n)? && vu == n + 1,
            format!("n={n}"),
            format!("expected (2, 2, {}), got ({va}, {vb}, {vu})", n + 1),
        );
    }
    Ok(out)
}

fn hall_size_bound(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    let n = 3u32;
    for k in 1..=3u32 {
        out.case();
        let bound = crate::hall::hall_size_lower_bound(n, k)?;
        let found = super::exhaustive_extremal(
            &ExtremalDomain::Hall(n),
            ExtremalObjective::MinSizeAtNormAtLeast,
            k + 1,
        )?;
        out.check(
            found.value >= bound,
            format!("N={n} k={k}"),
            format!("minimum size {} below bound {bound}", found.value),
        );
    }
    Ok(out)
}

// --------------------------------------------------------- bridge suites

fn bridge_profile_bijection(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 6) as u32;
    let mut out = Outcome::default();
    for n in 1..=max_n {
        for bits in 0..1u32 << n {
            out.case();
            let p = SubsetMask(bits);
            let f = crate::bridges::profile_inverse(n, p)?;
            out.check(
                crate::bridges::profile(&f) == p && f.is_total(n),
                format!("n={n} p={p}"),
                "profile map failed to invert",
            );
        }
    }
    Ok(out)
}

fn bridge_subset(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    let universe = Universe::new(4)?;
    let two_subsets = universe.subsets_of_size(2);
    for mask in 0..(1u32 << two_subsets.len()) {
        out.case();
        let b = Family::new(universe, pick(&two_subsets, mask))?;
        let r = crate::bridges::subset_bridge_check(1, 4, &b)?;
        out.check(
            r.holds,
            format!("B#{mask:02x}"),
            format!("bridge bound failed: {} vs {}", r.hall_norm, r.subset_norm),
        );
    }
    Ok(out)
}

fn bridge_edge_lemma(spec: &SuiteSpec) -> Result<Outcome> {
    let max_n = spec.param("max_n", 5) as u32;
    let mut out = Outcome::default();
    for n in 2..=max_n {
        for dom_bits in 0..1u32 << n {
            let dom = SubsetMask(dom_bits);
            if dom.len() < 2 {
                continue;
            }
            let mut ones = 0u32;
            loop {
                out.case();
                let sigma = PartialFn::new(dom, SubsetMask(ones))?;
                let d = dset(&FnFamily::new(n, vec![sigma])?)?;
                let plus = crate::bridges::pplus(&d)?;
                for e in crate::coloring::edges_of(dom) {
                    if e != crate::bridges::profile(&sigma)
                        && !plus.members().contains(&e)
                    {
                        out.violation(
                            format!("n={n} dom={dom} ones={ones:#x}"),
                            format!("edge {e} missing from the profile family"),
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
    Ok(out)
}

fn pplus_case(out: &mut Outcome, label: &str, a: &FnSet) -> Result<()> {
    let r = crate::bridges::pplus_bounds_check(a)?;
    out.check(
        r.single_sigma_bound_holds
            && r.no_superset_bound_holds
            && r.max_profile_safe_bound_holds,
        label.to_string(),
        "a profile bound failed",
    );
    if r.midline_bound_holds == Some(false) {
        out.discrepancy(
            "norm at least N/2+1 forces k split parts",
            "two balanced blocks split by two parts regardless of the norm",
            "normforge verify --suite bridge.pplus_bounds",
        );
    }
    if r.empty_profile_claim_holds == Some(false) {
        out.discrepancy(
            "sets without weight-2 profiles have norm 1",
            "every nonempty set has norm at least 2; the empty-profile case caps at 2",
            "normforge verify --suite bridge.pplus_bounds",
        );
    }
    if !r.max_profile_bound_holds {
        out.discrepancy(
            "norm at most the largest profile size plus one",
            "complements of single functions reach norm N+1 with profiles of size N-1",
            "normforge verify --suite bridge.pplus_bounds",
        );
    }
    Ok(())
}

fn bridge_pplus_bounds(spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    // Exhaustive over small sets of four-point functions.
    for bits in 0u32..(1 << 16) {
        if bits.count_ones() > 4 {
            continue;
        }
        out.case();
        let a = fnset_of_bits(4, bits);
        pplus_case(&mut out, &format!("A bits {bits:#06x}"), &a)?;
    }
    // The known edge cases of the printed claims.
    out.case();
    pplus_case(&mut out, "all-zeros singleton", &fnset_of_bits(4, 1))?;
    out.case();
    let all_but_ones = FnSet::new(
        3,
        (0..7u32).map(SubsetMask).collect(),
    )?;
    pplus_case(&mut out, "complement of the ones function", &all_but_ones)?;
    // Seeded larger draws.
    let cases = spec.budget.min(200);
    let merged = run_seeded(cases, |i| {
        let mut rng = case_rng(spec.seed, i);
        let mut piece = Outcome::default();
        piece.case();
        let n = rng.random_range(4..=6u32);
        let a = random_fnset(&mut rng, n);
        pplus_case(&mut piece, &format!("case {i} n={n}"), &a).expect("within budget");
        piece
    });
    out.absorb(merged);
    Ok(out)
}

fn bridge_no_strong_relationship(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    // Large splitting requirement, small Hall norm: the weight-2 class.
    out.case();
    let n = 4u32;
    let weight2 = FnSet::new(
        n,
        (0..1u32 << n).map(SubsetMask).filter(|m| m.len() == 2).collect(),
    )?;
    let (hall, _) = hall_norm4(&weight2)?;
    let plus = crate::bridges::pplus(&weight2)?;
    let (split, _) = splitting_number(&plus)?;
    out.check(
        hall == 2 && split == 4,
        "weight-2 class",
        format!("expected hall 2 and splitting 4, got {hall} and {split}"),
    );
    // Large Hall norm, profiles split by two parts: two all-zero blocks.
    out.case();
    let blocks = FnFamily::new(
        n,
        vec![
            PartialFn::from_pairs(&[(0, 0), (1, 0)])?,
            PartialFn::from_pairs(&[(2, 0), (3, 0)])?,
        ],
    )?;
    let a = dset(&blocks)?;
    let (hall, _) = hall_norm4(&a)?;
    let plus = crate::bridges::pplus(&a)?;
    let (split, _) = splitting_number(&plus)?;
    out.check(
        hall == n / 2 + 1 && split == 2,
        "two-block complement",
        format!("expected hall {} and splitting 2, got {hall} and {split}", n / 2 + 1),
    );
    Ok(out)
}

// ----------------------------------------------------------- axiom matrix

fn axioms_matrix(_spec: &SuiteSpec) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cases = [
        AxiomCase::Counting { ground_size: 4 },
        AxiomCase::Exclusion {
            params: ExclusionParams::new(2, 4)?,
        },
        AxiomCase::Subset {
            params: SubsetNormParams::new(1, 4)?,
        },
        AxiomCase::Subset {
            params: SubsetNormParams::new(2, 4)?,
        },
        AxiomCase::Coloring { vertices: 4 },
    ];
    for case in cases {
        out.case();
        let report = axiom_check(&case, 1, 0)?;
        out.check(
            report.all_hold(),
            report.norm,
            "a norm axiom failed on its exhaustive domain",
        );
    }
    // The Hall norm keeps monotonicity and positivity but breaks the
    // singleton bound; that is a finding, not a failure.
    out.absorb(hall_axioms(_spec)?);
    Ok(out)
}
