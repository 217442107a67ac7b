//! The graph-coloring norm. A family of "polygons" (subsets of size at
//! least 2) is split by a partition when no member lies inside a single
//! part; the least number of parts is the splitting number, a weak
//! hypergraph chromatic number, and the norm is its ceiling log2. The
//! recursive halving definition is kept as a desk-scale oracle.

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exact::BigCount;
use crate::sets::{Family, Partition, SubsetMask, Universe};

/// Splitting searches are exponential in the vertex count.
pub const SPLIT_BUDGET_VERTICES: u32 = 16;
/// The literal recursive oracle walks all vertex subsets.
pub const ORACLE_BUDGET_VERTICES: u32 = 10;
/// Cap on the number of edge systems enumerated per family.
pub const EDGE_SYSTEM_BUDGET: u64 = 1 << 20;

/// A family whose members all have at least two elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonFamily {
    base: Family,
}

impl PolygonFamily {
    pub fn new(base: Family) -> Result<Self> {
        for m in base.members() {
            if m.len() < 2 {
                return Err(Error::domain(format!(
                    "member {m} has fewer than 2 elements"
                )));
            }
        }
        Ok(PolygonFamily { base })
    }

    pub fn empty(universe: Universe) -> Self {
        PolygonFamily {
            base: Family::empty(universe),
        }
    }

    pub fn from_masks(universe: Universe, members: Vec<SubsetMask>) -> Result<Self> {
        PolygonFamily::new(Family::new(universe, members)?)
    }

    pub fn family(&self) -> &Family {
        &self.base
    }

    pub fn universe(&self) -> Universe {
        self.base.universe()
    }

    pub fn members(&self) -> &[SubsetMask] {
        self.base.members()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn restrict(&self, z: SubsetMask) -> Result<PolygonFamily> {
        Ok(PolygonFamily {
            base: self.base.restrict(z)?,
        })
    }

    /// All members of `P_N`: subsets of the universe of size >= 2.
    pub fn full(universe: Universe) -> Result<PolygonFamily> {
        PolygonFamily::from_masks(
            universe,
            universe.subsets().filter(|m| m.len() >= 2).collect(),
        )
    }
}

/// A partition witnessing a splitting number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitWitness {
    pub partition: Partition,
    pub parts_count: u32,
}

/// Backtracking search for a partition into at most `max_parts` nonempty
/// parts leaving no member monochromatic. Part identities are
/// canonicalized by letting each vertex open at most the next fresh part.
fn find_split(a: &PolygonFamily, max_parts: u32) -> Option<Vec<u32>> {
    let n = a.universe().size();
    if max_parts == 0 {
        return None;
    }
    let members = a.members();
    let mut assignment = vec![u32::MAX; n as usize];

    fn violates(members: &[SubsetMask], assignment: &[u32], v: u32, part: u32) -> bool {
        'member: for m in members {
            if !m.contains(v) {
                continue;
            }
            for e in m.elements() {
                if e == v {
                    continue;
                }
                if assignment[e as usize] != part {
                    continue 'member;
                }
            }
            return true;
        }
        false
    }

    fn rec(
        members: &[SubsetMask],
        assignment: &mut Vec<u32>,
        v: u32,
        n: u32,
        used: u32,
        max_parts: u32,
    ) -> bool {
        if v == n {
            return true;
        }
        let limit = (used + 1).min(max_parts);
        for part in 0..limit {
            if violates(members, assignment, v, part) {
                continue;
            }
            assignment[v as usize] = part;
            if rec(members, assignment, v + 1, n, used.max(part + 1), max_parts) {
                return true;
            }
            assignment[v as usize] = u32::MAX;
        }
        false
    }

    if rec(members, &mut assignment, 0, n, 0, max_parts) {
        Some(assignment)
    } else {
        None
    }
}

fn assignment_to_partition(universe: Universe, assignment: &[u32]) -> Result<Partition> {
    let parts_used = assignment.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts = vec![SubsetMask::EMPTY; parts_used as usize];
    for (v, &p) in assignment.iter().enumerate() {
        parts[p as usize].insert(v as u32);
    }
    Partition::new(universe, parts)
}

/// The least number of parts of any partition splitting `A`, with a
/// witnessing partition. The empty family is split by the single-part
/// partition.
pub fn splitting_number(a: &PolygonFamily) -> Result<(u32, SplitWitness)> {
    let n = a.universe().size();
    if n > SPLIT_BUDGET_VERTICES {
        return Err(Error::budget(format!(
            "splitting search limited to {SPLIT_BUDGET_VERTICES} vertices, got {n}"
        )));
    }
    for c in 1..=n {
        if let Some(assignment) = find_split(a, c) {
            let partition = assignment_to_partition(a.universe(), &assignment)?;
            let parts_count = partition.len() as u32;
            return Ok((
                parts_count,
                SplitWitness {
                    partition,
                    parts_count,
                },
            ));
        }
    }
    unreachable!("the all-singletons partition splits every polygon family")
}

/// `ceil(log2(c))`: the unique `k` with `2^(k-1) < c <= 2^k`, zero for
/// `c = 1`.
pub fn ceil_log2(c: u32) -> u32 {
    debug_assert!(c >= 1);
    32 - (c - 1).leading_zeros()
}

/// The norm: `ceil(log2)` of the splitting number, with the splitting
/// witness attached.
pub fn norm3(a: &PolygonFamily) -> Result<(u32, SplitWitness)> {
    let (c, witness) = splitting_number(a)?;
    Ok((ceil_log2(c), witness))
}

/// Memoized literal evaluation of the recursive definition
/// `norm(A) >= n`.
pub struct Norm3Oracle {
    universe: Universe,
    memo: HashMap<(Vec<SubsetMask>, u32), bool>,
}

impl Norm3Oracle {
    pub fn new(universe: Universe) -> Result<Self> {
        if universe.size() > ORACLE_BUDGET_VERTICES {
            return Err(Error::budget(format!(
                "recursive oracle limited to {ORACLE_BUDGET_VERTICES} vertices"
            )));
        }
        Ok(Norm3Oracle {
            universe,
            memo: HashMap::new(),
        })
    }

    pub fn ge(&mut self, a: &PolygonFamily, n: u32) -> Result<bool> {
        if a.universe() != self.universe {
            return Err(Error::domain("oracle universe mismatch"));
        }
        Ok(self.ge_inner(a.members().to_vec(), n))
    }

    fn ge_inner(&mut self, members: Vec<SubsetMask>, n: u32) -> bool {
        if n == 0 {
            return true;
        }
        if n == 1 {
            return !members.is_empty();
        }
        let key = (members, n);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let full = self.universe.full_mask();
        let mut holds = true;
        for z_bits in 0..=full.0 {
            let z = SubsetMask(z_bits);
            let inside: Vec<_> = key
                .0
                .iter()
                .copied()
                .filter(|m| m.is_subset_of(z))
                .collect();
            let zc = z.complement_in(self.universe);
            let outside: Vec<_> = key
                .0
                .iter()
                .copied()
                .filter(|m| m.is_subset_of(zc))
                .collect();
            if !self.ge_inner(inside, n - 1) && !self.ge_inner(outside, n - 1) {
                holds = false;
                break;
            }
        }
        self.memo.insert(key, holds);
        holds
    }

    /// The norm according to the recursive definition alone.
    pub fn norm(&mut self, a: &PolygonFamily) -> Result<u32> {
        let mut n = 0;
        while self.ge(a, n + 1)? {
            n += 1;
            if n > self.universe.size() + 1 {
                return Err(Error::domain("oracle norm failed to stabilize"));
            }
        }
        Ok(n)
    }
}

/// Positional base-`N` encoding of a nonempty subset: `sum a_i * N^i`
/// over the ascending enumeration. Injective on subsets of the universe.
pub fn rank_encode(universe: Universe, a: SubsetMask) -> Result<BigCount> {
    if a.is_empty() {
        return Err(Error::domain("cannot rank-encode the empty set"));
    }
    let n = BigCount::from_u64(universe.size() as u64);
    let mut acc = BigCount::zero();
    for (i, e) in a.elements().iter().enumerate() {
        acc += &(&BigCount::from_u64(*e as u64) * &n.pow(i as u32));
    }
    Ok(acc)
}

/// A polygon-reducing function: `g(a)` is a subset of `a`, still of size
/// at least 2, and fixes exactly the edges.
#[derive(Debug, Clone)]
pub enum Reducer {
    /// Replace a polygon by its least edge (by mask value).
    LexMinEdge,
    /// Replace a polygon by its greatest edge.
    LexMaxEdge,
    /// Explicit replacement table, validated on construction.
    Table(BTreeMap<SubsetMask, SubsetMask>),
}

impl Reducer {
    pub fn table(map: BTreeMap<SubsetMask, SubsetMask>) -> Result<Reducer> {
        for (a, g) in &map {
            if !g.is_subset_of(*a) || g.len() < 2 {
                return Err(Error::domain(format!("invalid reduction {a} -> {g}")));
            }
            if (g == a) != (a.len() == 2) {
                return Err(Error::domain(format!(
                    "g(a) = a must hold exactly for edges, violated at {a}"
                )));
            }
        }
        Ok(Reducer::Table(map))
    }

    pub fn apply(&self, a: SubsetMask) -> Result<SubsetMask> {
        if a.len() == 2 {
            return Ok(a);
        }
        match self {
            Reducer::LexMinEdge => Ok(edges_of(a).into_iter().min().expect("|a| >= 2")),
            Reducer::LexMaxEdge => Ok(edges_of(a).into_iter().max().expect("|a| >= 2")),
            Reducer::Table(map) => map
                .get(&a)
                .copied()
                .ok_or_else(|| Error::domain(format!("reducer table undefined at {a}"))),
        }
    }
}

/// All 2-subsets of a mask.
pub fn edges_of(a: SubsetMask) -> Vec<SubsetMask> {
    let elems = a.elements();
    let mut out = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            out.push(SubsetMask::from_elements(&[elems[i], elems[j]]));
        }
    }
    out
}

/// One reduction step: the member with the largest rank encoding is
/// replaced by its reduction. The norm never decreases under this map.
pub fn psi_step(a: &PolygonFamily, reducer: &Reducer) -> Result<PolygonFamily> {
    if a.is_empty() {
        return Ok(a.clone());
    }
    // The encoding is injective, so the maximizer is unique.
    let top = *a
        .members()
        .iter()
        .max_by_key(|m| rank_encode(a.universe(), **m).expect("members are nonempty"))
        .expect("family is nonempty");
    let replacement = reducer.apply(top)?;
    let mut members: Vec<_> = a
        .members()
        .iter()
        .copied()
        .filter(|m| *m != top)
        .collect();
    members.push(replacement);
    PolygonFamily::from_masks(a.universe(), members)
}

/// Minimum norm over edge systems: edge sets in which every member of
/// `A` has an edge and every edge lies inside a member. The minimum is
/// attained on a per-member choice of edges, enumerated exhaustively.
pub fn edge_systems_min(a: &PolygonFamily) -> Result<(u32, PolygonFamily)> {
    if a.universe().size() > ORACLE_BUDGET_VERTICES {
        return Err(Error::budget("edge system enumeration limited to 10 vertices"));
    }
    if a.is_empty() {
        return Ok((0, PolygonFamily::empty(a.universe())));
    }
    let per_member: Vec<Vec<SubsetMask>> = a.members().iter().map(|m| edges_of(*m)).collect();
    let combos: u64 = per_member
        .iter()
        .map(|e| e.len() as u64)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .filter(|&c| c <= EDGE_SYSTEM_BUDGET)
        .ok_or_else(|| Error::budget("too many edge systems to enumerate"))?;
    let _ = combos;

    let mut best: Option<(u32, PolygonFamily)> = None;
    let mut odometer = vec![0usize; per_member.len()];
    loop {
        let chosen: Vec<SubsetMask> = odometer
            .iter()
            .enumerate()
            .map(|(i, &j)| per_member[i][j])
            .collect();
        let system = PolygonFamily::from_masks(a.universe(), chosen)?;
        let (norm, _) = norm3(&system)?;
        if best.as_ref().is_none_or(|(b, _)| norm < *b) {
            best = Some((norm, system));
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == odometer.len() {
                return Ok(best.expect("at least one system exists"));
            }
            odometer[i] += 1;
            if odometer[i] < per_member[i].len() {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

/// Comparison of the exact splitting number of the all-`k`-gon family
/// with the stated closed form.
#[derive(Debug, Clone)]
pub struct KgonAnalysis {
    pub vertices: u32,
    pub gon: u32,
    pub exact: u32,
    pub stated: u32,
    pub matches: bool,
    pub witness: SplitWitness,
}

/// Splits the family of all `k`-subsets of the universe and compares the
/// result against `min(ceil(N/(k-1)), floor(N/k) + 1)`.
pub fn kgon_analysis(n: u32, k: u32) -> Result<KgonAnalysis> {
    if !(2 <= k && k <= n) {
        return Err(Error::domain("need 2 <= k <= N"));
    }
    if n > 12 {
        return Err(Error::budget("k-gon analysis limited to 12 vertices"));
    }
    let universe = Universe::new(n)?;
    let family = PolygonFamily::from_masks(universe, universe.subsets_of_size(k))?;
    let (exact, witness) = splitting_number(&family)?;
    let stated = (n.div_ceil(k - 1)).min(n / k + 1);
    Ok(KgonAnalysis {
        vertices: n,
        gon: k,
        exact,
        stated,
        matches: exact == stated,
        witness,
    })
}

/// Size window for families of a given norm: the complete-graph lower
/// bound and the balanced-partition upper bound (exact when `2^k`
/// divides `N`, floor of the real-valued expression otherwise).
pub fn size_bounds(n: u32, k: u32) -> Result<(BigCount, BigCount)> {
    if k == 0 {
        return Err(Error::domain("need k >= 1"));
    }
    let min_size = binomial((1u64 << (k - 1)) + 1, 2);
    let parts = 1u64 << k;
    // 2^N + 2^k - 1 - 2^k * 2^(N / 2^k), exact whenever 2^k divides N.
    let max_size = if k < 32 && (n as u64).is_multiple_of(parts) {
        let with_bonus =
            BigCount::from(BigCount::from_u64(2).pow(n).into_biguint() + (parts - 1));
        let subtract = &BigCount::from_u64(parts) * &BigCount::from_u64(2).pow(n / parts as u32);
        with_bonus.checked_sub(&subtract)?
    } else {
        let real = (2f64).powi(n as i32) - (parts as f64) * (2f64).powf(n as f64 / parts as f64)
            + parts as f64
            - 1.0;
        BigCount::from_u64(real.floor().to_u64().unwrap_or(0))
    };
    Ok((min_size, max_size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u32) -> Universe {
        Universe::new(n).unwrap()
    }

    fn fam(n: u32, sets: &[&[u32]]) -> PolygonFamily {
        PolygonFamily::from_masks(
            u(n),
            sets.iter().map(|s| SubsetMask::from_elements(s)).collect(),
        )
        .unwrap()
    }

    fn triangle(n: u32) -> PolygonFamily {
        fam(n, &[&[0, 1], &[1, 2], &[2, 0]])
    }

    #[test]
    fn rejects_small_members() {
        assert!(PolygonFamily::from_masks(u(3), vec![SubsetMask::singleton(0)]).is_err());
        assert!(PolygonFamily::from_masks(u(3), vec![SubsetMask::EMPTY]).is_err());
    }

    #[test]
    fn splitting_number_examples() {
        let (c, w) = splitting_number(&triangle(3)).unwrap();
        assert_eq!(c, 3);
        assert_eq!(w.partition.len(), 3);

        let cycle = fam(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        let (c, w) = splitting_number(&cycle).unwrap();
        assert_eq!(c, 2);
        assert_eq!(
            w.partition.parts(),
            &[
                SubsetMask::from_elements(&[0, 2]),
                SubsetMask::from_elements(&[1, 3])
            ]
        );

        let (c, w) = splitting_number(&PolygonFamily::empty(u(3))).unwrap();
        assert_eq!(c, 1);
        assert_eq!(w.partition.len(), 1);
    }

    #[test]
    fn splitting_witness_actually_splits() {
        for family in [
            triangle(4),
            fam(4, &[&[0, 1, 2], &[1, 2, 3]]),
            fam(5, &[&[0, 1], &[2, 3, 4], &[1, 4]]),
        ] {
            let (c, w) = splitting_number(&family).unwrap();
            assert_eq!(w.parts_count, c);
            for part in w.partition.parts() {
                assert!(family.restrict(*part).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn norm3_small_examples() {
        assert_eq!(norm3(&fam(2, &[&[0, 1]])).unwrap().0, 1);
        assert_eq!(norm3(&triangle(3)).unwrap().0, 2);
        assert_eq!(norm3(&fam(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])).unwrap().0, 1);
        assert_eq!(norm3(&fam(3, &[&[0, 1, 2]])).unwrap().0, 1);
    }

    #[test]
    fn ceil_log2_brackets() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(9), 4);
    }

    #[test]
    fn oracle_examples() {
        let mut oracle = Norm3Oracle::new(u(2)).unwrap();
        assert!(!oracle.ge(&PolygonFamily::empty(u(2)), 1).unwrap());
        let single = fam(2, &[&[0, 1]]);
        assert!(oracle.ge(&single, 1).unwrap());
        assert!(!oracle.ge(&single, 2).unwrap());

        let mut oracle = Norm3Oracle::new(u(4)).unwrap();
        let cycle = fam(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        assert!(!oracle.ge(&cycle, 2).unwrap());
        assert_eq!(oracle.norm(&cycle).unwrap(), 1);
        assert_eq!(oracle.norm(&triangle(4)).unwrap(), 2);
    }

    #[test]
    fn rank_encode_examples() {
        let four = u(4);
        assert_eq!(
            rank_encode(four, SubsetMask::singleton(0)).unwrap(),
            BigCount::zero()
        );
        assert_eq!(
            rank_encode(four, SubsetMask::from_elements(&[1, 2])).unwrap(),
            BigCount::from_u64(9)
        );
        assert_eq!(
            rank_encode(four, SubsetMask::from_elements(&[0, 1, 2])).unwrap(),
            BigCount::from_u64(36)
        );
        assert!(rank_encode(four, SubsetMask::EMPTY).is_err());
    }

    #[test]
    fn rank_encode_injective() {
        let five = u(5);
        let mut seen = std::collections::HashSet::new();
        for m in five.subsets().skip(1) {
            assert!(seen.insert(rank_encode(five, m).unwrap()));
        }
    }

    #[test]
    fn psi_step_examples() {
        // Reducing the triangle polygon to the edge {0,2} raises the norm.
        let a = fam(3, &[&[0, 1], &[1, 2], &[0, 1, 2]]);
        let mut table = BTreeMap::new();
        table.insert(
            SubsetMask::from_elements(&[0, 1, 2]),
            SubsetMask::from_elements(&[0, 2]),
        );
        let g = Reducer::table(table).unwrap();
        let reduced = psi_step(&a, &g).unwrap();
        assert_eq!(reduced, triangle(3));
        assert_eq!(norm3(&a).unwrap().0, 1);
        assert_eq!(norm3(&reduced).unwrap().0, 2);

        let empty = PolygonFamily::empty(u(3));
        assert_eq!(psi_step(&empty, &Reducer::LexMinEdge).unwrap(), empty);

        let edge = fam(3, &[&[0, 1]]);
        assert_eq!(psi_step(&edge, &Reducer::LexMinEdge).unwrap(), edge);
    }

    #[test]
    fn reducer_table_validation() {
        let mut bad = BTreeMap::new();
        bad.insert(
            SubsetMask::from_elements(&[0, 1, 2]),
            SubsetMask::from_elements(&[0, 3]),
        );
        assert!(Reducer::table(bad).is_err());
        let mut not_proper = BTreeMap::new();
        not_proper.insert(
            SubsetMask::from_elements(&[0, 1, 2]),
            SubsetMask::from_elements(&[0, 1, 2]),
        );
        assert!(Reducer::table(not_proper).is_err());
    }

    #[test]
    fn edge_systems_examples() {
        let (n, system) = edge_systems_min(&fam(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(n, 1);
        assert_eq!(system.members(), &[SubsetMask::from_elements(&[0, 1])]);

        let (n, system) = edge_systems_min(&triangle(3)).unwrap();
        assert_eq!(n, 2);
        assert_eq!(system, triangle(3));

        let (n, system) = edge_systems_min(&PolygonFamily::empty(u(3))).unwrap();
        assert_eq!(n, 0);
        assert!(system.is_empty());
    }

    #[test]
    fn edge_system_minimum_recovers_the_norm() {
        // min over edge systems equals the norm itself, exhaustively over
        // every polygon family on 3 and 4 vertices.
        for vertices in [3u32, 4] {
            let universe = u(vertices);
            let members = PolygonFamily::full(universe).unwrap().members().to_vec();
            for mask in 0..(1u32 << members.len()) {
                let chosen: Vec<SubsetMask> = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, m)| *m)
                    .collect();
                let family = PolygonFamily::from_masks(universe, chosen).unwrap();
                let (direct, _) = norm3(&family).unwrap();
                let (via_edges, system) = edge_systems_min(&family).unwrap();
                assert_eq!(via_edges, direct, "family {mask:#x} on {vertices}");
                // The attaining system is a genuine edge system.
                for e in system.members() {
                    assert!(family.members().iter().any(|a| e.is_subset_of(*a)));
                }
                for a in family.members() {
                    assert!(system.members().iter().any(|e| e.is_subset_of(*a)));
                }
            }
        }
    }

    #[test]
    fn kgon_examples() {
        let r = kgon_analysis(6, 3).unwrap();
        assert_eq!((r.exact, r.stated, r.matches), (3, 3, true));

        let r = kgon_analysis(4, 2).unwrap();
        assert_eq!((r.exact, r.stated, r.matches), (4, 3, false));

        let r = kgon_analysis(7, 3).unwrap();
        assert_eq!((r.exact, r.stated, r.matches), (4, 3, false));
    }

    #[test]
    fn size_bounds_examples() {
        let (min1, max1) = size_bounds(4, 1).unwrap();
        assert_eq!(min1, BigCount::from_u64(1));
        assert_eq!(max1, BigCount::from_u64(9));

        let (min2, max2) = size_bounds(4, 2).unwrap();
        assert_eq!(min2, BigCount::from_u64(3));
        assert_eq!(max2, BigCount::from_u64(11));

        let (min3, _) = size_bounds(5, 3).unwrap();
        assert_eq!(min3, BigCount::from_u64(10));
    }
}
