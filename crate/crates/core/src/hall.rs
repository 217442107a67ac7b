//! Hall-type norms on sets of total 0/1 functions.
//!
//! Partial functions are (domain, ones) mask pairs. `delta(A)` collects
//! the minimal partial functions whose cylinders avoid `A`; `dset` is its
//! inverse. `hn` measures how much pairwise-disjoint domain mass every
//! subfamily supports, `HN` maximizes `hn` over refinements (computed via
//! the disjoint-restriction cover characterization), and the fourth norm
//! of a function set is `HN(delta(A))`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::BigCount;
use crate::sets::SubsetMask;

/// `delta` enumerates all 3^N partial functions.
pub const DELTA_BUDGET_BITS: u32 = 12;
/// Total-function sweeps enumerate 2^N masks.
pub const TOTAL_BUDGET_BITS: u32 = 16;
/// `hn` enumerates all subfamilies.
pub const HN_SUBSET_BUDGET: usize = 15;

fn full_mask(n: u32) -> SubsetMask {
    SubsetMask(((1u64 << n) - 1) as u32)
}

fn check_bits(n: u32, budget: u32, what: &str) -> Result<()> {
    if n > budget {
        return Err(Error::budget(format!(
            "{what} limited to {budget} points, got {n}"
        )));
    }
    Ok(())
}

/// A partial 0/1-valued function on `{0..N-1}`: the points of `domain`
/// mapped to 1 are exactly `ones`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialFn {
    domain: SubsetMask,
    ones: SubsetMask,
}

impl PartialFn {
    pub const EMPTY: PartialFn = PartialFn {
        domain: SubsetMask::EMPTY,
        ones: SubsetMask::EMPTY,
    };

    pub fn new(domain: SubsetMask, ones: SubsetMask) -> Result<Self> {
        if !ones.is_subset_of(domain) {
            return Err(Error::domain("ones positions outside the domain"));
        }
        Ok(PartialFn { domain, ones })
    }

    /// A total function on `n` points given by its ones mask.
    pub fn total(n: u32, ones: SubsetMask) -> Result<Self> {
        PartialFn::new(full_mask(n), ones)
    }

    pub fn from_pairs(pairs: &[(u32, u8)]) -> Result<Self> {
        let mut domain = SubsetMask::EMPTY;
        let mut ones = SubsetMask::EMPTY;
        for &(point, value) in pairs {
            if value > 1 {
                return Err(Error::domain(format!("value {value} not in {{0,1}}")));
            }
            if domain.contains(point) {
                return Err(Error::domain(format!("point {point} listed twice")));
            }
            domain.insert(point);
            if value == 1 {
                ones.insert(point);
            }
        }
        Ok(PartialFn { domain, ones })
    }

    pub fn domain(&self) -> SubsetMask {
        self.domain
    }

    pub fn ones(&self) -> SubsetMask {
        self.ones
    }

    /// Number of points in the domain.
    pub fn len(&self) -> u32 {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn is_total(&self, n: u32) -> bool {
        self.domain == full_mask(n)
    }

    /// Restriction of the function to the points of `z`.
    pub fn restrict(&self, z: SubsetMask) -> PartialFn {
        PartialFn {
            domain: self.domain.intersect(z),
            ones: self.ones.intersect(z),
        }
    }

    pub fn is_subfn_of(&self, other: &PartialFn) -> bool {
        self.domain.is_subset_of(other.domain) && other.ones.intersect(self.domain) == self.ones
    }

    /// Does the total function with this ones mask extend `self`?
    pub fn extended_by(&self, total_ones: SubsetMask) -> bool {
        total_ones.intersect(self.domain) == self.ones
    }
}

/// A set of total functions over `n` points, stored as sorted ones
/// masks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FnSet {
    n: u32,
    members: Vec<SubsetMask>,
}

impl FnSet {
    pub fn new(n: u32, mut members: Vec<SubsetMask>) -> Result<Self> {
        check_bits(n, TOTAL_BUDGET_BITS, "function sets")?;
        let full = full_mask(n);
        for m in &members {
            if !m.is_subset_of(full) {
                return Err(Error::domain(format!("function mask {m} outside {n} bits")));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(FnSet { n, members })
    }

    pub fn empty(n: u32) -> Self {
        FnSet {
            n,
            members: Vec::new(),
        }
    }

    /// All `2^n` total functions.
    pub fn all(n: u32) -> Result<Self> {
        check_bits(n, TOTAL_BUDGET_BITS, "function sets")?;
        Ok(FnSet {
            n,
            members: (0..=full_mask(n).0).map(SubsetMask).collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, ones: SubsetMask) -> bool {
        self.members.binary_search(&ones).is_ok()
    }

    pub fn is_subset_of(&self, other: &FnSet) -> bool {
        self.n == other.n && self.members.iter().all(|m| other.contains(*m))
    }

    pub fn union(&self, other: &FnSet) -> Result<FnSet> {
        if self.n != other.n {
            return Err(Error::domain("function set point counts differ"));
        }
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        FnSet::new(self.n, members)
    }
}

/// A deduplicated family of partial functions over `n` points, sorted by
/// (domain, ones).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FnFamily {
    n: u32,
    members: Vec<PartialFn>,
}

impl FnFamily {
    pub fn new(n: u32, mut members: Vec<PartialFn>) -> Result<Self> {
        check_bits(n, TOTAL_BUDGET_BITS, "partial function families")?;
        let full = full_mask(n);
        for m in &members {
            if !m.domain().is_subset_of(full) {
                return Err(Error::domain(format!(
                    "domain {} outside {n} points",
                    m.domain()
                )));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(FnFamily { n, members })
    }

    pub fn empty(n: u32) -> Self {
        FnFamily {
            n,
            members: Vec::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[PartialFn] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, pfn: &PartialFn) -> bool {
        self.members.binary_search(pfn).is_ok()
    }

    pub fn union(&self, other: &FnFamily) -> Result<FnFamily> {
        if self.n != other.n {
            return Err(Error::domain("family point counts differ"));
        }
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        FnFamily::new(self.n, members)
    }
}

/// `[sigma]`: every total extension of the partial function.
pub fn cylinder(n: u32, sigma: &PartialFn) -> Result<FnSet> {
    check_bits(n, TOTAL_BUDGET_BITS, "cylinders")?;
    let free = sigma.domain().complement_in_bits(n);
    let mut members = Vec::with_capacity(1 << free.len());
    // Enumerate all subsets of the free positions.
    let mut sub = 0u32;
    loop {
        members.push(sigma.ones().union(SubsetMask(sub)));
        if sub == free.0 {
            break;
        }
        sub = (sub.wrapping_sub(free.0)) & free.0;
    }
    FnSet::new(n, members)
}

/// Intersection of two cylinders: the union function when compatible,
/// `None` when the functions disagree somewhere.
pub fn cylinder_meet(a: &PartialFn, b: &PartialFn) -> Option<PartialFn> {
    let shared = a.domain().intersect(b.domain());
    if a.ones().intersect(shared) != b.ones().intersect(shared) {
        return None;
    }
    Some(PartialFn {
        domain: a.domain().union(b.domain()),
        ones: a.ones().union(b.ones()),
    })
}

/// For every domain mask, the set of patterns `f & domain` realized by
/// members of `A`. Computed by projecting from single-bit-larger domains.
fn pattern_table(a: &FnSet) -> Vec<HashSet<u32>> {
    let n = a.n();
    let size = 1usize << n;
    let mut table: Vec<HashSet<u32>> = vec![HashSet::new(); size];
    table[size - 1] = a.members().iter().map(|m| m.0).collect();
    for domain in (0..size - 1).rev() {
        let missing = (!(domain as u32) & full_mask(n).0).trailing_zeros();
        let parent = domain | (1 << missing);
        let strip = !(1u32 << missing);
        table[domain] = table[parent].iter().map(|o| o & strip).collect();
    }
    table
}

/// The minimal partial functions whose cylinders avoid `A`. Minimality
/// is checked on immediate subfunctions, which suffices because
/// cylinders shrink as domains grow.
pub fn delta(a: &FnSet) -> Result<FnFamily> {
    check_bits(a.n(), DELTA_BUDGET_BITS, "delta enumeration")?;
    let n = a.n();
    let table = pattern_table(a);
    let mut members = Vec::new();
    for domain in 0..(1u32 << n) {
        let present = &table[domain as usize];
        // Walk all value patterns over this domain.
        let mut ones = 0u32;
        loop {
            if !present.contains(&ones) {
                let minimal = SubsetMask(domain).elements().iter().all(|&p| {
                    let strip = !(1u32 << p);
                    table[(domain & strip) as usize].contains(&(ones & strip))
                });
                if minimal {
                    members.push(PartialFn {
                        domain: SubsetMask(domain),
                        ones: SubsetMask(ones),
                    });
                }
            }
            if ones == domain {
                break;
            }
            ones = (ones.wrapping_sub(domain)) & domain;
        }
    }
    FnFamily::new(n, members)
}

/// Total functions extending no member of the family.
pub fn dset(delta: &FnFamily) -> Result<FnSet> {
    check_bits(delta.n(), TOTAL_BUDGET_BITS, "dset enumeration")?;
    let mut members = Vec::new();
    for bits in 0..=full_mask(delta.n()).0 {
        let f = SubsetMask(bits);
        if delta.members().iter().all(|s| !s.extended_by(f)) {
            members.push(f);
        }
    }
    FnSet::new(delta.n(), members)
}

/// Refinement order: every member of `fine` has a subfunction in
/// `coarse`.
pub fn preceq(fine: &FnFamily, coarse: &FnFamily) -> bool {
    fine.members()
        .iter()
        .all(|sigma| coarse.members().iter().any(|rho| rho.is_subfn_of(sigma)))
}

/// `hn`: one plus the largest `k` such that every subfamily contains a
/// pairwise-disjoint-domain piece carrying domain mass `k` times the
/// subfamily size. The empty family scores `N + 1`.
pub fn hn(family: &FnFamily) -> Result<u32> {
    let n = family.n();
    let m = family.len();
    if m > HN_SUBSET_BUDGET {
        return Err(Error::budget(format!(
            "hn subset enumeration limited to {HN_SUBSET_BUDGET} members, got {m}"
        )));
    }
    if m == 0 {
        return Ok(n + 1);
    }
    let doms: Vec<SubsetMask> = family.members().iter().map(|p| p.domain()).collect();
    let conflicts: Vec<u32> = (0..m)
        .map(|i| {
            let mut c = 0u32;
            for (j, dj) in doms.iter().enumerate() {
                if !doms[i].intersect(*dj).is_empty() || i == j {
                    c |= 1 << j;
                }
            }
            c | (1 << i)
        })
        .collect();
    // best[s] = the largest total domain size of a pairwise-disjoint
    // subcollection of s.
    let mut best = vec![0u32; 1 << m];
    for s in 1usize..1 << m {
        let i = s.trailing_zeros() as usize;
        let rest = s & !(1 << i);
        let take = doms[i].len() + best[rest & !(conflicts[i] as usize)];
        best[s] = best[rest].max(take);
    }
    let mut k = n;
    for (s, mass) in best.iter().enumerate().skip(1) {
        k = k.min(mass / s.count_ones());
    }
    Ok(k + 1)
}

/// A `k`-selector: pairwise disjoint `k`-point picks from the domains,
/// one per member, in family order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selector {
    pub picks: Vec<(PartialFn, SubsetMask)>,
}

/// Backtracking search for a `k`-selector.
pub fn find_selector(family: &FnFamily, k: u32) -> Result<Option<Selector>> {
    if k == 0 {
        return Err(Error::domain("selector arity must be positive"));
    }
    if family.len() > HN_SUBSET_BUDGET {
        return Err(Error::budget("selector search limited to 15 members"));
    }

    fn rec(
        members: &[PartialFn],
        k: u32,
        used: SubsetMask,
        picks: &mut Vec<(PartialFn, SubsetMask)>,
    ) -> bool {
        let Some(sigma) = members.first() else {
            return true;
        };
        let candidates = k_subsets(sigma.domain().difference(used), k);
        for pick in candidates {
            picks.push((*sigma, pick));
            if rec(&members[1..], k, used.union(pick), picks) {
                return true;
            }
            picks.pop();
        }
        false
    }

    let mut picks = Vec::with_capacity(family.len());
    if rec(family.members(), k, SubsetMask::EMPTY, &mut picks) {
        Ok(Some(Selector { picks }))
    } else {
        Ok(None)
    }
}

/// All `k`-subsets of a mask, ascending by mask value.
fn k_subsets(mask: SubsetMask, k: u32) -> Vec<SubsetMask> {
    if k > mask.len() {
        return Vec::new();
    }
    let elems = mask.elements();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k as usize).collect();
    loop {
        out.push(SubsetMask::from_elements(
            &idx.iter().map(|&i| elems[i]).collect::<Vec<_>>(),
        ));
        // next combination
        let mut i = k as usize;
        loop {
            if i == 0 {
                out.sort_unstable();
                return out;
            }
            i -= 1;
            if idx[i] < elems.len() - (k as usize - i) {
                idx[i] += 1;
                for j in i + 1..k as usize {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The refinement certifying a Hall norm value: pairwise disjoint
/// domains of equal size `k`, covering every member of the original
/// family from below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWitness {
    pub refined: FnFamily,
    pub k: u32,
}

/// Searches for a cover of `family` by partial functions with pairwise
/// disjoint domains of size exactly `k`; each member must extend some
/// chosen function. Members may share a chosen function.
fn k_cover(family: &FnFamily, k: u32) -> Option<Vec<PartialFn>> {
    if k == 0 {
        return Some(if family.is_empty() {
            Vec::new()
        } else {
            vec![PartialFn::EMPTY]
        });
    }
    // Most constrained (smallest domain) first.
    let mut members: Vec<PartialFn> = family.members().to_vec();
    members.sort_unstable_by_key(|m| (m.len(), *m));

    fn rec(members: &[PartialFn], k: u32, used: SubsetMask, chosen: &mut Vec<PartialFn>) -> bool {
        let Some(sigma) = members.first() else {
            return true;
        };
        if chosen.iter().any(|rho| rho.is_subfn_of(sigma)) {
            return rec(&members[1..], k, used, chosen);
        }
        for pick in k_subsets(sigma.domain().difference(used), k) {
            let rho = sigma.restrict(pick);
            chosen.push(rho);
            if rec(&members[1..], k, used.union(pick), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    if rec(&members, k, SubsetMask::EMPTY, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// `HN`: the maximum of `hn` over refinements, computed as one plus the
/// largest `k` admitting a disjoint size-`k` cover.
pub fn hall_norm(family: &FnFamily) -> Result<(u32, HallWitness)> {
    let n = family.n();
    check_bits(n, DELTA_BUDGET_BITS, "Hall norm")?;
    let upper = family
        .members()
        .iter()
        .map(|m| m.len())
        .min()
        .unwrap_or(n)
        .min(n);
    for k in (0..=upper).rev() {
        if let Some(chosen) = k_cover(family, k) {
            let refined = FnFamily::new(n, chosen)?;
            return Ok((k + 1, HallWitness { refined, k }));
        }
    }
    unreachable!("the k = 0 cover always exists")
}

/// The fourth norm of a set of total functions: `HN(delta(A))`.
pub fn hall_norm4(a: &FnSet) -> Result<(u32, HallWitness)> {
    hall_norm(&delta(a)?)
}

/// Members whose domain lies inside `Z`.
pub fn restrict_delta(family: &FnFamily, z: SubsetMask) -> FnFamily {
    FnFamily {
        n: family.n(),
        members: family
            .members()
            .iter()
            .copied()
            .filter(|s| s.domain().is_subset_of(z))
            .collect(),
    }
}

/// Splits a family along `Z` by majority of each member's domain: ties
/// go left. Left members are restrictions to `Z`, right members to the
/// complement.
pub fn lr_split(family: &FnFamily, z: SubsetMask) -> Result<(FnFamily, FnFamily)> {
    let zc = z.complement_in_bits(family.n());
    let mut left = Vec::new();
    let mut right = Vec::new();
    for sigma in family.members() {
        let in_z = sigma.domain().intersect(z).len();
        let out_z = sigma.domain().intersect(zc).len();
        if in_z >= out_z {
            left.push(sigma.restrict(z));
        } else {
            right.push(sigma.restrict(zc));
        }
    }
    Ok((
        FnFamily::new(family.n(), left)?,
        FnFamily::new(family.n(), right)?,
    ))
}

/// Concatenates two function sets on disjoint point ranges: the second
/// set's points are shifted past the first universe.
pub fn glue(a1: &FnSet, a2: &FnSet) -> Result<FnSet> {
    if a1.is_empty() || a2.is_empty() {
        return Err(Error::domain("glue requires nonempty sets"));
    }
    let (v1, _) = hall_norm4(a1)?;
    let (v2, _) = hall_norm4(a2)?;
    if v1 <= 1 || v2 <= 1 {
        return Err(Error::domain("glue requires both norms above 1"));
    }
    let n = a1.n() + a2.n();
    check_bits(n, TOTAL_BUDGET_BITS, "glued sets")?;
    let mut members = Vec::with_capacity(a1.len() * a2.len());
    for f in a1.members() {
        for g in a2.members() {
            members.push(SubsetMask(f.0 | (g.0 << a1.n())));
        }
    }
    FnSet::new(n, members)
}

/// Relabels the points of `window` to `0..|window|` in ascending order.
pub fn compress_pfn(sigma: &PartialFn, window: SubsetMask) -> PartialFn {
    let mut domain = SubsetMask::EMPTY;
    let mut ones = SubsetMask::EMPTY;
    for (pos, point) in window.elements().into_iter().enumerate() {
        if sigma.domain().contains(point) {
            domain.insert(pos as u32);
            if sigma.ones().contains(point) {
                ones.insert(pos as u32);
            }
        }
    }
    PartialFn { domain, ones }
}

/// Inverse of [`compress_pfn`] for total functions over the window.
pub fn expand_total(ones_compressed: SubsetMask, window: SubsetMask) -> SubsetMask {
    let mut ones = SubsetMask::EMPTY;
    for (pos, point) in window.elements().into_iter().enumerate() {
        if ones_compressed.contains(pos as u32) {
            ones.insert(point);
        }
    }
    ones
}

/// The two halves of a cut along `Z`, each over its own compressed
/// universe.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub left: FnSet,
    pub right: FnSet,
    pub window: SubsetMask,
    /// Disjoint-domain size of the internal witness family.
    pub k: u32,
}

/// Cuts `A` along `Z` following the disjoint-witness construction: the
/// witness family splits by domain majority and each side is realized
/// as a function set over its own points. Degenerate windows yield the
/// identity cut.
pub fn cut(a: &FnSet, z: SubsetMask) -> Result<CutResult> {
    let n = a.n();
    if !z.is_subset_of(full_mask(n)) {
        return Err(Error::domain("window outside universe"));
    }
    let (value, witness) = hall_norm4(a)?;
    if value <= 1 {
        return Err(Error::domain("cut requires norm above 1"));
    }
    let zc = z.complement_in_bits(n);
    if z.is_empty() || zc.is_empty() {
        // Identity cut: one side keeps A verbatim, the other is the full
        // set over zero points.
        let everything = FnSet::new(0, vec![SubsetMask::EMPTY])?;
        let unchanged = FnSet::new(n, a.members().to_vec())?;
        let (left, right) = if zc.is_empty() {
            (unchanged, everything)
        } else {
            (everything, unchanged)
        };
        return Ok(CutResult {
            left,
            right,
            window: z,
            k: witness.k,
        });
    }
    let (l, r) = lr_split(&witness.refined, z)?;
    let left_family = FnFamily::new(
        z.len(),
        l.members().iter().map(|s| compress_pfn(s, z)).collect(),
    )?;
    let right_family = FnFamily::new(
        zc.len(),
        r.members().iter().map(|s| compress_pfn(s, zc)).collect(),
    )?;
    Ok(CutResult {
        left: dset(&left_family)?,
        right: dset(&right_family)?,
        window: z,
        k: witness.k,
    })
}

/// Outcome of the empty-right-split bound `HN(L) >= HN(delta) - N/2`,
/// tracked exactly as `2 HN(L) >= 2 HN(delta) - N`.
#[derive(Debug, Clone)]
pub struct EmptyRBound {
    pub hn_family: u32,
    pub hn_left: u32,
    pub holds: bool,
    pub equality: bool,
}

pub fn empty_r_bound_check(family: &FnFamily, z: SubsetMask) -> Result<EmptyRBound> {
    let (l, r) = lr_split(family, z)?;
    if !r.is_empty() {
        return Err(Error::domain("right split must be empty"));
    }
    let (hn_family, _) = hall_norm(family)?;
    let (hn_left, _) = hall_norm(&l)?;
    let lhs = 2 * hn_left as i64;
    let rhs = 2 * hn_family as i64 - family.n() as i64;
    Ok(EmptyRBound {
        hn_family,
        hn_left,
        holds: lhs >= rhs,
        equality: lhs == rhs,
    })
}

/// Inclusion-exclusion lower bound on the size of a set with norm
/// `k + 1`: `2^N - sum_j (-1)^(j-1) C(floor(N/k), j) 2^(N-jk)`.
pub fn hall_size_lower_bound(n: u32, k: u32) -> Result<BigCount> {
    if k == 0 || k > n {
        return Err(Error::domain("need 1 <= k <= N"));
    }
    let blocks = (n / k) as u64;
    let mut total = BigInt::from(1u64) << n;
    for j in 1..=blocks {
        let term = BigInt::from(
            crate::combinatorics::binomial(blocks, j).into_biguint()
                * (num_bigint::BigUint::from(1u64) << (n as u64 - j * k as u64)),
        );
        if j % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    if total.is_negative() {
        return Err(Error::domain("bound evaluated negative"));
    }
    Ok(BigCount::from(total.to_biguint().expect("nonnegative")))
}


pub mod codec {
    //! JSON codecs for function sets and partial-function families.

    use serde_json::{json, Map, Value};

    use super::{FnFamily, FnSet, PartialFn};
    use crate::error::{Error, Result};
    use crate::sets::SubsetMask;

    /// Parses `{"N": n, "functions": ["0110", ...]}` with index 0
    /// leftmost.
    pub fn parse_fnset(text: &str) -> Result<FnSet> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("function set: {e}")))?;
        let n = value
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse("missing integer field N"))? as u32;
        let functions = value
            .get("functions")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("missing array field functions"))?;
        let mut members = Vec::with_capacity(functions.len());
        for (i, f) in functions.iter().enumerate() {
            let s = f
                .as_str()
                .ok_or_else(|| Error::parse(format!("functions[{i}] is not a string")))?;
            if s.len() != n as usize {
                return Err(Error::parse(format!(
                    "functions[{i}] has length {} but N = {n}",
                    s.len()
                )));
            }
            let mut ones = SubsetMask::EMPTY;
            for (pos, ch) in s.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => ones.insert(pos as u32),
                    _ => {
                        return Err(Error::parse(format!(
                            "functions[{i}][{pos}]: expected 0 or 1, got {ch:?}"
                        )))
                    }
                }
            }
            members.push(ones);
        }
        FnSet::new(n, members)
    }

    pub fn fn_string(n: u32, ones: SubsetMask) -> String {
        (0..n)
            .map(|i| if ones.contains(i) { '1' } else { '0' })
            .collect()
    }

    pub fn emit_fnset(set: &FnSet) -> String {
        let functions: Vec<String> = set
            .members()
            .iter()
            .map(|m| fn_string(set.n(), *m))
            .collect();
        let mut out = json!({"N": set.n(), "functions": functions}).to_string();
        out.push('\n');
        out
    }

    /// Parses `{"N": n, "pfns": [{"0": 1, "3": 0}, ...]}`.
    pub fn parse_fnfamily(text: &str) -> Result<FnFamily> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("pfn family: {e}")))?;
        let n = value
            .get("N")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse("missing integer field N"))? as u32;
        let pfns = value
            .get("pfns")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("missing array field pfns"))?;
        let mut members = Vec::with_capacity(pfns.len());
        for (i, entry) in pfns.iter().enumerate() {
            let map = entry
                .as_object()
                .ok_or_else(|| Error::parse(format!("pfns[{i}] is not an object")))?;
            let mut pairs = Vec::with_capacity(map.len());
            for (key, val) in map {
                let point: u32 = key
                    .parse()
                    .map_err(|_| Error::parse(format!("pfns[{i}]: bad point {key:?}")))?;
                if point >= n {
                    return Err(Error::parse(format!("pfns[{i}]: point {point} >= N = {n}")));
                }
                let bit = val
                    .as_u64()
                    .filter(|v| *v <= 1)
                    .ok_or_else(|| Error::parse(format!("pfns[{i}][{key}]: value not 0/1")))?;
                pairs.push((point, bit as u8));
            }
            members.push(PartialFn::from_pairs(&pairs)?);
        }
        FnFamily::new(n, members)
    }

    pub fn emit_fnfamily(family: &FnFamily) -> String {
        let pfns: Vec<Value> = family
            .members()
            .iter()
            .map(|p| {
                let mut map = Map::new();
                for point in p.domain().elements() {
                    map.insert(
                        point.to_string(),
                        json!(if p.ones().contains(point) { 1 } else { 0 }),
                    );
                }
                Value::Object(map)
            })
            .collect();
        let mut out = json!({"N": family.n(), "pfns": pfns}).to_string();
        out.push('\n');
        out
    }
}
