//! Universes, bit-mask subsets, families of subsets, partitions and the
//! canonical JSON codec for families.
//!
//! Ground sets are always initial segments `{0..N-1}`; arbitrary ground
//! sets must be relabeled before they reach this layer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::BigCount;

/// Soft cap for exhaustive bit-mask kernels.
pub const MAX_UNIVERSE: u32 = 24;

/// A finite ground set `{0, 1, .., size-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    size: u32,
}

impl Universe {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 || size > MAX_UNIVERSE {
            return Err(Error::domain(format!(
                "universe size must be in 1..={MAX_UNIVERSE}, got {size}"
            )));
        }
        Ok(Universe { size })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Mask with every element of the universe set.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask(((1u64 << self.size) - 1) as u32)
    }

    pub fn contains(&self, element: u32) -> bool {
        element < self.size
    }

    /// All `2^N` subsets in ascending mask order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..=self.full_mask().0).map(SubsetMask)
    }

    /// All subsets of the given size, ascending mask order.
    pub fn subsets_of_size(&self, size: u32) -> Vec<SubsetMask> {
        self.subsets().filter(|m| m.len() == size).collect()
    }
}

/// A subset of a universe, stored as a bit vector. Canonical order is the
/// numeric value of the bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_elements(elements: &[u32]) -> SubsetMask {
        let mut bits = 0u32;
        for &e in elements {
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn singleton(element: u32) -> SubsetMask {
        SubsetMask(1 << element)
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, element: u32) -> bool {
        self.0 & (1 << element) != 0
    }

    pub fn is_subset_of(&self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(&self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(&self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement_in(&self, universe: Universe) -> SubsetMask {
        SubsetMask(!self.0 & universe.full_mask().0)
    }

    /// Complement within the first `n` bit positions.
    pub fn complement_in_bits(&self, n: u32) -> SubsetMask {
        SubsetMask(!self.0 & (((1u64 << n) - 1) as u32))
    }

    pub fn insert(&mut self, element: u32) {
        self.0 |= 1 << element;
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut bits = self.0;
        while bits != 0 {
            let e = bits.trailing_zeros();
            out.push(e);
            bits &= bits - 1;
        }
        out
    }

    pub fn min_element(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A deduplicated family of subsets of one universe, kept sorted by mask
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    universe: Universe,
    members: Vec<SubsetMask>,
}

impl Family {
    pub fn new(universe: Universe, mut members: Vec<SubsetMask>) -> Result<Self> {
        let full = universe.full_mask();
        for m in &members {
            if !m.is_subset_of(full) {
                return Err(Error::domain(format!(
                    "member {m} not within universe of size {}",
                    universe.size()
                )));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { universe, members })
    }

    pub fn empty(universe: Universe) -> Self {
        Family {
            universe,
            members: Vec::new(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
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

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        if self.universe != other.universe {
            return Err(Error::domain("universe mismatch in family union"));
        }
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        Family::new(self.universe, members)
    }

    /// `A restricted to z`: the members that are subsets of `z`.
    pub fn restrict(&self, z: SubsetMask) -> Result<Family> {
        if !z.is_subset_of(self.universe.full_mask()) {
            return Err(Error::domain("restriction mask outside universe"));
        }
        Ok(Family {
            universe: self.universe,
            members: self
                .members
                .iter()
                .copied()
                .filter(|a| a.is_subset_of(z))
                .collect(),
        })
    }

    /// The standard counting norm: the number of members.
    pub fn counting_norm(&self) -> BigCount {
        BigCount::from_u64(self.members.len() as u64)
    }
}

/// An ordered partition of a universe into nonempty, pairwise disjoint
/// parts. Canonical form orders parts by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    parts: Vec<SubsetMask>,
}

impl Partition {
    pub fn new(universe: Universe, mut parts: Vec<SubsetMask>) -> Result<Self> {
        let mut seen = SubsetMask::EMPTY;
        for p in &parts {
            if p.is_empty() {
                return Err(Error::domain("partition contains an empty part"));
            }
            if !seen.intersect(*p).is_empty() {
                return Err(Error::domain("partition parts overlap"));
            }
            seen = seen.union(*p);
        }
        if seen != universe.full_mask() {
            return Err(Error::domain("partition does not cover the universe"));
        }
        parts.sort_unstable_by_key(|p| p.min_element());
        Ok(Partition { universe, parts })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn parts(&self) -> &[SubsetMask] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    universe: u32,
    sets: Vec<Vec<u32>>,
}

/// Parses the family file format `{"universe": N, "sets": [[..], ..]}`.
pub fn parse_family(text: &str) -> Result<Family> {
    let raw: FamilyJson =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("family JSON: {e}")))?;
    let universe = Universe::new(raw.universe)?;
    let mut members = Vec::with_capacity(raw.sets.len());
    for (si, set) in raw.sets.iter().enumerate() {
        let mut mask = SubsetMask::EMPTY;
        for (ei, &e) in set.iter().enumerate() {
            if !universe.contains(e) {
                return Err(Error::parse(format!(
                    "sets[{si}][{ei}]: element {e} >= universe {}",
                    raw.universe
                )));
            }
            mask.insert(e);
        }
        members.push(mask);
    }
    Family::new(universe, members)
}

/// Canonical emit: sets sorted by (size, lexicographic element list),
/// elements ascending, single line, trailing LF.
pub fn emit_family(family: &Family) -> String {
    let mut sets: Vec<Vec<u32>> = family.members().iter().map(|m| m.elements()).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let raw = FamilyJson {
        universe: family.universe().size(),
        sets,
    };
    let mut out = serde_json::to_string(&raw).expect("family serialization cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u32) -> Universe {
        Universe::new(n).unwrap()
    }

    fn fam(n: u32, sets: &[&[u32]]) -> Family {
        Family::new(
            u(n),
            sets.iter().map(|s| SubsetMask::from_elements(s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn restrict_basic() {
        let a = fam(4, &[&[0, 1], &[1, 2]]);
        let r = a.restrict(SubsetMask::from_elements(&[0, 1])).unwrap();
        assert_eq!(r.members(), &[SubsetMask::from_elements(&[0, 1])]);
        assert!(a.restrict(SubsetMask::EMPTY).unwrap().is_empty());
        let b = fam(4, &[&[0, 1], &[2, 3]]);
        let r = b.restrict(SubsetMask::from_elements(&[2, 3])).unwrap();
        assert_eq!(r.members(), &[SubsetMask::from_elements(&[2, 3])]);
    }

    #[test]
    fn restrict_full_is_identity_and_composes() {
        let a = fam(4, &[&[0, 1], &[1, 2], &[0, 2, 3]]);
        assert_eq!(a.restrict(u(4).full_mask()).unwrap(), a);
        for z1 in u(4).subsets() {
            for z2 in u(4).subsets() {
                let lhs = a.restrict(z1).unwrap().restrict(z2).unwrap();
                let rhs = a.restrict(z1.intersect(z2)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn restrict_complement_drops_vertex() {
        // Restricting to the complement of {v} keeps exactly the members
        // avoiding v.
        let a = fam(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        for v in 0..4 {
            let z = SubsetMask::singleton(v).complement_in(u(4));
            let r = a.restrict(z).unwrap();
            let expect: Vec<_> = a
                .members()
                .iter()
                .copied()
                .filter(|m| !m.contains(v))
                .collect();
            assert_eq!(r.members(), expect.as_slice());
        }
    }

    #[test]
    fn counting_norm_examples() {
        assert_eq!(fam(4, &[]).counting_norm(), BigCount::zero());
        assert_eq!(fam(4, &[&[0]]).counting_norm(), BigCount::one());
        let two_subsets = Family::new(u(4), u(4).subsets_of_size(2)).unwrap();
        assert_eq!(two_subsets.counting_norm(), BigCount::from_u64(6));
    }

    #[test]
    fn codec_round_trip() {
        let text = "{\"universe\":4,\"sets\":[[0,1],[2,3]]}";
        let f = parse_family(text).unwrap();
        assert_eq!(f.len(), 2);
        let emitted = emit_family(&f);
        assert_eq!(emitted, "{\"universe\":4,\"sets\":[[0,1],[2,3]]}\n");
        assert_eq!(parse_family(&emitted).unwrap(), f);
    }

    #[test]
    fn codec_sorts_by_size_then_lex() {
        let f = fam(5, &[&[0, 1], &[2], &[0, 4], &[1, 2, 3]]);
        let emitted = emit_family(&f);
        assert_eq!(
            emitted,
            "{\"universe\":5,\"sets\":[[2],[0,1],[0,4],[1,2,3]]}\n"
        );
    }

    #[test]
    fn codec_rejects_out_of_range() {
        let err = parse_family("{\"universe\":4,\"sets\":[[0,4]]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("element 4 >= universe 4"), "got: {msg}");
    }

    #[test]
    fn partition_canonical_and_validation() {
        let p = Partition::new(
            u(4),
            vec![
                SubsetMask::from_elements(&[1, 3]),
                SubsetMask::from_elements(&[0, 2]),
            ],
        )
        .unwrap();
        assert_eq!(p.parts()[0], SubsetMask::from_elements(&[0, 2]));
        assert!(Partition::new(u(4), vec![u(4).full_mask(), SubsetMask::EMPTY]).is_err());
        assert!(Partition::new(u(4), vec![SubsetMask::from_elements(&[0, 1])]).is_err());
        assert!(Partition::new(
            u(4),
            vec![
                SubsetMask::from_elements(&[0, 1]),
                SubsetMask::from_elements(&[1, 2, 3])
            ]
        )
        .is_err());
    }
}
