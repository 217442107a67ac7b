//! Randomized invariants over the data model and the small norms.

use proptest::prelude::*;

use normforge::exclusion::{norm1, size_from_norm1, ExclusionParams};
use normforge::hall::{cylinder, cylinder_meet, delta, dset, FnSet, PartialFn};
use normforge::sets::{emit_family, parse_family, Family, SubsetMask, Universe};
use normforge::ExactRatio;

fn arb_universe() -> impl Strategy<Value = Universe> {
    (1u32..=8).prop_map(|n| Universe::new(n).unwrap())
}

fn arb_family() -> impl Strategy<Value = Family> {
    arb_universe().prop_flat_map(|u| {
        let full = u.full_mask().0;
        proptest::collection::vec(0..=full, 0..12)
            .prop_map(move |bits| Family::new(u, bits.into_iter().map(SubsetMask).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn codec_round_trip_is_identity(family in arb_family()) {
        let emitted = emit_family(&family);
        let back = parse_family(&emitted).unwrap();
        prop_assert_eq!(&back, &family);
        prop_assert_eq!(emit_family(&back), emitted);
    }

    #[test]
    fn restriction_composes(family in arb_family(), z1: u32, z2: u32) {
        let full = family.universe().full_mask();
        let z1 = SubsetMask(z1).intersect(full);
        let z2 = SubsetMask(z2).intersect(full);
        let nested = family.restrict(z1).unwrap().restrict(z2).unwrap();
        prop_assert_eq!(nested, family.restrict(z1.intersect(z2)).unwrap());
    }

    #[test]
    fn exclusion_norm_inverts_to_size(g in 2u32..=10, f_off in 1u32..=9, bits: u32) {
        let f = 1 + f_off % (g - 1);
        let params = ExclusionParams::new(f, g).unwrap();
        let a = SubsetMask(bits).intersect(params.universe().full_mask());
        let size = size_from_norm1(&params, &norm1(&params, a).unwrap()).unwrap();
        prop_assert_eq!(size, ExactRatio::from_int(a.len() as i64));
    }

    #[test]
    fn cylinder_meet_is_cylinder_intersection(
        d1 in 0u32..16, o1: u32, d2 in 0u32..16, o2: u32
    ) {
        let n = 4;
        let s1 = PartialFn::new(SubsetMask(d1), SubsetMask(o1 & d1)).unwrap();
        let s2 = PartialFn::new(SubsetMask(d2), SubsetMask(o2 & d2)).unwrap();
        let c1 = cylinder(n, &s1).unwrap();
        let c2 = cylinder(n, &s2).unwrap();
        let both: Vec<SubsetMask> = c1
            .members()
            .iter()
            .copied()
            .filter(|m| c2.contains(*m))
            .collect();
        match cylinder_meet(&s1, &s2) {
            Some(meet) => {
                let joint = cylinder(n, &meet).unwrap();
                prop_assert_eq!(joint.members(), both.as_slice());
            }
            None => prop_assert!(both.is_empty()),
        }
    }

    #[test]
    fn dset_inverts_delta(bits: u16) {
        let members: Vec<SubsetMask> = (0..16u32)
            .filter(|i| bits & (1 << i) != 0)
            .map(SubsetMask)
            .collect();
        let a = FnSet::new(4, members).unwrap();
        prop_assert_eq!(dset(&delta(&a).unwrap()).unwrap(), a);
    }
}
