use stackcoh::gcoh::{
    abelian_cohomology_z, bar_cohomology, cyclic_cohomology, FiniteGroup, GroupKind, ModuleDescriptor,
};
use stackcoh::zlin::{AbelianGroup, GroupValue};

/// Every abelian group of order at most 16, as invariant factors.
fn abelian_groups_up_to_16() -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<u64>, prod: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(2);
        let mut f = start;
        while prod * f <= 16 {
            if prefix.last().is_none_or(|&l| f % l == 0) {
                prefix.push(f);
                rec(prefix, prod * f, out);
                prefix.pop();
            }
            f += 1;
        }
    }
    rec(&mut Vec::new(), 1, &mut out);
    out
}

#[test]
fn enumerates_all_small_abelian_groups() {
    let groups = abelian_groups_up_to_16();
    // orders 1..16 have 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5 abelian groups
    assert_eq!(groups.len(), 25);
}

#[test]
fn bar_matches_periodic_resolution_for_small_abelian_groups() {
    for f in abelian_groups_up_to_16() {
        let g = FiniteGroup::abelian(&f).unwrap();
        for r in 0..=3u32 {
            let bar = bar_cohomology(&g, &AbelianGroup::free(1), r).unwrap();
            assert_eq!(bar, abelian_cohomology_z(&f, r), "factors {f:?}, r = {r}");
        }
    }
}

#[test]
fn bar_matches_cyclic_closed_form_with_finite_coefficients() {
    for d in 2..=6u64 {
        let g = FiniteGroup::cyclic(d).unwrap();
        assert!(matches!(g.kind(), GroupKind::Cyclic(_)));
        for m in 2..=6u64 {
            for r in 0..=4u32 {
                let bar = bar_cohomology(&g, &AbelianGroup::cyclic(m), r).unwrap();
                let closed = cyclic_cohomology(d, &ModuleDescriptor::cyclic(m), r).unwrap();
                assert_eq!(GroupValue::from(bar), closed, "d={d} m={m} r={r}");
            }
        }
    }
}

#[test]
fn degree_one_vanishes() {
    let groups = [
        FiniteGroup::dihedral(3).unwrap(),
        FiniteGroup::dihedral(4).unwrap(),
        FiniteGroup::dihedral(5).unwrap(),
        FiniteGroup::abelian(&[2, 2]).unwrap(),
        FiniteGroup::cyclic(7).unwrap(),
    ];
    for g in groups {
        assert!(bar_cohomology(&g, &AbelianGroup::free(1), 1).unwrap().is_trivial());
    }
}
