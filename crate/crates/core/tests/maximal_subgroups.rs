//! The family description of the maximal subgroups of S_n, including the
//! primitive catalogue, against the maximal classes of the full subgroup
//! lattice.

use primcov::families::{family_stats, maximal_families, Catalog};
use primcov::permgroup::{ConcreteGroup, SubgroupLattice};

fn compare(n: usize) {
    let cat = Catalog::builtin();
    let g = ConcreteGroup::symmetric(n).unwrap();
    let lat = SubgroupLattice::with_cap(&g, g.order()).unwrap();
    let mut from_lattice: Vec<(usize, usize)> =
        lat.maximal_classes().into_iter().map(|i| (lat.classes()[i].order, lat.classes()[i].size)).collect();
    let mut from_families: Vec<(usize, usize)> = maximal_families(n as u32, cat)
        .iter()
        .map(|f| {
            let s = family_stats(f, cat).unwrap();
            (s.order.try_into().unwrap(), s.count.try_into().unwrap())
        })
        .collect();
    from_lattice.sort_unstable();
    from_families.sort_unstable();
    assert_eq!(from_lattice, from_families, "S{n}");
}

#[test]
fn degrees_5_to_7() {
    for n in 5..=7 {
        compare(n);
    }
}

// about 40 s with optimizations
#[test]
fn degree_8() {
    compare(8);
}
