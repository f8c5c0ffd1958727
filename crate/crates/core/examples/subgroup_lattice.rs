//! Concrete permutation groups: subgroup classes, maximal subgroups and
//! abelianization of a named group.
//!
//! cargo run --example subgroup_lattice -- S4

use primcov::permgroup::{resolve_group, Corpus, SubgroupLattice};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let g = resolve_group(&name, Corpus::builtin()).expect("known group");
    let lat = SubgroupLattice::new(&g).expect("within the lattice cap");
    println!("{name}: order {}, {} subgroups in {} classes", g.order(), lat.total_subgroups(), lat.classes().len());
    for (i, c) in lat.classes().iter().enumerate() {
        let mark = if c.maximal { "  maximal" } else { "" };
        println!("  class {i:>2}: order {:>4}, {:>3} conjugates{mark}", c.order, c.size);
    }
    println!("solvable: {}", g.is_solvable().unwrap());
    println!("G/G': {:?}", g.abelianization().unwrap());
    println!("primary elements: {}", g.elements().iter().filter(|p| p.is_primary()).count());
}
