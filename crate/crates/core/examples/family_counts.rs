//! Closed-form intersections of maximal families of S_n with conjugacy
//! classes, next to the family sizes.
//!
//! cargo run --example family_counts

use primcov::combinat::Partition;
use primcov::families::{family_stats, intersect_blockstab_half, intersect_setstab, maximal_families, Catalog};
use primcov::verify::family_class_count;

fn main() {
    let cat = Catalog::builtin();
    let p = |s: &str| s.parse::<Partition>().unwrap();

    println!("W4 ∩ (8)       = {}", intersect_blockstab_half(&p("8")).unwrap());
    println!("W5 ∩ (4,4,2)   = {}", intersect_blockstab_half(&p("4,4,2")).unwrap());
    println!("X2 ∩ (4,4,2)   = {}", intersect_setstab(&p("4,4,2"), 2));
    println!("X1 ∩ (4,4,2,1) = {}", intersect_setstab(&p("4,4,2,1"), 1));
    println!("W7 ∩ (8,4,2)   = {}", intersect_blockstab_half(&p("8,4,2")).unwrap());
    if let Err(e) = intersect_blockstab_half(&p("4,4")) {
        println!("W4 ∩ (4,4): {e}");
    }

    let lam = p("4,4,2");
    println!("\nmaximal families of S10 on (4,4,2):");
    for spec in maximal_families(10, cat) {
        let s = family_stats(&spec, cat).unwrap();
        let c = family_class_count(&spec, &lam, cat).unwrap();
        println!("  {:<12} members {:<6} order {:<8} meets the class in {c}", spec.to_string(), s.count, s.order);
    }
}
