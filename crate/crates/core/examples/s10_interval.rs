//! The (4,4,2) class of S10 against all maximal subgroups, solved under a
//! time budget; prints the certified interval.
//!
//! cargo run --release --example s10_interval -- 30

use std::time::Duration;

use primcov::cover::{class_cover_instance, family_cover, greedy, solve_exact, Budget};
use primcov::families::Catalog;

fn main() {
    let secs: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(30);
    let (inst, assumed) = class_cover_instance(10, &"4,4,2".parse().unwrap(), Catalog::builtin(), &[]).unwrap();
    println!("{} elements, {} subgroups; assumed maximal: {assumed:?}", inst.universe_len(), inst.sets.len());
    println!("greedy {}", greedy(&inst).unwrap().size());
    let hint = family_cover(&inst);
    println!("whole-family cover {:?}", hint.as_ref().map(Vec::len));
    let sol = solve_exact(&inst, Budget::time(Duration::from_secs(secs)), hint.as_deref());
    println!("{}: [{}, {}] after {} nodes in {:?}", sol.status, sol.lower_bound, sol.size(), sol.nodes, sol.elapsed);
}
