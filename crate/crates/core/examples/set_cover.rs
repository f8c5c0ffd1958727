//! The exact set-cover solver on its own: reductions, bounds, greedy, and
//! the instance dump format.
//!
//! cargo run --example set_cover

use primcov::cover::{greedy, lower_bound, reduce, solve_exact, Budget, CoverInstance};

fn main() {
    // the 7 lines of the Fano plane cover its 7 points; pick the fewest
    let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
    let sets = lines.iter().enumerate().map(|(i, l)| (format!("L{i}"), l.to_vec()));
    let inst = CoverInstance::new((1..=7).collect(), sets);

    let red = reduce(&inst);
    println!(
        "after reduction: {} elements, {} sets, forced {:?}",
        red.instance.universe_len(),
        red.instance.sets.len(),
        red.forced()
    );
    println!("lower bound {}, greedy {}", lower_bound(&inst), greedy(&inst).unwrap().size());

    let sol = solve_exact(&inst, Budget::unlimited(), None);
    print!("{}", inst.dump());
    print!("{}", sol.dump(&inst));

    let back = CoverInstance::parse(&inst.dump()).unwrap();
    assert_eq!(back.dump(), inst.dump());
}
