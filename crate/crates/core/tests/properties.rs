use proptest::prelude::*;

use primcov::combinat::{class_size, factorial, partitions, subsum_exists};
use primcov::cover::{greedy, lower_bound, reduce, solve_exact, Budget, CoverInstance, Status};
use primcov::verify::CheckReport;

/// Smallest cover by trying every subset of sets, smallest first.
fn oracle_min(universe: usize, sets: &[Vec<u64>]) -> Option<usize> {
    let full: u64 = (1 << universe) - 1;
    let masks: Vec<u64> = sets.iter().map(|s| s.iter().fold(0, |m, &e| m | 1 << e)).collect();
    (0u32..1 << sets.len())
        .filter(|pick| masks.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(0, |m, (_, s)| m | s) == full)
        .map(|pick| pick.count_ones() as usize)
        .min()
}

fn instance() -> impl Strategy<Value = (usize, Vec<Vec<u64>>)> {
    (1usize..=12).prop_flat_map(|u| {
        let set = proptest::collection::btree_set(0..u as u64, 0..=u).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        (Just(u), proptest::collection::vec(set, 1..=12))
    })
}

fn build(u: usize, sets: &[Vec<u64>]) -> CoverInstance {
    CoverInstance::new((0..u as u64).collect(), sets.iter().enumerate().map(|(i, s)| (format!("s{i}"), s.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_exhaustive_search((u, sets) in instance()) {
        let inst = build(u, &sets);
        let sol = solve_exact(&inst, Budget::unlimited(), None);
        match oracle_min(u, &sets) {
            None => prop_assert_eq!(sol.status, Status::Infeasible),
            Some(best) => {
                prop_assert_eq!(sol.status, Status::Optimal);
                prop_assert_eq!(sol.size(), best);
                prop_assert!(inst.is_cover(&sol.chosen));
                prop_assert!(lower_bound(&inst) <= best);
                prop_assert!(greedy(&inst).unwrap().size() >= best);
            }
        }
    }

    #[test]
    fn reduction_keeps_the_optimum((u, sets) in instance()) {
        let inst = build(u, &sets);
        let red = reduce(&inst);
        let Some(best) = oracle_min(u, &sets) else {
            prop_assert!(red.is_infeasible());
            return Ok(());
        };
        let rest = solve_exact(&red.instance, Budget::unlimited(), None);
        let lifted = red.lift(&rest.chosen);
        prop_assert!(inst.is_cover(&lifted));
        prop_assert_eq!(lifted.len(), best);
    }

    #[test]
    fn node_budget_is_reproducible((u, sets) in instance(), nodes in 1u64..50) {
        let inst = build(u, &sets);
        let a = solve_exact(&inst, Budget::nodes(nodes), None);
        let b = solve_exact(&inst, Budget::nodes(nodes), None);
        prop_assert_eq!((a.chosen, a.status, a.lower_bound, a.nodes), (b.chosen, b.status, b.lower_bound, b.nodes));
    }

    #[test]
    fn dump_parse_round_trip((u, sets) in instance()) {
        let inst = build(u, &sets);
        prop_assert_eq!(CoverInstance::parse(&inst.dump()).unwrap(), inst);
    }

    #[test]
    fn subsum_matches_exhaustive_search(exps in proptest::collection::vec(0u32..5, 1..12), t in 1u64..40) {
        let parts: Vec<u64> = exps.iter().map(|&e| 1 << e).collect();
        let reachable = (0u32..1 << parts.len())
            .any(|pick| parts.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, p)| p).sum::<u64>() == t);
        match subsum_exists(&parts, t).unwrap() {
            Some(sub) => {
                prop_assert!(reachable);
                prop_assert_eq!(sub.iter().sum::<u64>(), t);
            }
            None => prop_assert!(!reachable),
        }
    }

    #[test]
    fn report_json_round_trip(names in proptest::collection::vec("[a-z ,\"|]{0,12}", 0..5), fail in any::<bool>()) {
        let mut r = CheckReport::new("x", "n = 1");
        for (i, n) in names.iter().enumerate() {
            r.witness(n.clone(), i);
            r.assume(n.clone());
        }
        if fail {
            r.fail("counterexample, with \"quotes\"");
        }
        let line = r.to_json_line();
        let back: CheckReport = serde_json::from_str(&line).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 1..=30 {
        let total: primcov::combinat::Nat = partitions(n).iter().map(class_size).sum();
        assert_eq!(total, factorial(n as u64), "n = {n}");
    }
}
