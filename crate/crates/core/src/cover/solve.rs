use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use super::bound::{independent_bound, top_k_bound};
use super::greedy::greedy_on;
use super::instance::{Budget, CoverInstance, CoverSolution, Status};
use super::reduce::{reduce, Incidence};

/// Branch and bound for minimum set cover.
///
/// The instance is reduced first. Greedy (or `hint`, if smaller and a
/// cover) gives the first incumbent. Each node branches on the uncovered
/// element with fewest live candidates, trying candidates by decreasing
/// fresh coverage and excluding each one from its later siblings. Nodes are
/// pruned by the larger of the largest-sets and independent-elements bounds.
///
/// An infeasible instance yields status `Infeasible` and no sets. When the
/// budget runs out the incumbent is returned as `UpperBoundOnly` with the
/// root bound.
pub fn solve_exact(inst: &CoverInstance, budget: Budget, hint: Option<&[usize]>) -> CoverSolution {
    let start = Instant::now();
    let red = reduce(inst);
    if red.is_infeasible() {
        return CoverSolution {
            chosen: vec![],
            status: Status::Infeasible,
            lower_bound: 0,
            nodes: 0,
            elapsed: start.elapsed(),
        };
    }
    let forced = red.forced().len();
    let sub = &red.instance;
    let inc = Incidence::new(sub);
    let n = sub.universe_len();
    let ns = sub.sets.len();

    let mut best =
        red.lift(&greedy_on(&inc, n, &FixedBitSet::with_capacity(ns)).expect("reduced instance is feasible"));
    if let Some(h) = hint {
        let mut h = h.to_vec();
        h.sort_unstable();
        h.dedup();
        if h.len() < best.len() && h.iter().all(|&s| s < inst.sets.len()) && inst.is_cover(&h) {
            best = h;
        }
    }

    let mut search = Search {
        inc: &inc,
        uncovered: full(n),
        allowed: full(ns),
        chosen: Vec::new(),
        best_len: best.len() - forced,
        best_sub: None,
        nodes: 0,
        budget,
        deadline: budget.max_time.filter(|_| !budget.deterministic).map(|d| start + d),
        aborted: false,
        root_bound: 0,
    };
    search.node(0);

    if let Some(b) = &search.best_sub {
        best = red.lift(b);
    }
    let lower = forced + search.root_bound;
    let status = if search.aborted { Status::UpperBoundOnly } else { Status::Optimal };
    let lower_bound = if search.aborted { lower.min(best.len()) } else { best.len() };
    assert!(inst.is_cover(&best), "solver returned a non-cover");
    CoverSolution { chosen: best, status, lower_bound, nodes: search.nodes, elapsed: start.elapsed() }
}

fn full(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

struct Search<'a> {
    inc: &'a Incidence,
    uncovered: FixedBitSet,
    allowed: FixedBitSet,
    chosen: Vec<usize>,
    best_len: usize,
    best_sub: Option<Vec<usize>>,
    nodes: u64,
    budget: Budget,
    deadline: Option<Instant>,
    aborted: bool,
    root_bound: usize,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes {
            self.aborted = true;
        } else if let Some(d) = self.deadline {
            if self.nodes.is_multiple_of(256) && Instant::now() >= d {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn node(&mut self, depth: usize) {
        if self.aborted || self.out_of_budget() {
            return;
        }
        self.nodes += 1;
        if self.uncovered.is_clear() {
            if self.chosen.len() < self.best_len {
                self.best_len = self.chosen.len();
                self.best_sub = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + 1 >= self.best_len {
            if depth == 0 {
                self.root_bound = self.best_len;
            }
            return;
        }

        let gains: Vec<usize> = (0..self.inc.sets.len())
            .map(|s| if self.allowed.contains(s) { self.inc.sets[s].intersection_count(&self.uncovered) } else { 0 })
            .collect();
        let need = self.uncovered.count_ones(..);
        let mut lb = top_k_bound(gains.iter().copied().filter(|&g| g > 0).collect(), need);
        let mut counts = vec![0u32; self.inc.cands.len()];
        let mut pick = (u32::MAX, usize::MAX);
        for e in self.uncovered.ones() {
            let c = self.inc.cands[e].intersection_count(&self.allowed) as u32;
            counts[e] = c;
            if c < pick.0 {
                pick = (c, e);
            }
        }
        if pick.0 == 0 {
            lb = usize::MAX;
        } else if lb < usize::MAX && self.chosen.len() + lb < self.best_len {
            lb = lb.max(independent_bound(&self.inc.cands, &self.allowed, &self.uncovered, &counts));
        }
        if depth == 0 {
            self.root_bound = lb.min(self.best_len);
        }
        if lb == usize::MAX || self.chosen.len() + lb >= self.best_len {
            return;
        }

        let mut order: Vec<usize> = self.inc.cands[pick.1].intersection(&self.allowed).collect();
        order.sort_by_key(|&s| (std::cmp::Reverse(gains[s]), s));
        let saved = self.uncovered.clone();
        for &s in &order {
            self.allowed.remove(s);
            self.chosen.push(s);
            self.uncovered.difference_with(&self.inc.sets[s]);
            self.node(depth + 1);
            self.uncovered.clone_from(&saved);
            self.chosen.pop();
            if self.aborted || self.chosen.len() + 1 >= self.best_len {
                break;
            }
        }
        for &s in &order {
            self.allowed.insert(s);
        }
    }
}

/// Exhaustive minimum cover by trying subfamilies in order of size. For
/// cross-checking on small instances only.
pub fn brute_force_min(inst: &CoverInstance) -> Option<Vec<usize>> {
    let ns = inst.sets.len();
    assert!(ns <= 24, "brute force is limited to 24 sets");
    let masks: Vec<u64> = inst.sets.iter().map(|s| s.members.iter().fold(0u64, |m, &e| m | 1 << e)).collect();
    assert!(inst.universe_len() <= 64);
    let full = if inst.universe_len() == 64 { u64::MAX } else { (1u64 << inst.universe_len()) - 1 };
    let mut best: Option<u32> = None;
    for sub in 0u32..(1 << ns) {
        if best.is_some_and(|b| sub.count_ones() >= b.count_ones()) {
            continue;
        }
        let cov = (0..ns).filter(|&i| sub >> i & 1 == 1).fold(0u64, |m, i| m | masks[i]);
        if cov == full {
            best = Some(sub);
        }
    }
    best.map(|b| (0..ns).filter(|&i| b >> i & 1 == 1).collect())
}

/// Convenience for callers that only want a size under a time limit.
pub fn solve_within(inst: &CoverInstance, limit: Duration) -> CoverSolution {
    solve_exact(inst, Budget::time(limit), None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: u64, sets: &[&[u64]]) -> CoverInstance {
        CoverInstance::new((0..n).collect(), sets.iter().enumerate().map(|(i, s)| (format!("s{i}"), s.to_vec())))
    }

    #[test]
    fn small_optimum() {
        // greedy takes the big set first and needs 3; the optimum is 2
        let i = inst(6, &[&[0, 1, 2, 3], &[0, 1, 4], &[2, 3, 5], &[4], &[5]]);
        let s = solve_exact(&i, Budget::unlimited(), None);
        assert_eq!(s.status, Status::Optimal);
        assert_eq!(s.chosen, vec![1, 2]);
        assert_eq!(s.lower_bound, 2);
        assert_eq!(brute_force_min(&i).unwrap().len(), 2);
    }

    #[test]
    fn infeasible_status() {
        let s = solve_exact(&inst(3, &[&[0], &[1]]), Budget::unlimited(), None);
        assert_eq!(s.status, Status::Infeasible);
    }

    #[test]
    fn budget_exhaustion_keeps_incumbent() {
        let sets: Vec<Vec<u64>> = (0..12u64).map(|i| vec![i, (i + 1) % 12, (i + 5) % 12]).collect();
        let refs: Vec<&[u64]> = sets.iter().map(|v| v.as_slice()).collect();
        let i = inst(12, &refs);
        let s = solve_exact(&i, Budget::nodes(1), None);
        assert_eq!(s.status, Status::UpperBoundOnly);
        assert!(i.is_cover(&s.chosen));
        assert!(s.lower_bound <= s.size());
        let full = solve_exact(&i, Budget::unlimited(), None);
        assert_eq!(full.size(), brute_force_min(&i).unwrap().len());
    }

    #[test]
    fn hint_used_as_incumbent() {
        let i = inst(6, &[&[0, 1, 2, 3], &[0, 1, 4], &[2, 3, 5], &[4], &[5]]);
        let s = solve_exact(&i, Budget::nodes(0), Some(&[2, 1]));
        assert_eq!(s.chosen, vec![1, 2]);
    }
}
