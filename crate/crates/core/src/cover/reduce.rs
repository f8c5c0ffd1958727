use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::instance::{CoverInstance, CoverSet};

/// Bitset view of an instance: rows are sets over elements, columns are
/// elements over sets.
#[derive(Clone, Debug)]
pub(crate) struct Incidence {
    pub sets: Vec<FixedBitSet>,
    pub cands: Vec<FixedBitSet>,
}

impl Incidence {
    pub fn new(inst: &CoverInstance) -> Self {
        let (u, s) = (inst.universe.len(), inst.sets.len());
        let mut sets = vec![FixedBitSet::with_capacity(u); s];
        let mut cands = vec![FixedBitSet::with_capacity(s); u];
        for (i, set) in inst.sets.iter().enumerate() {
            for &e in &set.members {
                sets[i].insert(e as usize);
                cands[e as usize].insert(i);
            }
        }
        Incidence { sets, cands }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionLog {
    /// Original ids of sets forced by an element with a single candidate.
    pub forced: Vec<usize>,
    /// Original ids of sets removed as empty or dominated.
    pub dominated_sets: Vec<usize>,
    /// Universe ids of elements removed as dominated or covered by a forced set.
    pub dominated_elements: Vec<u64>,
    pub covered_by_forced: usize,
    pub rounds: usize,
    /// An element with no candidate set, if any.
    pub infeasible: Option<u64>,
}

/// Result of `reduce`. An optimal cover of the original is `forced` plus the
/// image under `set_map` of an optimal cover of `instance`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub instance: CoverInstance,
    /// Reduced set index to original set index.
    pub set_map: Vec<usize>,
    pub log: ReductionLog,
}

impl Reduction {
    pub fn forced(&self) -> &[usize] {
        &self.log.forced
    }

    pub fn is_infeasible(&self) -> bool {
        self.log.infeasible.is_some()
    }

    /// Maps a cover of the reduced instance back to original set ids.
    pub fn lift(&self, chosen: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.log.forced.iter().copied().chain(chosen.iter().map(|&c| self.set_map[c])).collect();
        out.sort_unstable();
        out
    }
}

/// Removes dominated sets and elements and takes forced sets until nothing
/// changes. Ties between identical rows or columns keep the lowest index.
pub fn reduce(inst: &CoverInstance) -> Reduction {
    let inc = Incidence::new(inst);
    let (nu, ns) = (inst.universe.len(), inst.sets.len());
    let mut elems = FixedBitSet::with_capacity(nu);
    elems.insert_range(..);
    let mut sets = FixedBitSet::with_capacity(ns);
    sets.insert_range(..);
    let mut log = ReductionLog::default();

    loop {
        log.rounds += 1;
        let mut changed = false;

        // forced sets and infeasibility
        for e in 0..nu {
            if !elems.contains(e) {
                continue;
            }
            match inc.cands[e].intersection_count(&sets) {
                0 => {
                    log.infeasible = Some(inst.universe[e]);
                    return finish(inst, &inc, elems, sets, log);
                }
                1 => {
                    let s = inc.cands[e].intersection(&sets).next().unwrap();
                    log.forced.push(s);
                    sets.remove(s);
                    log.covered_by_forced += inc.sets[s].intersection_count(&elems);
                    elems.difference_with(&inc.sets[s]);
                    changed = true;
                }
                _ => {}
            }
        }

        // dominated sets
        let rows: Vec<FixedBitSet> = (0..ns)
            .map(|s| {
                if sets.contains(s) {
                    let mut r = inc.sets[s].clone();
                    r.intersect_with(&elems);
                    r
                } else {
                    FixedBitSet::new()
                }
            })
            .collect();
        for s in 0..ns {
            if !sets.contains(s) {
                continue;
            }
            let dominated = match rows[s].minimum() {
                None => true,
                Some(first) => inc.cands[first].intersection(&sets).any(|t| {
                    t != s && rows[s].is_subset(&rows[t]) && (t < s || rows[s].count_ones(..) < rows[t].count_ones(..))
                }),
            };
            if dominated {
                sets.remove(s);
                log.dominated_sets.push(s);
                changed = true;
            }
        }

        // dominated elements: e goes when some f has cands(f) within cands(e)
        let cols: Vec<FixedBitSet> = (0..nu)
            .map(|e| {
                if elems.contains(e) {
                    let mut c = inc.cands[e].clone();
                    c.intersect_with(&sets);
                    c
                } else {
                    FixedBitSet::new()
                }
            })
            .collect();
        for f in 0..nu {
            if !elems.contains(f) {
                continue;
            }
            let mut common = elems.clone();
            for s in cols[f].ones() {
                common.intersect_with(&rows[s]);
                if common.count_ones(..) <= 1 {
                    break;
                }
            }
            let nf = cols[f].count_ones(..);
            for e in common.ones() {
                if e != f && elems.contains(e) && cols[f].is_subset(&cols[e]) && (f < e || nf < cols[e].count_ones(..))
                {
                    elems.remove(e);
                    log.dominated_elements.push(inst.universe[e]);
                    changed = true;
                }
            }
        }

        if !changed {
            break;
        }
    }
    finish(inst, &inc, elems, sets, log)
}

fn finish(
    inst: &CoverInstance,
    inc: &Incidence,
    elems: FixedBitSet,
    sets: FixedBitSet,
    mut log: ReductionLog,
) -> Reduction {
    log.forced.sort_unstable();
    log.dominated_sets.sort_unstable();
    let mut index = vec![u32::MAX; inst.universe.len()];
    let mut universe = Vec::new();
    for (k, e) in elems.ones().enumerate() {
        index[e] = k as u32;
        universe.push(inst.universe[e]);
    }
    let set_map: Vec<usize> = sets.ones().collect();
    let reduced = set_map
        .iter()
        .map(|&s| CoverSet {
            label: inst.sets[s].label.clone(),
            members: inc.sets[s].intersection(&elems).map(|e| index[e]).collect(),
        })
        .collect();
    Reduction { instance: CoverInstance::from_indices(universe, reduced), set_map, log }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: u64, sets: &[&[u64]]) -> CoverInstance {
        CoverInstance::new((0..n).collect(), sets.iter().enumerate().map(|(i, s)| (format!("s{i}"), s.to_vec())))
    }

    #[test]
    fn identical_sets_collapse() {
        let r = reduce(&inst(3, &[&[0, 1], &[0, 1], &[1, 2], &[2, 0]]));
        assert_eq!(r.log.dominated_sets, vec![1]);
        assert!(r.forced().is_empty());
        assert_eq!(r.set_map, vec![0, 2, 3]);
    }

    #[test]
    fn forced_chain() {
        // 0 only in s0; then s1 is the only cover of 3
        let r = reduce(&inst(4, &[&[0, 1], &[1, 2, 3], &[2]]));
        assert_eq!(r.forced(), &[0, 1]);
        assert_eq!(r.instance.universe_len(), 0);
        assert_eq!(r.lift(&[]), vec![0, 1]);
    }

    #[test]
    fn infeasible_flagged() {
        let r = reduce(&inst(3, &[&[0], &[1]]));
        assert_eq!(r.log.infeasible, Some(2));
        assert!(r.is_infeasible());
    }

    #[test]
    fn element_dominance() {
        // cands(0)={0,1}, cands(1)={0,1,2}: element 1 is implied by 0
        let r = reduce(&inst(3, &[&[0, 1], &[0, 1, 2], &[1, 2]]));
        assert!(r.log.dominated_sets.contains(&0));
        assert_eq!(r.forced(), &[1]);
    }
}
