use fixedbitset::FixedBitSet;

use super::instance::CoverInstance;
use super::reduce::{reduce, Incidence};

/// Fewest sets whose sizes can add up to `need`, taking the largest first.
pub fn top_k_bound(mut sizes: Vec<usize>, need: usize) -> usize {
    if need == 0 {
        return 0;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0;
    for (k, s) in sizes.into_iter().enumerate() {
        acc += s;
        if acc >= need {
            return k + 1;
        }
    }
    usize::MAX
}

/// Size of a greedily chosen family of elements with pairwise disjoint
/// candidate lists, scanned from the fewest candidates up. Each needs its
/// own set.
pub(crate) fn independent_bound(
    cands: &[FixedBitSet],
    allowed: &FixedBitSet,
    elems: &FixedBitSet,
    counts: &[u32],
) -> usize {
    let mut order: Vec<usize> = elems.ones().collect();
    order.sort_by_key(|&e| (counts[e], e));
    let mut used = FixedBitSet::with_capacity(allowed.len());
    let mut k = 0;
    for e in order {
        if cands[e].intersection(allowed).all(|s| !used.contains(s)) {
            for s in cands[e].intersection(allowed) {
                used.insert(s);
            }
            k += 1;
        }
    }
    k
}

/// Lower bound on the optimum: forced sets of the reduction plus the better
/// of the largest-sets bound and the independent-elements bound on what is
/// left. Returns `usize::MAX` for an infeasible instance.
pub fn lower_bound(inst: &CoverInstance) -> usize {
    let red = reduce(inst);
    if red.is_infeasible() {
        return usize::MAX;
    }
    red.forced().len() + residual_bound(&red.instance)
}

pub(crate) fn residual_bound(inst: &CoverInstance) -> usize {
    let inc = Incidence::new(inst);
    let n = inst.universe_len();
    let mut elems = FixedBitSet::with_capacity(n);
    elems.insert_range(..);
    let mut allowed = FixedBitSet::with_capacity(inst.sets.len());
    allowed.insert_range(..);
    let counts: Vec<u32> = inc.cands.iter().map(|c| c.count_ones(..) as u32).collect();
    let top = top_k_bound(inst.sets.iter().map(|s| s.members.len()).collect(), n);
    top.max(independent_bound(&inc.cands, &allowed, &elems, &counts))
}

/// ⌈total / largest⌉, the counting bound for a class covered by sets of at
/// most `largest` elements each.
pub fn counting_bound(total: u64, largest: u64) -> u64 {
    if total == 0 {
        0
    } else {
        total.div_ceil(largest.max(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_k() {
        assert_eq!(top_k_bound(vec![2, 2, 1], 3), 2);
        assert_eq!(top_k_bound(vec![1, 1], 3), usize::MAX);
        assert_eq!(top_k_bound(vec![], 0), 0);
        assert_eq!(counting_bound(72576, 576), 126);
        assert_eq!(counting_bound(1247400, 10800), 116);
    }

    #[test]
    fn singletons_bound_is_universe() {
        let inst = CoverInstance::new((0..5).collect(), (0..5).map(|i| (format!("s{i}"), vec![i])));
        assert_eq!(lower_bound(&inst), 5);
    }

    #[test]
    fn independent_beats_top_k() {
        // 0, 1, 2 share no candidate, the filler 3..=6 is everywhere
        let sets: Vec<(String, Vec<u64>)> = (0..6u64).map(|i| (format!("s{i}"), vec![i / 2, 3, 4, 5, 6])).collect();
        let inst = CoverInstance::new((0..7).collect(), sets);
        let inc = Incidence::new(&inst);
        let mut elems = FixedBitSet::with_capacity(7);
        elems.insert_range(..);
        let mut allowed = FixedBitSet::with_capacity(6);
        allowed.insert_range(..);
        let counts: Vec<u32> = inc.cands.iter().map(|c| c.count_ones(..) as u32).collect();
        assert_eq!(top_k_bound(vec![5; 6], 7), 2);
        assert_eq!(independent_bound(&inc.cands, &allowed, &elems, &counts), 3);
        assert_eq!(lower_bound(&inst), 3);
    }
}
