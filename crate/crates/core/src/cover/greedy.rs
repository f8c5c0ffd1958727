use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::instance::{CoverInstance, CoverSolution, Status};
use super::reduce::Incidence;
use crate::error::{Error, Result};

/// Repeatedly takes the set covering the most uncovered elements, lowest id
/// on ties.
pub fn greedy(inst: &CoverInstance) -> Result<CoverSolution> {
    let start = Instant::now();
    if let Some(e) = inst.uncoverable_element() {
        return Err(Error::Infeasible(e));
    }
    let inc = Incidence::new(inst);
    let chosen = greedy_on(&inc, inst.universe_len(), &FixedBitSet::with_capacity(inst.sets.len()));
    let mut chosen = chosen.expect("feasible instance");
    chosen.sort_unstable();
    Ok(CoverSolution { chosen, status: Status::UpperBoundOnly, lower_bound: 0, nodes: 0, elapsed: start.elapsed() })
}

/// Family part of a set label: everything before the first `{`, `[` or `^`.
pub fn family_of(label: &str) -> &str {
    label.find(['{', '[', '^']).map_or(label, |i| &label[..i])
}

/// Smallest cover made of whole families (sets grouped by [`family_of`]),
/// each family taken alone or together with one other. A cheap incumbent
/// for instances where greedy is misled by large sets.
pub fn family_cover(inst: &CoverInstance) -> Option<Vec<usize>> {
    let mut groups: Vec<(&str, Vec<usize>)> = Vec::new();
    for (i, s) in inst.sets.iter().enumerate() {
        let f = family_of(&s.label);
        match groups.iter_mut().find(|g| g.0 == f) {
            Some(g) => g.1.push(i),
            None => groups.push((f, vec![i])),
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for a in 0..groups.len() {
        for b in a..groups.len() {
            let mut chosen = groups[a].1.clone();
            if b != a {
                chosen.extend(&groups[b].1);
            }
            if best.as_ref().is_none_or(|c| chosen.len() < c.len()) && inst.is_cover(&chosen) {
                best = Some(chosen);
            }
        }
    }
    best
}

/// Greedy cover avoiding `banned` sets; `None` when they leave a gap.
pub(crate) fn greedy_on(inc: &Incidence, n: usize, banned: &FixedBitSet) -> Option<Vec<usize>> {
    let mut uncovered = FixedBitSet::with_capacity(n);
    uncovered.insert_range(..);
    let mut chosen = Vec::new();
    while !uncovered.is_clear() {
        let mut best = (0, usize::MAX);
        for (s, row) in inc.sets.iter().enumerate() {
            if banned.contains(s) {
                continue;
            }
            let g = row.intersection_count(&uncovered);
            if g > best.0 {
                best = (g, s);
            }
        }
        if best.0 == 0 {
            return None;
        }
        chosen.push(best.1);
        uncovered.difference_with(&inc.sets[best.1]);
    }
    Some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let i = CoverInstance::new(
            vec![1, 2, 3],
            [("a".into(), vec![1, 2]), ("b".into(), vec![2, 3]), ("c".into(), vec![3])],
        );
        assert_eq!(greedy(&i).unwrap().chosen, vec![0, 1]);
        let all = CoverInstance::new(vec![1, 2, 3], [("a".into(), vec![1]), ("b".into(), vec![1, 2, 3])]);
        assert_eq!(greedy(&all).unwrap().chosen, vec![1]);
        let bad = CoverInstance::new(vec![1, 2], [("a".into(), vec![1])]);
        assert!(matches!(greedy(&bad), Err(Error::Infeasible(2))));
    }

    #[test]
    fn whole_families() {
        let sets = [
            ("X{1}".into(), vec![1, 2]),
            ("X{2}".into(), vec![3]),
            ("W[1]".into(), vec![1, 2, 3]),
            ("A".into(), vec![4]),
        ];
        let i = CoverInstance::new(vec![1, 2, 3, 4], sets);
        assert_eq!(family_of("P:PGL25^(1,2)"), "P:PGL25");
        assert_eq!(family_cover(&i), Some(vec![2, 3]));
    }
}
