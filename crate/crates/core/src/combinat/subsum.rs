use super::{binary_partitions, Partition};
use crate::error::{Error, Result};

/// Finds a sub-multiset of `parts` summing to `target`. Parts must be powers
/// of two. Returns one witness (in input order) when it exists.
pub fn subsum_exists(parts: &[u64], target: u64) -> Result<Option<Vec<u64>>> {
    if let Some(&bad) = parts.iter().find(|p| !p.is_power_of_two()) {
        return Err(Error::NotPowerOfTwo(bad));
    }
    Ok(subset_sum(parts, target))
}

fn subset_sum(parts: &[u64], target: u64) -> Option<Vec<u64>> {
    let total: u64 = parts.iter().sum();
    if target > total {
        return None;
    }
    let t = target as usize;
    // via[s] = index of the part that first made s reachable
    let mut via = vec![usize::MAX; t + 1];
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for (i, &p) in parts.iter().enumerate() {
        let p = p as usize;
        if p > t {
            continue;
        }
        for s in (p..=t).rev() {
            if !reach[s] && reach[s - p] {
                reach[s] = true;
                via[s] = i;
            }
        }
    }
    if !reach[t] {
        return None;
    }
    let mut witness = Vec::new();
    let mut s = t;
    while s > 0 {
        let i = via[s];
        witness.push(i);
        s -= parts[i] as usize;
    }
    witness.sort_unstable();
    Some(witness.into_iter().map(|i| parts[i]).collect())
}

/// Two disjoint sub-multisets of `parts`, each summing to `target`.
pub fn two_disjoint_subsums(parts: &[u64], target: u64) -> Option<(Vec<u64>, Vec<u64>)> {
    let mut distinct: Vec<(u64, usize)> = Vec::new();
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    for p in sorted {
        match distinct.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => distinct.push((p, 1)),
        }
    }
    let mut take = vec![0usize; distinct.len()];
    fn rec(
        i: usize,
        rem: u64,
        distinct: &[(u64, usize)],
        take: &mut Vec<usize>,
        target: u64,
    ) -> Option<(Vec<u64>, Vec<u64>)> {
        if rem == 0 {
            let first: Vec<u64> =
                distinct.iter().zip(take.iter()).flat_map(|(&(p, _), &c)| std::iter::repeat_n(p, c)).collect();
            let rest: Vec<u64> =
                distinct.iter().zip(take.iter()).flat_map(|(&(p, m), &c)| std::iter::repeat_n(p, m - c)).collect();
            return subset_sum(&rest, target).map(|second| (first, second));
        }
        if i == distinct.len() {
            return None;
        }
        let (p, m) = distinct[i];
        let max = m.min((rem / p) as usize);
        for c in (0..=max).rev() {
            take[i] = c;
            if let Some(found) = rec(i + 1, rem - c as u64 * p, distinct, take, target) {
                return Some(found);
            }
        }
        take[i] = 0;
        None
    }
    rec(0, target, &distinct, &mut take, target)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsumCounterexample {
    pub a: u32,
    pub total: u64,
    pub partition: Partition,
}

/// Outcome of the exhaustive scan over 2-power partitions of `2^a` and
/// `3·2^a`.
#[derive(Clone, Debug, Default)]
pub struct SubsumReport {
    pub a_max: u32,
    /// Partitions of `2^a` with at least two parts that were checked.
    pub power_checked: usize,
    /// Partitions of `3·2^a` with at least two parts that were checked.
    pub triple_checked: usize,
    /// Partitions of `3·2^a` falling into the `(2^a, 2^{a+1})` case.
    pub exceptional_pair: Vec<Partition>,
    /// Partitions of `3·2^a` falling into the `(2^a, 2^a, 2^a)` case.
    pub exceptional_triple: Vec<Partition>,
    pub counterexamples: Vec<SubsumCounterexample>,
}

impl SubsumReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every `1 ≤ a ≤ a_max` and every 2-power partition with `r ≥ 2` parts:
/// a partition of `2^a` has a sub-sum `2^{a−1}`; a partition of `3·2^a` is
/// `(2^{a+1}, 2^a)`, `(2^a, 2^a, 2^a)`, or has two disjoint sub-sums
/// `2^{a−1}`.
pub fn check_subsum_lemma(a_max: u32) -> SubsumReport {
    let mut report = SubsumReport { a_max, ..Default::default() };
    for a in 1..=a_max {
        let power = 1u64 << a;
        let half = power / 2;
        for lambda in binary_partitions(power as u32) {
            if lambda.len() < 2 {
                continue;
            }
            report.power_checked += 1;
            let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
            if subset_sum(&parts, half).is_none() {
                report.counterexamples.push(SubsumCounterexample { a, total: power, partition: lambda });
            }
        }
        let triple = 3 * power;
        for lambda in binary_partitions(triple as u32) {
            if lambda.len() < 2 {
                continue;
            }
            report.triple_checked += 1;
            let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
            if parts == [2 * power, power] {
                report.exceptional_pair.push(lambda);
            } else if parts == [power, power, power] {
                report.exceptional_triple.push(lambda);
            } else if two_disjoint_subsums(&parts, half).is_none() {
                report.counterexamples.push(SubsumCounterexample { a, total: triple, partition: lambda });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(subsum_exists(&[8, 4, 2, 2], 8).unwrap(), Some(vec![8]));
        assert!(subsum_exists(&[4, 4, 4], 4).unwrap().is_some());
        assert_eq!(subsum_exists(&[4, 4, 2], 5).unwrap(), None);
        assert_eq!(subsum_exists(&[4, 3], 3), Err(Error::NotPowerOfTwo(3)));
        assert_eq!(subsum_exists(&[], 0).unwrap(), Some(vec![]));
    }

    #[test]
    fn disjoint_pairs() {
        let (a, b) = two_disjoint_subsums(&[4, 2, 2, 2, 1, 1], 2).unwrap();
        assert_eq!(a.iter().sum::<u64>(), 2);
        assert_eq!(b.iter().sum::<u64>(), 2);
        assert!(two_disjoint_subsums(&[8, 4], 2).is_none());
        assert!(two_disjoint_subsums(&[4, 4, 4], 2).is_none());
    }

    #[test]
    fn lemma_small_scan() {
        let report = check_subsum_lemma(4);
        assert!(report.holds(), "{:?}", report.counterexamples);
        assert_eq!(report.exceptional_pair.len(), 4);
        assert_eq!(report.exceptional_triple.len(), 4);
        assert_eq!(report.exceptional_pair[1].parts(), &[8, 4]);
    }
}
