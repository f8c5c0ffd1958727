use fixedbitset::FixedBitSet;

use super::perm::Perm;
use crate::combinat::factorial;

/// Degrees up to this use a dense bit vector over all of `S_n`.
pub const DENSE_DEGREE_LIMIT: usize = 8;

/// A set of permutations of one degree, keyed by lexicographic rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSet {
    Dense { degree: usize, bits: FixedBitSet },
    Sparse { degree: usize, ranks: Vec<u64> },
}

impl ElementSet {
    pub fn from_perms(degree: usize, perms: impl IntoIterator<Item = Perm>) -> Self {
        if degree <= DENSE_DEGREE_LIMIT {
            let size = u64::try_from(factorial(degree as u64)).expect("small") as usize;
            let mut bits = FixedBitSet::with_capacity(size);
            for p in perms {
                bits.insert(p.rank() as usize);
            }
            ElementSet::Dense { degree, bits }
        } else {
            let mut ranks: Vec<u64> = perms.into_iter().map(|p| p.rank()).collect();
            ranks.sort_unstable();
            ranks.dedup();
            ElementSet::Sparse { degree, ranks }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            ElementSet::Dense { degree, .. } | ElementSet::Sparse { degree, .. } => *degree,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ElementSet::Dense { bits, .. } => bits.count_ones(..),
            ElementSet::Sparse { ranks, .. } => ranks.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree() {
            return false;
        }
        self.contains_rank(p.rank())
    }

    pub fn contains_rank(&self, r: u64) -> bool {
        match self {
            ElementSet::Dense { bits, .. } => bits.contains(r as usize),
            ElementSet::Sparse { ranks, .. } => ranks.binary_search(&r).is_ok(),
        }
    }

    /// Ranks in increasing order.
    pub fn ranks(&self) -> Vec<u64> {
        match self {
            ElementSet::Dense { bits, .. } => bits.ones().map(|r| r as u64).collect(),
            ElementSet::Sparse { ranks, .. } => ranks.clone(),
        }
    }

    pub fn perms(&self) -> Vec<Perm> {
        let n = self.degree();
        self.ranks().into_iter().map(|r| Perm::unrank(n, r)).collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        match (self, other) {
            (ElementSet::Dense { bits: a, .. }, ElementSet::Dense { bits: b, .. }) => a.is_subset(b),
            _ => self.ranks().iter().all(|&r| other.contains_rank(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_and_sparse_agree() {
        let ps = [Perm::parse("(1,2)", 9).unwrap(), Perm::identity(9)];
        let s = ElementSet::from_perms(9, ps);
        assert!(matches!(s, ElementSet::Sparse { .. }));
        assert_eq!(s.len(), 2);
        assert!(s.contains(&Perm::identity(9)));
        let d = ElementSet::from_perms(4, [Perm::parse("(1,2)", 4).unwrap()]);
        assert!(matches!(d, ElementSet::Dense { .. }));
        assert!(d.contains(&Perm::parse("(1,2)", 4).unwrap()));
        assert!(!d.contains(&Perm::identity(4)));
        assert_eq!(d.perms(), vec![Perm::parse("(1,2)", 4).unwrap()]);
    }
}
