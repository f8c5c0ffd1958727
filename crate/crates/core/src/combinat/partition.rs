use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`, stored as non-increasing positive parts.
///
/// Doubles as the label of a conjugacy class of `Sₙ` (cycle type).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs with parts in decreasing order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Appends `count` parts equal to 1 so that the partition sums to `n`.
    pub fn padded_to(&self, n: u32) -> Result<Self> {
        let s = self.n();
        if s > n {
            return Err(Error::InvalidPartition(format!("{self} exceeds {n}")));
        }
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, (n - s) as usize));
        Ok(Partition { parts })
    }

    pub fn all_parts_powers_of_two(&self) -> bool {
        self.parts.iter().all(|p| p.is_power_of_two())
    }

    /// The partition obtained by removing the sub-multiset `sub` (given as
    /// parts). Fails when `sub` is not contained in `self`.
    pub fn without(&self, sub: &Partition) -> Result<Self> {
        let mut rest = self.parts.clone();
        for p in sub.parts() {
            match rest.iter().position(|q| q == p) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return Err(Error::InvalidPartition(format!("{sub} is not contained in {self}"))),
            }
        }
        Ok(Partition { parts: rest })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,4,2`, `(4,4,2)` or whitespace separated parts.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of `n` whose parts are powers of two.
pub fn binary_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let mut p = 1u32 << (31 - rem.min(max).leading_zeros());
        loop {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
            if p == 1 {
                break;
            }
            p >>= 1;
        }
    }
    if n > 0 {
        rec(n, n, &mut cur, &mut out);
    } else {
        out.push(Partition::empty());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: Partition = "4,2,4".parse().unwrap();
        assert_eq!(p.parts(), &[4, 4, 2]);
        assert_eq!(p.to_string(), "(4,4,2)");
        assert_eq!(p.multiplicities(), vec![(4, 2), (2, 1)]);
        assert!("4,0".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..10
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(partitions(i as u32 + 1).len(), e);
        }
        // binary partitions b(n) for n = 1..10
        let expected = [1, 2, 2, 4, 4, 6, 6, 10, 10, 14];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(binary_partitions(i as u32 + 1).len(), e);
        }
    }

    #[test]
    fn without_removes_submultiset() {
        let p: Partition = "4,4,2,1".parse().unwrap();
        let q: Partition = "4,1".parse().unwrap();
        assert_eq!(p.without(&q).unwrap().parts(), &[4, 2]);
        assert!(p.without(&"8".parse().unwrap()).is_err());
    }
}
