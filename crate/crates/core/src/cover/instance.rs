use std::fmt::Write as _;
use std::time::Duration;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};

/// A candidate set; `members` are sorted indices into the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSet {
    pub label: String,
    pub members: Vec<u32>,
}

/// Universe of element ids and candidate sets over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    pub universe: Vec<u64>,
    pub sets: Vec<CoverSet>,
}

impl CoverInstance {
    /// Builds an instance from sets given by element ids. Ids outside the
    /// universe are dropped.
    pub fn new(universe: Vec<u64>, sets: impl IntoIterator<Item = (String, Vec<u64>)>) -> Self {
        let index: FxHashMap<u64, u32> = universe.iter().enumerate().map(|(i, &u)| (u, i as u32)).collect();
        let sets = sets
            .into_iter()
            .map(|(label, ids)| {
                let mut members: Vec<u32> = ids.iter().filter_map(|id| index.get(id).copied()).collect();
                members.sort_unstable();
                members.dedup();
                CoverSet { label, members }
            })
            .collect();
        CoverInstance { universe, sets }
    }

    /// Builds an instance from sets already given as universe indices.
    pub fn from_indices(universe: Vec<u64>, sets: Vec<CoverSet>) -> Self {
        let mut sets = sets;
        for s in &mut sets {
            s.members.sort_unstable();
            s.members.dedup();
            debug_assert!(s.members.last().is_none_or(|&m| (m as usize) < universe.len()));
        }
        CoverInstance { universe, sets }
    }

    pub fn universe_len(&self) -> usize {
        self.universe.len()
    }

    /// For each element, the sets containing it.
    pub fn candidates(&self) -> Vec<Vec<u32>> {
        let mut c = vec![Vec::new(); self.universe.len()];
        for (s, set) in self.sets.iter().enumerate() {
            for &e in &set.members {
                c[e as usize].push(s as u32);
            }
        }
        c
    }

    /// Id of some element no set contains.
    pub fn uncoverable_element(&self) -> Option<u64> {
        let mut hit = FixedBitSet::with_capacity(self.universe.len());
        for s in &self.sets {
            for &e in &s.members {
                hit.insert(e as usize);
            }
        }
        hit.zeroes().next().map(|i| self.universe[i])
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.universe.len());
        for &s in chosen {
            for &e in &self.sets[s].members {
                hit.insert(e as usize);
            }
        }
        hit.count_ones(..) == self.universe.len()
    }

    /// Text form: `universe <count>`, an optional `ids a,b,..` line when the
    /// ids are not `0..count`, then `set <id> <label>: i,j,..` with members
    /// as universe ids.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        writeln!(out, "universe {}", self.universe.len()).unwrap();
        if self.universe.iter().enumerate().any(|(i, &u)| i as u64 != u) {
            writeln!(out, "ids {}", join(self.universe.iter())).unwrap();
        }
        for (i, s) in self.sets.iter().enumerate() {
            let ids = s.members.iter().map(|&m| self.universe[m as usize]);
            writeln!(out, "set {i} {}: {}", s.label, join(ids)).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut universe: Option<Vec<u64>> = None;
        let mut sets: Vec<(String, Vec<u64>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let bad = |reason: &str| Error::InstanceFormat { line, reason: reason.to_string() };
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            // a trailing solution block is not part of the instance
            if t.starts_with("solution ") {
                break;
            }
            if let Some(rest) = t.strip_prefix("universe ") {
                let n: u64 = rest.trim().parse().map_err(|_| bad("universe size is not a number"))?;
                universe = Some((0..n).collect());
            } else if let Some(rest) = t.strip_prefix("ids ") {
                let u = universe.as_ref().ok_or_else(|| bad("ids before universe header"))?;
                let ids = parse_ids(rest).ok_or_else(|| bad("bad id list"))?;
                if ids.len() != u.len() {
                    return Err(bad("id list length differs from universe size"));
                }
                universe = Some(ids);
            } else if let Some(rest) = t.strip_prefix("set ") {
                if universe.is_none() {
                    return Err(bad("set before universe header"));
                }
                let (head, members) = rest.rsplit_once(':').ok_or_else(|| bad("missing ':'"))?;
                let (id, label) = head.trim().split_once(' ').unwrap_or((head.trim(), ""));
                let id: usize = id.parse().map_err(|_| bad("set id is not a number"))?;
                if id != sets.len() {
                    return Err(bad("set ids must be consecutive from 0"));
                }
                let ids = parse_ids(members).ok_or_else(|| bad("bad member list"))?;
                sets.push((label.trim().to_string(), ids));
            } else {
                return Err(bad("unknown line"));
            }
        }
        let universe = universe.ok_or(Error::InstanceFormat { line: 0, reason: "missing universe header".into() })?;
        let index: FxHashMap<u64, ()> = universe.iter().map(|&u| (u, ())).collect();
        for (label, ids) in &sets {
            if let Some(bad) = ids.iter().find(|id| !index.contains_key(id)) {
                return Err(Error::InstanceFormat {
                    line: 0,
                    reason: format!("set {label} names unknown element {bad}"),
                });
            }
        }
        Ok(CoverInstance::new(universe, sets))
    }
}

fn join<T: std::fmt::Display>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_ids(s: &str) -> Option<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(vec![]);
    }
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    UpperBoundOnly,
    Infeasible,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Optimal => "optimal",
            Status::UpperBoundOnly => "upper-bound-only",
            Status::Infeasible => "infeasible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    /// Indices into the instance's sets, increasing.
    pub chosen: Vec<usize>,
    pub status: Status,
    pub lower_bound: usize,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl CoverSolution {
    pub fn size(&self) -> usize {
        self.chosen.len()
    }

    /// `solution <size>`, `status`, `lb`, `nodes`, then `set <id> <label>`
    /// for each chosen set.
    pub fn dump(&self, inst: &CoverInstance) -> String {
        let mut out = String::new();
        writeln!(out, "solution {}", self.size()).unwrap();
        writeln!(out, "status {}", self.status).unwrap();
        writeln!(out, "lb {}", self.lower_bound).unwrap();
        writeln!(out, "nodes {}", self.nodes).unwrap();
        for &s in &self.chosen {
            writeln!(out, "set {s} {}", inst.sets[s].label).unwrap();
        }
        out
    }
}

/// Search limits. With `deterministic` set, wall time is ignored so runs
/// are reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    pub deterministic: bool,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, max_time: None, deterministic: true }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX, max_time: None, deterministic: true }
    }

    pub fn time(max_time: Duration) -> Self {
        Budget { max_nodes: u64::MAX, max_time: Some(max_time), deterministic: false }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 50_000_000, max_time: Some(Duration::from_secs(60)), deterministic: false }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CoverInstance {
        CoverInstance::new(
            vec![1, 2, 3],
            [("a".into(), vec![1, 2]), ("b".into(), vec![2, 3]), ("c".into(), vec![3, 9])],
        )
    }

    #[test]
    fn restriction_and_cover() {
        let i = small();
        assert_eq!(i.sets[2].members, vec![2]);
        assert!(i.is_cover(&[0, 1]));
        assert!(!i.is_cover(&[0]));
        assert_eq!(i.uncoverable_element(), None);
        let j = CoverInstance::new(vec![1, 2], [("a".into(), vec![1])]);
        assert_eq!(j.uncoverable_element(), Some(2));
    }

    #[test]
    fn dump_round_trip() {
        let i = small();
        let text = i.dump();
        assert!(text.starts_with("universe 3\nids 1,2,3\n"));
        assert_eq!(CoverInstance::parse(&text).unwrap(), i);
        let plain = CoverInstance::new(vec![0, 1], [("P:PGL25^(1,2)".into(), vec![0, 1])]);
        assert_eq!(CoverInstance::parse(&plain.dump()).unwrap(), plain);
        assert!(CoverInstance::parse("set 0 a: 1").is_err());
        assert!(CoverInstance::parse("universe 2\nset 0 a: 5").is_err());
    }

    #[test]
    fn trailing_solution_ignored() {
        let i = small();
        let sol = CoverSolution {
            chosen: vec![0, 1],
            status: Status::Optimal,
            lower_bound: 2,
            nodes: 1,
            elapsed: Default::default(),
        };
        let text = format!("{}{}", i.dump(), sol.dump(&i));
        assert_eq!(CoverInstance::parse(&text).unwrap(), i);
    }
}
