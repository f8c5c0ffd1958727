use std::path::Path;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, Nat};
use crate::error::{Error, Result};
use crate::permgroup::{ConcreteGroup, Perm};

const BUILTIN: &str = include_str!("../../data/primitive_catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Maximality {
    /// Confirmed against the full subgroup lattice.
    Verified,
    /// Taken from the literature.
    Assumed,
}

#[derive(Clone, Debug)]
pub struct PrimitiveCatalogEntry {
    pub n: u32,
    pub name: String,
    pub order: Nat,
    pub conjugates: Nat,
    pub maximality: Maximality,
    pub generators: Vec<Perm>,
    group: Arc<ConcreteGroup>,
}

impl PrimitiveCatalogEntry {
    /// The group generated by the listed generators.
    pub fn group(&self) -> &Arc<ConcreteGroup> {
        &self.group
    }
}

/// Primitive maximal subgroups of `S_n`, one line per conjugacy class.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<PrimitiveCatalogEntry>,
}

impl Catalog {
    /// Parses and validates `n;name;order;conjugates;maximality;g1|g2|...`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::Catalog { line, reason };
            let fields: Vec<&str> = t.split(';').map(str::trim).collect();
            if fields.len() != 6 {
                return Err(bad(format!("expected 6 fields, found {}", fields.len())));
            }
            let n: u32 = fields[0].parse().map_err(|_| bad("degree is not a number".into()))?;
            let name = fields[1].to_string();
            let order: Nat = fields[2].parse().map_err(|_| bad("order is not a number".into()))?;
            let conjugates: Nat = fields[3].parse().map_err(|_| bad("conjugate count is not a number".into()))?;
            let maximality = match fields[4] {
                "verified" => Maximality::Verified,
                "assumed" => Maximality::Assumed,
                other => return Err(bad(format!("unknown maximality status {other:?}"))),
            };
            let generators = fields[5]
                .split('|')
                .map(|g| Perm::parse(g, n as usize))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| bad(e.to_string()))?;
            let group = ConcreteGroup::close(n as usize, &generators).map_err(|e| bad(e.to_string()))?;
            if Nat::from(group.order()) != order {
                return Err(bad(format!("generators give order {}, listed {order}", group.order())));
            }
            if &order * &conjugates != factorial(n as u64) {
                return Err(bad("order times conjugates is not n!".into()));
            }
            if !group.is_primitive() {
                return Err(bad("group is not primitive".into()));
            }
            entries.push(PrimitiveCatalogEntry {
                n,
                name,
                order,
                conjugates,
                maximality,
                generators,
                group: Arc::new(group),
            });
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog { line: 0, reason: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(BUILTIN).expect("shipped catalog is valid"))
    }

    pub fn entries(&self) -> &[PrimitiveCatalogEntry] {
        &self.entries
    }

    pub fn for_degree(&self, n: u32) -> impl Iterator<Item = &PrimitiveCatalogEntry> {
        self.entries.iter().filter(move |e| e.n == n)
    }

    /// Degrees with at least one entry.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.entries.iter().map(|e| e.n).collect();
        d.dedup();
        d
    }

    pub fn get(&self, n: u32, name: &str) -> Result<&PrimitiveCatalogEntry> {
        self.for_degree(n).find(|e| e.name == name).ok_or_else(|| Error::UnknownCatalogId { n, name: name.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let c = Catalog::builtin();
        assert_eq!(c.degrees(), vec![5, 6, 7, 8, 9, 10, 11, 12, 13]);
        assert_eq!(c.get(10, "PGammaL29").unwrap().order, Nat::from(1440u32));
        assert!(c.get(10, "nope").is_err());
    }

    #[test]
    fn validation() {
        assert!(Catalog::parse("5;F20;21;6;verified;(1,2,3,4,5)|(2,3,5,4)").is_err());
        assert!(Catalog::parse("5;F20;20;6;verified").is_err());
        assert!(Catalog::parse("4;D8;8;3;assumed;(1,2,3,4)|(1,3)").is_err());
        let c = Catalog::parse("# c\n\n6;PGL25;120;6;assumed;(3,4,6,5)|(1,2,3)(4,5,6)\n").unwrap();
        assert_eq!(c.entries()[0].maximality, Maximality::Assumed);
    }
}
