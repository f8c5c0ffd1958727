use std::path::Path;
use std::sync::OnceLock;

use super::group::ConcreteGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/corpus.txt");

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl CorpusEntry {
    pub fn group(&self) -> Result<ConcreteGroup> {
        ConcreteGroup::close(self.degree, &self.generators)
    }
}

/// Named small groups, `name;degree;g1|g2|...` per line.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::Corpus { line, reason };
            let fields: Vec<&str> = t.split(';').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(bad(format!("expected 3 fields, found {}", fields.len())));
            }
            let degree: usize = fields[1].parse().map_err(|_| bad("degree is not a number".into()))?;
            let generators = fields[2]
                .split('|')
                .map(|g| Perm::parse(g, degree))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| bad(e.to_string()))?;
            entries.push(CorpusEntry { name: fields[0].to_string(), degree, generators });
        }
        Ok(Corpus { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Corpus { line: 0, reason: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    pub fn builtin() -> &'static Corpus {
        static C: OnceLock<Corpus> = OnceLock::new();
        C.get_or_init(|| Corpus::parse(BUILTIN).expect("shipped corpus is valid"))
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// `Sn`, `An`, or a corpus name.
pub fn resolve_group(name: &str, corpus: &Corpus) -> Result<ConcreteGroup> {
    if let Some(e) = corpus.get(name) {
        return e.group();
    }
    let degree = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=super::perm::MAX_DEGREE).contains(&n));
    if let Some(n) = name.strip_prefix('S').and_then(degree) {
        return ConcreteGroup::symmetric(n);
    }
    if let Some(n) = name.strip_prefix('A').and_then(degree) {
        return ConcreteGroup::alternating(n);
    }
    Err(Error::Corpus { line: 0, reason: format!("unknown group {name:?}") })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders() {
        let c = Corpus::builtin();
        let expect = [
            ("C6", 6),
            ("C12", 12),
            ("Q8", 8),
            ("D8", 8),
            ("D10", 10),
            ("D12", 12),
            ("F20", 20),
            ("C3:C4", 12),
            ("C5:C4", 20),
            ("S3xC3", 18),
            ("A4xC2", 24),
            ("SL(2,3)", 24),
            ("GL(2,3)", 48),
            ("A6", 360),
        ];
        for (name, order) in expect {
            assert_eq!(c.get(name).unwrap().group().unwrap().order(), order, "{name}");
        }
        let q8 = c.get("Q8").unwrap().group().unwrap();
        assert_eq!(q8.elements().iter().filter(|p| p.order() == 2).count(), 1);
        assert!(c.entries().len() >= 15);
    }

    #[test]
    fn resolving() {
        let c = Corpus::builtin();
        assert_eq!(resolve_group("S7", c).unwrap().order(), 5040);
        assert_eq!(resolve_group("A4", c).unwrap().order(), 12);
        assert!(resolve_group("Z9", c).is_err());
    }
}
