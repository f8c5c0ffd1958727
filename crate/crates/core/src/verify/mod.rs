//! Machine checks of the combinatorial and group-theoretic claims, with
//! exact witnesses. Each check has a stable id; [`run_check`] dispatches on
//! it and [`MANIFEST`] records which result each id is responsible for.

mod counts;
mod heavy;
mod inequalities;
mod report;
mod small;
mod table;
mod unbeatable;

pub use counts::*;
pub use heavy::*;
pub use inequalities::*;
pub use report::{csv_field, render, CheckReport, Format, Verdict, Witness};
pub use small::*;
pub use table::*;
pub use unbeatable::*;

use crate::cover::Budget;
use crate::error::{Error, Result};
use crate::families::Catalog;
use crate::permgroup::Corpus;

/// Parameters shared by all checks; each check reads the ones it needs.
#[derive(Clone, Debug)]
pub struct Params<'a> {
    /// A single degree (or exponent for the `3·2^a` check, see [`run_check`]).
    pub n: Option<u32>,
    pub max: Option<u32>,
    pub budget: Budget,
    /// Enables element-level sweeps that take more than a few seconds.
    pub heavy: bool,
    pub catalog: &'a Catalog,
    pub corpus: &'a Corpus,
}

impl Default for Params<'static> {
    fn default() -> Self {
        Params {
            n: None,
            max: None,
            budget: Budget::default(),
            heavy: false,
            catalog: Catalog::builtin(),
            corpus: Corpus::builtin(),
        }
    }
}

pub const CHECK_IDS: &[&str] = &[
    "lemma-swap",
    "lemma-ab",
    "order-dominance",
    "f-char",
    "solvable",
    "quotient",
    "single-class",
    "s5",
    "s6",
    "power2",
    "unbeatable",
    "s32a",
    "s10",
    "table",
    "stirling",
    "subsum",
    "counts",
    "oracle",
    "trivial-bound",
];

/// Results and the checks that touch them.
pub const MANIFEST: &[(&str, &[&str])] = &[
    ("solvable groups: two when G/G' is not a p-group, the covering number otherwise", &["solvable"]),
    ("primary covering number bounded by the covering number and by quotients", &["quotient"]),
    ("no single conjugacy class of proper subgroups covers the primary elements", &["single-class"]),
    ("factorial swap inequality", &["lemma-swap"]),
    ("wreath orders are largest with the smallest prime number of blocks", &["lemma-ab"]),
    ("maximal subgroup orders are at most the half-split bound", &["order-dominance"]),
    ("half-block stabilizer count on 2-power classes", &["oracle", "counts"]),
    ("trivial upper bounds", &["trivial-bound"]),
    ("degrees that are powers of two", &["power2"]),
    ("degree five", &["s5"]),
    ("the f(n) < 1 characterization", &["f-char"]),
    ("set stabilizers strongly unbeatable on the generic class", &["unbeatable"]),
    ("set stabilizers on the case-by-case degrees", &["unbeatable"]),
    ("degree ten", &["s10", "counts"]),
    ("degree six", &["s6", "counts"]),
    ("sub-sums of 2-power partitions", &["subsum"]),
    ("bounds for degrees three times a power of two", &["s32a", "counts"]),
    ("the value table for symmetric groups", &["table"]),
    ("Stirling lower bound, sanity only", &["stirling"]),
];

fn one(r: CheckReport) -> Result<Vec<CheckReport>> {
    Ok(vec![r])
}

fn bad_param(id: &str, what: String) -> Error {
    Error::Usage(format!("{id}: {what}"))
}

/// Runs one check. `--n` selects a degree where a check has one (`power2`
/// takes `n = 2^a`, `s32a` takes `n = 3·2^a`); without it the default range
/// is used.
pub fn run_check(id: &str, p: &Params) -> Result<Vec<CheckReport>> {
    let max = |d: u32| p.max.unwrap_or(d);
    match id {
        "lemma-swap" => one(check_lemma_swap(max(40) as u64)),
        "lemma-ab" => one(check_lemma_ab(max(60) as u64)),
        "order-dominance" => {
            let (lo, hi) = match p.n {
                Some(n) => (n, n),
                None => (12, max(60)),
            };
            one(check_order_dominance(lo as u64, hi as u64))
        }
        "f-char" => one(check_f_characterization(max(500) as u64)),
        "stirling" => one(check_stirling(max(200) as u64)),
        "solvable" => one(check_solvable(p.corpus)?),
        "quotient" => one(check_quotient(p.corpus)?),
        "single-class" => one(check_single_class(p.corpus)?),
        "s5" => one(check_s5(p.catalog)?),
        "s6" => one(check_s6(p.catalog)?),
        "power2" => match p.n {
            Some(n) if n.is_power_of_two() && n >= 4 => one(check_power2(n.trailing_zeros(), p.catalog)?),
            Some(n) => Err(bad_param(id, format!("{n} is not a power of two >= 4"))),
            None => (2..=5).map(|a| check_power2(a, p.catalog)).collect(),
        },
        "unbeatable" => match p.n {
            Some(n) => one(check_unbeatable(n, p.catalog)?),
            None => one(check_unbeatable_range(max(200), p.catalog)?),
        },
        "s32a" => match p.n {
            Some(n) if n % 3 == 0 && (n / 3).is_power_of_two() && n >= 12 => {
                one(check_32a((n / 3).trailing_zeros(), p.heavy, p.catalog)?)
            }
            Some(n) => Err(bad_param(id, format!("{n} is not 3·2^a with a >= 2"))),
            None => (2..=5).map(|a| check_32a(a, p.heavy && a == 2, p.catalog)).collect(),
        },
        "s10" => one(check_s10(p.budget, p.catalog)?),
        "table" => one(check_table(max(64), true, p.catalog)?),
        "subsum" => one(check_subsum(max(6))),
        "counts" => one(check_counts(p.catalog)?),
        "oracle" => one(check_oracle(max(8), p.catalog)?),
        "trivial-bound" => one(check_trivial_bound(max(32), p.catalog)?),
        _ => Err(Error::UnknownCheck(id.to_string())),
    }
}

/// Every registered check with its default range.
pub fn run_all(p: &Params) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for id in CHECK_IDS {
        let p = Params { n: None, max: None, ..p.clone() };
        out.extend(run_check(id, &p)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn manifest_matches_registry() {
        let registry: BTreeSet<&str> = CHECK_IDS.iter().copied().collect();
        let covered: BTreeSet<&str> = MANIFEST.iter().flat_map(|(_, ids)| ids.iter().copied()).collect();
        assert_eq!(registry, covered);
        assert_eq!(registry.len(), CHECK_IDS.len());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(run_check("nope", &Params::default()), Err(Error::UnknownCheck(_))));
        let p = Params { n: Some(6), ..Params::default() };
        assert!(run_check("power2", &p).is_err());
    }
}
