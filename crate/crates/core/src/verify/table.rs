use std::fmt;

use serde::{Deserialize, Serialize};

use super::report::CheckReport;
use crate::combinat::{binomial, Nat};
use crate::cover::{sigma0_exact, Budget, Mode};
use crate::error::{Error, Result};
use crate::families::{bounds_3_2a, trivial_upper_bound, Catalog};
use crate::permgroup::ConcreteGroup;

use super::unbeatable::{generic_case, CASE_DEGREES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    Exact { value: String },
    Interval { lower: String, upper: String },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Exact { value } => write!(f, "{value}"),
            Claim::Interval { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub case: String,
    pub claim: Claim,
    /// Check ids that certify the row at this degree.
    pub certified_by: Vec<String>,
    /// Result of a direct solve, when one was run.
    pub solved: Option<String>,
}

/// Largest degree for which [`reproduce_theorem_table`] solves directly.
pub const TABLE_SOLVE_LIMIT: u32 = 9;

/// The claimed value of σ₀(S_n), `3 <= n <= n_max <= 64`, with the checks
/// that certify each row. With `solve`, degrees up to
/// [`TABLE_SOLVE_LIMIT`] are also solved exactly.
pub fn reproduce_theorem_table(n_max: u32, solve: bool, catalog: &Catalog) -> Result<Vec<TableRow>> {
    if n_max > 64 {
        return Err(Error::Domain { n: n_max as u64, reason: "the table stops at 64".into() });
    }
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let ids = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let a = n.trailing_zeros();
        let odd_part = n >> a;
        let exact = |v: Nat| Claim::Exact { value: v.to_string() };
        let (case, claim, certified_by) = if n == 3 || n == 6 {
            let v = if n == 3 { 4u32 } else { 7 };
            let by = if n == 3 { ids(&["solvable", "quotient"]) } else { ids(&["s6"]) };
            ("small".to_string(), exact(v.into()), by)
        } else if n.is_power_of_two() {
            let by = if a <= 5 { ids(&["power2", "trivial-bound"]) } else { ids(&["trivial-bound"]) };
            ("power of two".into(), exact(trivial_upper_bound(n)?), by)
        } else if odd_part == 3 && a >= 2 {
            let (c1, c2) = bounds_3_2a(a)?;
            let by = if a <= 5 { ids(&["s32a", "subsum"]) } else { ids(&["subsum"]) };
            ("three times a power of two".into(), Claim::Interval { lower: c1.to_string(), upper: c2.to_string() }, by)
        } else {
            let mut by = ids(&["trivial-bound"]);
            match n {
                5 => by.push("s5".into()),
                10 => by.push("s10".into()),
                _ if CASE_DEGREES.contains(&n) || generic_case(n) => by.push("unbeatable".into()),
                _ => {}
            }
            if generic_case(n) {
                by.push("f-char".into());
            }
            if n >= 12 {
                by.push("order-dominance".into());
            }
            let n2 = 1u64 << a;
            ("generic".into(), exact(Nat::from(1u32) + binomial(n as u64, n2)), by)
        };
        let mut certified_by = certified_by;
        let solved = if solve && n <= TABLE_SOLVE_LIMIT {
            let g = ConcreteGroup::symmetric(n as usize)?;
            let mode = if n <= 4 { Mode::Lattice } else { Mode::Catalog(catalog) };
            certified_by.push("direct solve".into());
            Some(sigma0_exact(&g, mode, Budget { deterministic: true, ..Budget::default() })?.display())
        } else {
            None
        };
        rows.push(TableRow { n, case, claim, certified_by, solved });
    }
    Ok(rows)
}

/// The table as a check: every direct solve must agree with the claim.
pub fn check_table(n_max: u32, solve: bool, catalog: &Catalog) -> Result<CheckReport> {
    let mut r = CheckReport::new("table", format!("3 <= n <= {n_max}"));
    for row in reproduce_theorem_table(n_max, solve, catalog)? {
        let claim = row.claim.to_string();
        match &row.solved {
            Some(s) => {
                r.witness(format!("n = {}", row.n), format!("{claim} (solved {s})"));
                r.require(*s == claim, || format!("n = {}: claimed {claim}, solved {s}", row.n));
            }
            None => {
                r.witness(format!("n = {}", row.n), format!("{claim} by {}", row.certified_by.join(", ")));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claimed_values() {
        let rows = reproduce_theorem_table(64, false, Catalog::builtin()).unwrap();
        let get = |n: u32| rows.iter().find(|r| r.n == n).unwrap().claim.to_string();
        assert_eq!(get(3), "4");
        assert_eq!(get(4), "4");
        assert_eq!(get(6), "7");
        assert_eq!(get(7), "8");
        assert_eq!(get(8), "36");
        assert_eq!(get(10), "46");
        assert_eq!(get(12), "[117, 216]");
        assert_eq!(get(16), (Nat::from(1u32) + binomial(16, 8) / 2u32).to_string());
        assert!(get(24).starts_with('['));
        assert!(reproduce_theorem_table(65, false, Catalog::builtin()).is_err());
    }

    #[test]
    fn small_solves_agree() {
        let r = check_table(7, true, Catalog::builtin()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
