use num_traits::Zero;
use serde::Serialize;

use super::counts::{
    intersect_blockstab, intersect_blockstab_half, intersect_primitive, intersect_setstab, primitive_order_bound,
    wreath_order,
};
use super::{Catalog, FamilyKind, FamilySpec, Maximality};
use crate::combinat::{format_ratio, hypothesis_domain, pi_class, ratio, ExactRatio, Nat, Partition};
use crate::error::{Error, Result};

/// Exact counts of `W_d ∩ Π` are computed by block-system enumeration up to
/// this degree.
const EXACT_BLOCK_LIMIT: u32 = 16;

fn target(n: u32) -> Result<(Partition, u32, Nat)> {
    let pi = pi_class(n as u64)?;
    let n2 = 1u32 << n.trailing_zeros();
    let t = intersect_setstab(&pi, n2);
    Ok((pi, n2, t))
}

/// Upper bound on `c(M) = |M ∩ Π| / |X_{n_2} ∩ Π|`: exact for set
/// stabilizers and for `W_{n/2}` when the half-block formula applies, and
/// `|M| / |X_{n_2} ∩ Π|` otherwise.
pub fn c_ratio(spec: &FamilySpec, catalog: &Catalog) -> Result<ExactRatio> {
    let n = spec.n;
    let (pi, _, den) = target(n)?;
    let num = match &spec.kind {
        FamilyKind::Alternating => Nat::zero(),
        FamilyKind::SetStab { m, .. } => intersect_setstab(&pi, *m),
        FamilyKind::BlockStab { d } => {
            if 2 * d == n {
                intersect_blockstab_half(&pi).unwrap_or_else(|_| wreath_order(n, *d))
            } else {
                wreath_order(n, *d)
            }
        }
        FamilyKind::Primitive { id } => catalog.get(n, id)?.order.clone(),
    };
    Ok(ratio(&num, &den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// `|M ∩ Π|` computed exactly.
    Exact { count: String },
    /// Only `|M ∩ Π| < |M| <= bound` is known.
    OrderBound { bound: String, assumed: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Below,
    Equal,
    Above,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct Competitor {
    pub family: String,
    pub evidence: Evidence,
    /// `c(M)` or its upper bound, as a reduced fraction or decimal.
    pub ratio: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Every competitor meets `Π` in strictly fewer elements.
    Strong,
    /// Unbeatable, but these families tie.
    NonStrong {
        ties: Vec<String>,
    },
    Beaten {
        by: String,
        count: String,
    },
    /// Some competitor is only bounded, and the bound is too weak.
    Inconclusive {
        undecided: Vec<String>,
    },
    /// Some element of `Π` does not stabilize exactly one `n_2`-set.
    CoverageFails,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnbeatableReport {
    pub n: u32,
    pub pi: String,
    pub n2: u32,
    /// `|X_{n_2} ∩ Π|`.
    pub target: String,
    /// Number of subsets of the cycles of an element of `Π` of total size
    /// `n_2`; coverage and disjointness both hold exactly when it is 1.
    pub n2_subsets: u64,
    pub competitors: Vec<Competitor>,
    pub verdict: Verdict,
    pub assumed_inputs: Vec<String>,
}

fn subsets_with_sum(parts: &[u32], target: u32) -> u64 {
    let mut ways = vec![0u64; target as usize + 1];
    ways[0] = 1;
    for &p in parts {
        for s in (p as usize..=target as usize).rev() {
            ways[s] += ways[s - p as usize];
        }
    }
    ways[target as usize]
}

/// Checks that the `n_2`-set stabilizers are strongly definitely unbeatable
/// on `Π`: each element of `Π` lies in exactly one of them, and every other
/// maximal subgroup meets `Π` in fewer elements than `|X_{n_2} ∩ Π|`.
pub fn unbeatable_certificate(n: u32, catalog: &Catalog) -> Result<UnbeatableReport> {
    if n < 5 {
        return Err(Error::Domain { n: n as u64, reason: "needs n >= 5".into() });
    }
    hypothesis_domain(n as u64)?;
    let (pi, n2, t) = target(n)?;
    let n2_subsets = subsets_with_sum(pi.parts(), n2);
    let mut assumed_inputs = Vec::new();
    let mut competitors = Vec::new();
    let judge_exact = |c: &Nat| {
        if c < &t {
            Outcome::Below
        } else if c == &t {
            Outcome::Equal
        } else {
            Outcome::Above
        }
    };
    let mut push_exact = |family: String, c: Nat| {
        competitors.push(Competitor {
            ratio: format_ratio(&ratio(&c, &t)),
            outcome: judge_exact(&c),
            evidence: Evidence::Exact { count: c.to_string() },
            family,
        })
    };

    push_exact("A".into(), Nat::zero());
    for m in 1..n {
        if 2 * m >= n || m == n2 {
            continue;
        }
        push_exact(format!("X{m}"), intersect_setstab(&pi, m));
    }
    let mut bounded: Vec<(String, Nat, bool)> = Vec::new();
    for d in 2..n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let half = if 2 * d == n { intersect_blockstab_half(&pi).ok() } else { None };
        if let Some(c) = half {
            push_exact(format!("W{d}"), c);
        } else if n <= EXACT_BLOCK_LIMIT {
            push_exact(format!("W{d}"), intersect_blockstab(&pi, d)?);
        } else {
            bounded.push((format!("W{d}"), wreath_order(n, d), false));
        }
    }
    let entries: Vec<_> = catalog.for_degree(n).collect();
    if entries.is_empty() {
        bounded.push(("P".into(), primitive_order_bound(n), true));
        assumed_inputs.push(format!("primitive groups of degree {n} have order below {}", primitive_order_bound(n)));
    } else {
        for e in &entries {
            push_exact(format!("P:{}", e.name), intersect_primitive(&pi, e));
        }
        assumed_inputs.push(format!("the primitive catalog lists every primitive maximal class of degree {n}"));
        if entries.iter().any(|e| e.maximality == Maximality::Assumed) {
            assumed_inputs.push(format!("maximality of catalogued primitives of degree {n}"));
        }
    }
    for (family, b, assumed) in bounded {
        // |M ∩ Π| <= |M| - 1 since the identity is not in Π
        let outcome = if b <= t { Outcome::Below } else { Outcome::Undecided };
        competitors.push(Competitor {
            ratio: format_ratio(&ratio(&b, &t)),
            outcome,
            evidence: Evidence::OrderBound { bound: b.to_string(), assumed },
            family,
        });
    }

    let verdict = if n2_subsets != 1 {
        Verdict::CoverageFails
    } else if let Some(c) =
        competitors.iter().filter(|c| c.outcome == Outcome::Above).max_by_key(|c| match &c.evidence {
            Evidence::Exact { count } => count.parse::<Nat>().unwrap_or_default(),
            Evidence::OrderBound { .. } => Nat::zero(),
        })
    {
        let count = match &c.evidence {
            Evidence::Exact { count } => count.clone(),
            Evidence::OrderBound { bound, .. } => bound.clone(),
        };
        Verdict::Beaten { by: c.family.clone(), count }
    } else {
        let undecided: Vec<String> =
            competitors.iter().filter(|c| c.outcome == Outcome::Undecided).map(|c| c.family.clone()).collect();
        let ties: Vec<String> =
            competitors.iter().filter(|c| c.outcome == Outcome::Equal).map(|c| c.family.clone()).collect();
        if !undecided.is_empty() {
            Verdict::Inconclusive { undecided }
        } else if !ties.is_empty() {
            Verdict::NonStrong { ties }
        } else {
            Verdict::Strong
        }
    };
    Ok(UnbeatableReport {
        n,
        pi: pi.to_string(),
        n2,
        target: t.to_string(),
        n2_subsets,
        competitors,
        verdict,
        assumed_inputs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(n: u32) -> Verdict {
        unbeatable_certificate(n, Catalog::builtin()).unwrap().verdict
    }

    #[test]
    fn paper_cases() {
        assert_eq!(verdict(5), Verdict::Beaten { by: "P:F20".into(), count: "10".into() });
        assert_eq!(verdict(10), Verdict::Beaten { by: "W5".into(), count: "1800".into() });
        for n in [9, 11, 13, 14, 18, 20, 40] {
            assert_eq!(verdict(n), Verdict::Strong, "n = {n}");
        }
    }

    #[test]
    fn degree_seven_ties_with_two_sets() {
        let r = unbeatable_certificate(7, Catalog::builtin()).unwrap();
        assert_eq!(r.target, "15");
        assert_eq!(r.verdict, Verdict::NonStrong { ties: vec!["X2".into()] });
        let agl = r.competitors.iter().find(|c| c.family == "P:AGL17").unwrap();
        assert_eq!(agl.evidence, Evidence::Exact { count: "7".into() });
    }

    #[test]
    fn ratios() {
        let cat = Catalog::builtin();
        let w7 = c_ratio(&FamilySpec::block_stab(14, 7).unwrap(), cat).unwrap();
        assert_eq!(w7, ratio(&Nat::from(3175200u32), &Nat::from(14968800u32)));
        let p = c_ratio(&FamilySpec::primitive(11, "AGL111"), cat).unwrap();
        assert_eq!(p, ratio(&Nat::from(110u32), &Nat::from(56700u32)));
        let x = c_ratio(&FamilySpec::set_stab(11, 2).unwrap(), cat).unwrap();
        assert!(x < ExactRatio::from_integer(1.into()));
    }

    #[test]
    fn excluded_degrees_rejected() {
        assert!(unbeatable_certificate(12, Catalog::builtin()).is_err());
        assert!(unbeatable_certificate(16, Catalog::builtin()).is_err());
    }
}
