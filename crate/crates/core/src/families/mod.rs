//! Conjugacy families of maximal subgroups of `S_n`, their orders and their
//! intersections with conjugacy classes.

mod catalog;
mod counts;
mod unbeatable;

use std::fmt;

use serde::Serialize;

pub use catalog::{Catalog, Maximality, PrimitiveCatalogEntry};
pub use counts::{
    block_systems_fixed_by, bounds_3_2a, imprimitive_order_max, intersect_alt, intersect_blockstab,
    intersect_blockstab_half, intersect_primitive, intersect_setstab, pgl2_fullcycle_count, primitive_order_bound,
    trivial_upper_bound, wreath_order,
};
pub use unbeatable::{c_ratio, unbeatable_certificate, Competitor, Evidence, UnbeatableReport, Verdict};

use crate::combinat::{binomial, factorial, Nat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    Alternating,
    /// Stabilizers of `m`-sets; with an anchor, only sets containing that
    /// (1-based) point.
    SetStab {
        m: u32,
        anchor: Option<u32>,
    },
    /// Stabilizers of partitions into blocks of size `d`.
    BlockStab {
        d: u32,
    },
    Primitive {
        id: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub n: u32,
    pub kind: FamilyKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStats {
    pub order: Nat,
    pub index: Nat,
    pub count: Nat,
}

impl FamilySpec {
    pub fn alternating(n: u32) -> Self {
        FamilySpec { n, kind: FamilyKind::Alternating }
    }

    /// `1 <= m < n/2`.
    pub fn set_stab(n: u32, m: u32) -> Result<Self> {
        if m == 0 || 2 * m >= n {
            return Err(Error::InvalidFamily(format!("set stabilizer X{m} needs 1 <= m < n/2 at n = {n}")));
        }
        Ok(FamilySpec { n, kind: FamilyKind::SetStab { m, anchor: None } })
    }

    /// Stabilizers of `m`-sets containing `point` (1-based), `1 <= m < n`.
    pub fn anchored(n: u32, m: u32, point: u32) -> Result<Self> {
        if m == 0 || m >= n || point == 0 || point > n {
            return Err(Error::InvalidFamily(format!("anchored X{m}@{point} at n = {n}")));
        }
        Ok(FamilySpec { n, kind: FamilyKind::SetStab { m, anchor: Some(point) } })
    }

    /// Block size `d`, a proper nontrivial divisor of `n`.
    pub fn block_stab(n: u32, d: u32) -> Result<Self> {
        if d <= 1 || d >= n || !n.is_multiple_of(d) {
            return Err(Error::InvalidFamily(format!("block size {d} does not properly divide {n}")));
        }
        Ok(FamilySpec { n, kind: FamilyKind::BlockStab { d } })
    }

    pub fn primitive(n: u32, id: &str) -> Self {
        FamilySpec { n, kind: FamilyKind::Primitive { id: id.to_string() } }
    }

    /// Reads `A`, `X2`, `X4@1`, `W5` or `P:PGL25`.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::InvalidFamily(format!("cannot read family {t:?}"));
        if t == "A" || t == "Alt" {
            return Ok(Self::alternating(n));
        }
        if let Some(id) = t.strip_prefix("P:") {
            return Ok(Self::primitive(n, id));
        }
        if let Some(rest) = t.strip_prefix('X') {
            return match rest.split_once('@') {
                Some((m, p)) => Self::anchored(n, m.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?),
                None => Self::set_stab(n, rest.parse().map_err(|_| bad())?),
            };
        }
        if let Some(rest) = t.strip_prefix('W') {
            return Self::block_stab(n, rest.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FamilyKind::Alternating => write!(f, "A"),
            FamilyKind::SetStab { m, anchor: None } => write!(f, "X{m}"),
            FamilyKind::SetStab { m, anchor: Some(p) } => write!(f, "X{m}@{p}"),
            FamilyKind::BlockStab { d } => write!(f, "W{d}"),
            FamilyKind::Primitive { id } => write!(f, "P:{id}"),
        }
    }
}

/// Order, index and number of members of a family.
pub fn family_stats(spec: &FamilySpec, catalog: &Catalog) -> Result<FamilyStats> {
    let n = spec.n as u64;
    let nf = factorial(n);
    let (order, count) = match &spec.kind {
        FamilyKind::Alternating => (&nf / 2u32, Nat::from(1u32)),
        FamilyKind::SetStab { m, anchor } => {
            let m = *m as u64;
            let order = factorial(m) * factorial(n - m);
            let count = if anchor.is_some() { binomial(n - 1, m - 1) } else { binomial(n, m) };
            (order, count)
        }
        FamilyKind::BlockStab { d } => {
            let order = wreath_order(spec.n, *d);
            let count = &nf / &order;
            (order, count)
        }
        FamilyKind::Primitive { id } => {
            let e = catalog.get(spec.n, id)?;
            (e.order.clone(), e.conjugates.clone())
        }
    };
    let index = &nf / &order;
    Ok(FamilyStats { order, index, count })
}

/// The families making up the maximal subgroups of `S_n`: `A_n`, `X_m` for
/// `1 <= m < n/2`, `W_d` for proper divisors `d`, and catalogued primitives.
pub fn maximal_families(n: u32, catalog: &Catalog) -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::alternating(n)];
    for m in 1..n {
        if 2 * m < n {
            out.push(FamilySpec { n, kind: FamilyKind::SetStab { m, anchor: None } });
        }
    }
    for d in 2..n {
        if n.is_multiple_of(d) {
            out.push(FamilySpec { n, kind: FamilyKind::BlockStab { d } });
        }
    }
    for e in catalog.for_degree(n) {
        out.push(FamilySpec::primitive(n, &e.name));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_examples() {
        let cat = Catalog::builtin();
        let w = family_stats(&FamilySpec::block_stab(8, 4).unwrap(), cat).unwrap();
        assert_eq!(w.count, Nat::from(35u32));
        let x = family_stats(&FamilySpec::set_stab(10, 2).unwrap(), cat).unwrap();
        assert_eq!(x.count, Nat::from(45u32));
        assert_eq!(x.order, factorial(2) * factorial(8));
        let a = family_stats(&FamilySpec::alternating(6), cat).unwrap();
        assert_eq!((a.order, a.index), (Nat::from(360u32), Nat::from(2u32)));
        let anch = family_stats(&FamilySpec::anchored(12, 4, 1).unwrap(), cat).unwrap();
        assert_eq!(anch.count, Nat::from(165u32));
        assert!(family_stats(&FamilySpec::primitive(7, "X"), cat).is_err());
    }

    #[test]
    fn order_times_index() {
        let cat = Catalog::builtin();
        for n in 3..=60 {
            for spec in maximal_families(n, cat) {
                let s = family_stats(&spec, cat).unwrap();
                assert_eq!(&s.order * &s.index, factorial(n as u64), "{spec} at {n}");
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(FamilySpec::parse(14, "W7").unwrap(), FamilySpec::block_stab(14, 7).unwrap());
        assert_eq!(FamilySpec::parse(12, "X4@1").unwrap().to_string(), "X4@1");
        assert!(FamilySpec::parse(8, "W3").is_err());
        assert!(FamilySpec::parse(8, "X4").is_err());
        assert_eq!(FamilySpec::parse(6, "P:PGL25").unwrap().to_string(), "P:PGL25");
    }

    #[test]
    fn s6_family_sizes() {
        let cat = Catalog::builtin();
        let total: Nat = maximal_families(6, cat).iter().map(|s| family_stats(s, cat).unwrap().count).sum();
        assert_eq!(total, Nat::from(53u32));
    }
}
