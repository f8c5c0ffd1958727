use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::group::{symmetric_generators, ConcreteGroup};
use super::perm::Perm;
use crate::combinat::Parity;
use crate::error::{Error, Result};
use crate::families::{family_stats, maximal_families, Catalog, FamilyKind, FamilySpec, Maximality};

/// Degree bound for realizing family members concretely.
pub const DEFAULT_MEMBER_DEGREE_CAP: u32 = 12;
/// Bound on the number of members materialized for one family.
pub const DEFAULT_MEMBER_COUNT_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub enum MemberShape {
    Alternating,
    /// Stabilizer of the point set `mask` (0-based bits).
    SetStab(u32),
    /// Stabilizer of a partition into blocks, as sorted masks.
    BlockStab(Vec<u32>),
    /// `base^by = { by^-1 p by : p in base }`.
    Conjugate {
        base: Arc<ConcreteGroup>,
        by: Perm,
        by_inv: Perm,
    },
}

/// One concrete subgroup of `S_n` from a family.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub degree: usize,
    pub family: String,
    pub shape: MemberShape,
    /// True when maximality is taken from the literature rather than checked.
    pub assumed: bool,
}

fn mask_text(mask: u32) -> String {
    let pts: Vec<String> = (0..32).filter(|i| mask & (1 << i) != 0).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", pts.join(","))
}

impl FamilyMember {
    #[inline]
    pub fn contains(&self, x: &Perm) -> bool {
        match &self.shape {
            MemberShape::Alternating => x.sign() == Parity::Even,
            MemberShape::SetStab(mask) => x.preserves(*mask),
            MemberShape::BlockStab(blocks) => blocks.iter().all(|&b| {
                let img = x.image_of_mask(b);
                img == b || blocks.binary_search(&img).is_ok()
            }),
            MemberShape::Conjugate { base, by_inv, .. } => base.contains(&x.conjugate_by(by_inv)),
        }
    }

    pub fn label(&self) -> String {
        match &self.shape {
            MemberShape::Alternating => self.family.clone(),
            MemberShape::SetStab(mask) => format!("{}{}", self.family, mask_text(*mask)),
            MemberShape::BlockStab(blocks) => {
                let b: Vec<String> = blocks.iter().map(|&m| mask_text(m)).collect();
                format!("{}[{}]", self.family, b.join(""))
            }
            MemberShape::Conjugate { by, .. } => format!("{}^{}", self.family, by),
        }
    }

    /// Elements of a conjugated catalogue group, without enumerating `S_n`.
    pub fn explicit_elements(&self) -> Option<impl Iterator<Item = Perm> + '_> {
        match &self.shape {
            MemberShape::Conjugate { base, by, .. } => Some(base.elements().iter().map(move |p| p.conjugate_by(by))),
            _ => None,
        }
    }

    pub fn to_group(&self, cap: usize) -> Result<ConcreteGroup> {
        let n = self.degree;
        match &self.shape {
            MemberShape::Alternating => {
                let g = ConcreteGroup::alternating(n)?;
                if g.order() > cap {
                    return Err(Error::CapExceeded { what: "alternating member".into(), cap: cap as u64 });
                }
                Ok(g)
            }
            MemberShape::SetStab(mask) => {
                let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
                let mut gens = sym_on(n, *mask);
                gens.extend(sym_on(n, full & !mask));
                ConcreteGroup::close_with_cap(n, &gens, cap)
            }
            MemberShape::BlockStab(blocks) => {
                let mut gens = sym_on(n, blocks[0]);
                let pts: Vec<Vec<usize>> =
                    blocks.iter().map(|&b| (0..n).filter(|i| b & (1 << i) != 0).collect()).collect();
                let k = blocks.len();
                let mut swap = vec![0usize; n];
                let mut rot = vec![0usize; n];
                for i in 0..n {
                    swap[i] = i;
                }
                for (bi, block) in pts.iter().enumerate() {
                    for (j, &x) in block.iter().enumerate() {
                        rot[x] = pts[(bi + 1) % k][j];
                        if bi < 2 && k >= 2 {
                            swap[x] = pts[1 - bi][j];
                        }
                    }
                }
                gens.push(Perm::from_images(&swap)?);
                gens.push(Perm::from_images(&rot)?);
                ConcreteGroup::close_with_cap(n, &gens, cap)
            }
            MemberShape::Conjugate { base, by, .. } => {
                if base.order() > cap {
                    return Err(Error::CapExceeded { what: "catalogue member".into(), cap: cap as u64 });
                }
                let mut elements: Vec<Perm> = base.elements().iter().map(|p| p.conjugate_by(by)).collect();
                elements.sort_unstable();
                let gens = base.generators().iter().map(|p| p.conjugate_by(by)).collect();
                Ok(ConcreteGroup::from_sorted_elements(n, gens, elements))
            }
        }
    }
}

/// Generators of the symmetric group on the points of `mask`.
fn sym_on(n: usize, mask: u32) -> Vec<Perm> {
    let pts: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
    if pts.len() < 2 {
        return vec![];
    }
    let mut v = vec![Perm::cycle(n, &pts[..2]).unwrap()];
    if pts.len() > 2 {
        v.push(Perm::cycle(n, &pts).unwrap());
    }
    v
}

/// All `k`-subsets of `{0..n-1}` as masks, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, cur | (1 << i), out);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// All partitions of `{0..n-1}` into blocks of size `d`.
pub fn block_systems(n: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, d: usize, used: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if used.count_ones() as usize == n {
            out.push(cur.clone());
            return;
        }
        let first = (!used).trailing_zeros() as usize;
        let free: Vec<usize> = (first + 1..n).filter(|&i| used & (1 << i) == 0).collect();
        for rest in subsets(free.len(), d - 1) {
            let mut b = 1u32 << first;
            for (j, &x) in free.iter().enumerate() {
                if rest & (1 << j) != 0 {
                    b |= 1 << x;
                }
            }
            cur.push(b);
            rec(n, d, used | b, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut Vec::new(), &mut out);
    for s in &mut out {
        s.sort_unstable();
    }
    out
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Conjugating elements `t` giving each conjugate `base^t` once.
fn conjugate_transversal(base: &ConcreteGroup, n: usize, cap: usize) -> Result<Vec<Perm>> {
    let key = |t: &Perm| {
        let mut a = 0u64;
        let mut b = 0u64;
        for p in base.elements() {
            let r = p.conjugate_by(t).rank();
            a ^= splitmix(r);
            b = b.wrapping_add(splitmix(r ^ 0x5555_5555_5555_5555));
        }
        (a, b)
    };
    let gens = symmetric_generators(n);
    let id = Perm::identity(n);
    let mut seen: FxHashMap<(u64, u64), ()> = FxHashMap::default();
    seen.insert(key(&id), ());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let t = out[i].then(g);
            if seen.insert(key(&t), ()).is_none() {
                out.push(t);
                if out.len() > cap {
                    return Err(Error::CapExceeded { what: "conjugates of a catalogue group".into(), cap: cap as u64 });
                }
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Every member of a family, realized concretely.
pub fn family_members(spec: &FamilySpec, catalog: &Catalog) -> Result<Vec<FamilyMember>> {
    family_members_with_caps(spec, catalog, DEFAULT_MEMBER_DEGREE_CAP, DEFAULT_MEMBER_COUNT_CAP)
}

pub fn family_members_with_caps(
    spec: &FamilySpec,
    catalog: &Catalog,
    degree_cap: u32,
    count_cap: usize,
) -> Result<Vec<FamilyMember>> {
    let n = spec.n as usize;
    if spec.n > degree_cap || n > super::perm::MAX_DEGREE {
        return Err(Error::CapExceeded { what: format!("family members at degree {n}"), cap: degree_cap as u64 });
    }
    let stats = family_stats(spec, catalog)?;
    if stats.count > count_cap.into() {
        return Err(Error::CapExceeded { what: format!("{} members of {spec}", stats.count), cap: count_cap as u64 });
    }
    let family = spec.to_string();
    let member = |shape| FamilyMember { degree: n, family: family.clone(), shape, assumed: false };
    let out = match &spec.kind {
        FamilyKind::Alternating => vec![member(MemberShape::Alternating)],
        FamilyKind::SetStab { m, anchor } => subsets(n, *m as usize)
            .into_iter()
            .filter(|s| anchor.is_none_or(|p| s & (1 << (p - 1)) != 0))
            .map(|s| member(MemberShape::SetStab(s)))
            .collect(),
        FamilyKind::BlockStab { d } => {
            block_systems(n, *d as usize).into_iter().map(|b| member(MemberShape::BlockStab(b))).collect()
        }
        FamilyKind::Primitive { id } => {
            let e = catalog.get(spec.n, id)?;
            let ts = conjugate_transversal(e.group(), n, count_cap)?;
            if stats.count != ts.len().into() {
                return Err(Error::Catalog {
                    line: 0,
                    reason: format!("{id} has {} conjugates, catalogue says {}", ts.len(), stats.count),
                });
            }
            let assumed = e.maximality == Maximality::Assumed;
            ts.into_iter()
                .map(|t| FamilyMember {
                    degree: n,
                    family: family.clone(),
                    shape: MemberShape::Conjugate { base: e.group().clone(), by: t, by_inv: t.inverse() },
                    assumed,
                })
                .collect()
        }
    };
    debug_assert_eq!(stats.count, out.len().into());
    Ok(out)
}

/// Maximal subgroups of `S_n` assembled from the families and the catalogue.
pub fn catalog_maximal_subgroups(n: u32, catalog: &Catalog) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    for spec in maximal_families(n, catalog) {
        out.extend(family_members(&spec, catalog)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_examples() {
        let cat = Catalog::builtin();
        let x1 = family_members(&FamilySpec::set_stab(5, 1).unwrap(), cat).unwrap();
        assert_eq!(x1.len(), 5);
        assert!(x1.iter().all(|m| m.to_group(1000).unwrap().order() == 24));
        let w3 = family_members(&FamilySpec::block_stab(6, 3).unwrap(), cat).unwrap();
        assert_eq!(w3.len(), 10);
        for m in &w3 {
            let g = m.to_group(1000).unwrap();
            assert_eq!(g.order(), 72);
            assert!(g.elements().iter().all(|p| m.contains(p)));
        }
        let a = family_members(&FamilySpec::alternating(6), cat).unwrap();
        assert_eq!(a[0].to_group(1000).unwrap().order(), 360);
        let p = family_members(&FamilySpec::primitive(6, "PGL25"), cat).unwrap();
        assert_eq!(p.len(), 6);
        for m in &p {
            let g = m.to_group(1000).unwrap();
            assert_eq!(g.order(), 120);
            assert!(g.elements().iter().all(|x| m.contains(x)));
        }
    }

    #[test]
    fn catalog_mode_counts() {
        let cat = Catalog::builtin();
        assert_eq!(catalog_maximal_subgroups(5, cat).unwrap().len(), 22);
        assert_eq!(catalog_maximal_subgroups(6, cat).unwrap().len(), 53);
        assert_eq!(catalog_maximal_subgroups(8, cat).unwrap().len(), 1 + 8 + 28 + 56 + 35 + 105 + 120);
    }

    #[test]
    fn anchored_sets() {
        let cat = Catalog::builtin();
        let m1 = family_members(&FamilySpec::anchored(12, 4, 1).unwrap(), cat).unwrap();
        assert_eq!(m1.len(), 165);
    }

    #[test]
    fn block_system_counts() {
        assert_eq!(block_systems(8, 4).len(), 35);
        assert_eq!(block_systems(10, 2).len(), 945);
        assert_eq!(block_systems(12, 3).len(), 15400);
    }
}
