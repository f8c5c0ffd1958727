//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Every subgroup is generated by its elements of prime-power order, so each
//! class is reached from the trivial group by repeatedly joining a class
//! representative with a cyclic subgroup of prime-power order. Extending by
//! one representative per normalizer orbit is enough.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use super::group::ConcreteGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default bound on `|G|` for lattice computations (the order of `S_7`).
pub const DEFAULT_LATTICE_CAP: usize = 5040;

const TABLE_LIMIT: usize = 2048;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

enum Lookup {
    Dense(Vec<u32>),
    Hashed(FxHashMap<Perm, u32>),
}

/// Index arithmetic local to one group.
pub(crate) struct Ctx {
    perms: Vec<Perm>,
    lookup: Lookup,
    table: Option<Vec<u16>>,
    inv: Vec<u32>,
    zob: Vec<u64>,
    gens: Vec<u32>,
}

impl Ctx {
    pub(crate) fn new(g: &ConcreteGroup) -> Self {
        let perms = g.elements().to_vec();
        let n = g.degree();
        let lookup = if n <= 8 {
            let size: usize = (1..=n).product();
            let mut v = vec![u32::MAX; size.max(1)];
            for (i, p) in perms.iter().enumerate() {
                v[p.rank() as usize] = i as u32;
            }
            Lookup::Dense(v)
        } else {
            Lookup::Hashed(perms.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect())
        };
        let mut ctx = Ctx { perms, lookup, table: None, inv: vec![], zob: vec![], gens: vec![] };
        let m = ctx.perms.len();
        ctx.inv = (0..m).map(|i| ctx.idx(&ctx.perms[i].inverse())).collect();
        ctx.zob = (0..m as u64).map(splitmix).collect();
        ctx.gens = g.generators().iter().map(|p| ctx.idx(p)).collect();
        if m <= TABLE_LIMIT {
            let mut t = vec![0u16; m * m];
            for a in 0..m {
                for b in 0..m {
                    t[a * m + b] = ctx.idx(&ctx.perms[a].then(&ctx.perms[b])) as u16;
                }
            }
            ctx.table = Some(t);
        }
        ctx
    }

    #[inline]
    pub(crate) fn idx(&self, p: &Perm) -> u32 {
        match &self.lookup {
            Lookup::Dense(v) => v[p.rank() as usize],
            Lookup::Hashed(h) => h[p],
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.perms.len() + b as usize] as u32,
            None => self.idx(&self.perms[a as usize].then(&self.perms[b as usize])),
        }
    }

    #[inline]
    pub(crate) fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], x), g)
    }

    pub(crate) fn perm(&self, i: u32) -> Perm {
        self.perms[i as usize]
    }
}

/// A subgroup as a sorted list of group-local indices.
#[derive(Clone, Debug)]
pub(crate) struct Sub {
    pub(crate) elems: Vec<u32>,
    pub(crate) gens: Vec<u32>,
    pub(crate) hash: u64,
}

impl Sub {
    fn new(ctx: &Ctx, mut elems: Vec<u32>, gens: Vec<u32>) -> Self {
        elems.sort_unstable();
        let hash = elems.iter().fold(0u64, |h, &e| h ^ ctx.zob[e as usize]);
        Sub { elems, gens, hash }
    }

    fn trivial(ctx: &Ctx) -> Self {
        Sub::new(ctx, vec![0], vec![])
    }

    fn bits(&self, m: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(m);
        for &e in &self.elems {
            b.insert(e as usize);
        }
        b
    }

    fn conjugate(&self, ctx: &Ctx, g: u32) -> Sub {
        let elems = self.elems.iter().map(|&x| ctx.conj(x, g)).collect();
        let gens = self.gens.iter().map(|&x| ctx.conj(x, g)).collect();
        Sub::new(ctx, elems, gens)
    }

    pub(crate) fn to_group(&self, ctx: &Ctx, degree: usize) -> ConcreteGroup {
        let elements = self.elems.iter().map(|&i| ctx.perm(i)).collect();
        let gens = self.gens.iter().map(|&i| ctx.perm(i)).collect();
        ConcreteGroup::from_sorted_elements(degree, gens, elements)
    }
}

enum Join {
    Proper(Sub),
    Whole,
}

/// `<K, z>` by coset enumeration. Stops once more than half the group is
/// reached when `stop_at_half` is set, since the join is then everything.
fn join(ctx: &Ctx, k: &Sub, kbits: &FixedBitSet, z: u32, stop_at_half: bool) -> Join {
    let m = ctx.len();
    let mut bits = kbits.clone();
    let mut elems = k.elems.clone();
    let mut gens = k.gens.clone();
    gens.push(z);
    let mut reps = vec![0u32];
    let mut i = 0;
    while i < reps.len() {
        let x = reps[i];
        i += 1;
        for &s in &gens {
            let y = ctx.mul(x, s);
            if bits.contains(y as usize) {
                continue;
            }
            for &h in &k.elems {
                let e = ctx.mul(h, y);
                bits.insert(e as usize);
                elems.push(e);
            }
            reps.push(y);
            if stop_at_half && elems.len() * 2 > m {
                return Join::Whole;
            }
        }
    }
    if elems.len() == m {
        Join::Whole
    } else {
        Join::Proper(Sub::new(ctx, elems, gens))
    }
}

fn join_full(ctx: &Ctx, k: &Sub, z: u32) -> Sub {
    let bits = k.bits(ctx.len());
    match join(ctx, k, &bits, z, false) {
        Join::Proper(s) => s,
        Join::Whole => Sub::new(ctx, (0..ctx.len() as u32).collect(), {
            let mut g = k.gens.clone();
            g.push(z);
            g
        }),
    }
}

struct Orbit {
    members: Vec<(Sub, u32)>,
    normalizer: Sub,
}

/// Conjugacy orbit of `k` with transversal elements, and its normalizer.
fn orbit(ctx: &Ctx, k: &Sub) -> Orbit {
    let mut members: Vec<(Sub, u32)> = vec![(k.clone(), 0)];
    let mut by_hash: FxHashMap<u64, Vec<usize>> = FxHashMap::default();
    by_hash.entry(k.hash).or_default().push(0);
    let mut normalizer = k.clone();
    let mut nbits = normalizer.bits(ctx.len());
    let mut i = 0;
    while i < members.len() {
        for &g in &ctx.gens {
            let (c, t) = {
                let (s, t) = &members[i];
                (s.conjugate(ctx, g), ctx.mul(*t, g))
            };
            let hit = by_hash.get(&c.hash).and_then(|v| v.iter().copied().find(|&j| members[j].0.elems == c.elems));
            match hit {
                Some(j) => {
                    let s = ctx.mul(t, ctx.inv[members[j].1 as usize]);
                    if !nbits.contains(s as usize) {
                        normalizer = join_full(ctx, &normalizer, s);
                        nbits = normalizer.bits(ctx.len());
                    }
                }
                None => {
                    by_hash.entry(c.hash).or_default().push(members.len());
                    members.push((c, t));
                }
            }
        }
        i += 1;
    }
    Orbit { members, normalizer }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub order: usize,
    /// Number of conjugates.
    pub size: usize,
    pub normalizer_order: usize,
    /// Maximal among proper subgroups.
    pub maximal: bool,
    rep: Sub,
}

/// All subgroups of a group up to conjugacy.
pub struct SubgroupLattice {
    group: ConcreteGroup,
    ctx: Ctx,
    classes: Vec<SubgroupClass>,
}

impl SubgroupLattice {
    pub fn new(g: &ConcreteGroup) -> Result<Self> {
        Self::with_cap(g, DEFAULT_LATTICE_CAP)
    }

    pub fn with_cap(g: &ConcreteGroup, cap: usize) -> Result<Self> {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                what: format!("lattice of a group of order {}", g.order()),
                cap: cap as u64,
            });
        }
        let ctx = Ctx::new(g);
        let m = ctx.len();

        // cyclic subgroups of prime-power order, and the one each element generates
        let mut cyclic: Vec<Sub> = Vec::new();
        let mut cyc_of = vec![u32::MAX; m];
        let mut cyc_by_hash: FxHashMap<u64, Vec<u32>> = FxHashMap::default();
        for x in 1..m as u32 {
            if !ctx.perm(x).is_primary() {
                continue;
            }
            let mut elems = vec![0u32];
            let mut y = x;
            while y != 0 {
                elems.push(y);
                y = ctx.mul(y, x);
            }
            let s = Sub::new(&ctx, elems, vec![x]);
            let found =
                cyc_by_hash.get(&s.hash).and_then(|v| v.iter().copied().find(|&c| cyclic[c as usize].elems == s.elems));
            cyc_of[x as usize] = match found {
                Some(c) => c,
                None => {
                    let id = cyclic.len() as u32;
                    cyc_by_hash.entry(s.hash).or_default().push(id);
                    cyclic.push(s);
                    id
                }
            };
        }

        let mut classes: Vec<SubgroupClass> = Vec::new();
        // hash -> (class, transversal element)
        let mut known: FxHashMap<u64, Vec<(usize, u32)>> = FxHashMap::default();
        let mut normalizers: Vec<Sub> = Vec::new();
        let register = |s: &Sub,
                        classes: &mut Vec<SubgroupClass>,
                        normalizers: &mut Vec<Sub>,
                        known: &mut FxHashMap<u64, Vec<(usize, u32)>>| {
            if let Some(v) = known.get(&s.hash) {
                for &(c, t) in v {
                    let rep = &classes[c].rep;
                    if rep.elems.len() == s.elems.len() && rep.conjugate(&ctx, t).elems == s.elems {
                        return;
                    }
                }
            }
            let orb = orbit(&ctx, s);
            let id = classes.len();
            for (c, t) in &orb.members {
                known.entry(c.hash).or_default().push((id, *t));
            }
            classes.push(SubgroupClass {
                order: s.elems.len(),
                size: orb.members.len(),
                normalizer_order: orb.normalizer.elems.len(),
                maximal: false,
                rep: s.clone(),
            });
            normalizers.push(orb.normalizer);
        };

        let trivial = Sub::trivial(&ctx);
        register(&trivial, &mut classes, &mut normalizers, &mut known);
        let mut next = 0;
        while next < classes.len() {
            let k = classes[next].rep.clone();
            let kbits = k.bits(m);
            // normalizer generators act on the cyclic subgroups; keep one per orbit
            let norm = normalizers[next].clone();
            let mut parent: Vec<u32> = (0..cyclic.len() as u32).collect();
            fn find(p: &mut [u32], x: u32) -> u32 {
                let mut r = x;
                while p[r as usize] != r {
                    r = p[r as usize];
                }
                let mut y = x;
                while p[y as usize] != r {
                    let n = p[y as usize];
                    p[y as usize] = r;
                    y = n;
                }
                r
            }
            for &h in &norm.gens {
                for c in 0..cyclic.len() as u32 {
                    let img = cyc_of[ctx.conj(cyclic[c as usize].gens[0], h) as usize];
                    let (a, b) = (find(&mut parent, c), find(&mut parent, img));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
            let mut maximal = true;
            for c in 0..cyclic.len() as u32 {
                if find(&mut parent, c) != c {
                    continue;
                }
                let z = cyclic[c as usize].gens[0];
                if kbits.contains(z as usize) {
                    continue;
                }
                match join(&ctx, &k, &kbits, z, true) {
                    Join::Whole => {}
                    Join::Proper(j) => {
                        maximal = false;
                        register(&j, &mut classes, &mut normalizers, &mut known);
                    }
                }
            }
            classes[next].maximal = maximal && k.elems.len() < m;
            next += 1;
        }
        if m > 1 {
            let whole = Sub::new(&ctx, (0..m as u32).collect(), ctx.gens.clone());
            classes.push(SubgroupClass { order: m, size: 1, normalizer_order: m, maximal: false, rep: whole });
        } else {
            classes[0].maximal = false;
        }
        // deterministic order: by order, then by representative
        classes.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.rep.elems.cmp(&b.rep.elems)));
        Ok(SubgroupLattice { group: g.clone(), ctx, classes })
    }

    pub fn group(&self) -> &ConcreteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn total_subgroups(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn representative(&self, class: usize) -> ConcreteGroup {
        self.classes[class].rep.to_group(&self.ctx, self.group.degree())
    }

    /// Every subgroup in the class.
    pub fn conjugates(&self, class: usize) -> Vec<ConcreteGroup> {
        let orb = orbit(&self.ctx, &self.classes[class].rep);
        orb.members.iter().map(|(s, _)| s.to_group(&self.ctx, self.group.degree())).collect()
    }

    pub fn maximal_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].maximal).collect()
    }

    /// All maximal subgroups, conjugates expanded.
    pub fn maximal_subgroups(&self) -> Vec<ConcreteGroup> {
        self.maximal_classes().into_iter().flat_map(|c| self.conjugates(c)).collect()
    }
}

/// All subgroups of `g` up to conjugacy, as (representative, class size).
pub fn all_subgroups(g: &ConcreteGroup) -> Result<Vec<(ConcreteGroup, usize)>> {
    let lat = SubgroupLattice::new(g)?;
    Ok((0..lat.classes().len()).map(|i| (lat.representative(i), lat.classes()[i].size)).collect())
}

/// Maximal subgroups of `g` from its subgroup lattice, conjugates expanded.
pub fn maximal_subgroups(g: &ConcreteGroup) -> Result<Vec<ConcreteGroup>> {
    Ok(SubgroupLattice::new(g)?.maximal_subgroups())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> ConcreteGroup {
        let all: Vec<usize> = (0..n).collect();
        ConcreteGroup::close(n, &[Perm::cycle(n, &all).unwrap()]).unwrap()
    }

    #[test]
    fn class_counts() {
        for (n, classes, total) in [(3, 4, 6), (4, 11, 30), (5, 19, 156)] {
            let lat = SubgroupLattice::new(&ConcreteGroup::symmetric(n).unwrap()).unwrap();
            assert_eq!(lat.classes().len(), classes, "S{n}");
            assert_eq!(lat.total_subgroups(), total, "S{n}");
            for c in lat.classes() {
                assert_eq!(c.size * c.normalizer_order, lat.group().order());
            }
        }
        let a5 = SubgroupLattice::new(&ConcreteGroup::alternating(5).unwrap()).unwrap();
        assert_eq!(a5.classes().len(), 9);
        let s6 = SubgroupLattice::new(&ConcreteGroup::symmetric(6).unwrap()).unwrap();
        assert_eq!(s6.classes().len(), 56);
        assert_eq!(s6.total_subgroups(), 1455);
    }

    #[test]
    fn maximal_of_s5() {
        let lat = SubgroupLattice::new(&ConcreteGroup::symmetric(5).unwrap()).unwrap();
        let mut shape: Vec<(usize, usize)> =
            lat.maximal_classes().iter().map(|&c| (lat.classes()[c].order, lat.classes()[c].size)).collect();
        shape.sort();
        assert_eq!(shape, vec![(12, 10), (20, 6), (24, 5), (60, 1)]);
        assert_eq!(lat.maximal_subgroups().len(), 22);
        let f20 = lat.classes().iter().filter(|c| c.order == 20).count();
        assert_eq!(f20, 1);
    }

    #[test]
    fn cyclic_groups() {
        let maxes = maximal_subgroups(&cyclic(6)).unwrap();
        let mut orders: Vec<usize> = maxes.iter().map(|m| m.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
        let lat = SubgroupLattice::new(&cyclic(12)).unwrap();
        assert_eq!(lat.classes().len(), 6);
    }

    #[test]
    fn cap() {
        assert!(SubgroupLattice::with_cap(&ConcreteGroup::symmetric(5).unwrap(), 100).is_err());
    }
}
