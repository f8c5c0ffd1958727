use super::report::CheckReport;
use crate::combinat::{binomial, class_size, factorial, is_prime, Nat, Partition};
use crate::cover::{
    gamma0_exact, no_single_class_covers, sigma0_exact, sigma_exact, solve_exact, Budget, CoverInstance, CoverNumber,
    CoverSet, Mode, Status,
};
use crate::error::Result;
use crate::families::{
    block_systems_fixed_by, intersect_blockstab, intersect_blockstab_half, intersect_primitive, pgl2_fullcycle_count,
    wreath_order, Catalog, FamilySpec,
};
use crate::permgroup::{
    count_in_class, for_each_in_class, Abelianization, ConcreteGroup, Corpus, FamilyMember, MemberShape, Perm,
    SubgroupLattice,
};

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn count_type(g: &ConcreteGroup, lambda: &Partition) -> usize {
    g.elements().iter().filter(|p| &p.cycle_type() == lambda).count()
}

pub(crate) fn conjugate_group(h: &ConcreteGroup, by: &Perm) -> Result<ConcreteGroup> {
    let gens: Vec<Perm> = h.generators().iter().map(|p| p.conjugate_by(by)).collect();
    ConcreteGroup::close(h.degree(), &gens)
}

pub(crate) fn member(n: usize, shape: MemberShape) -> FamilyMember {
    FamilyMember { degree: n, family: String::new(), shape, assumed: false }
}

fn without_set(inst: &CoverInstance, s: usize) -> CoverInstance {
    let sets: Vec<CoverSet> = inst.sets.iter().enumerate().filter(|&(i, _)| i != s).map(|(_, c)| c.clone()).collect();
    CoverInstance::from_indices(inst.universe.clone(), sets)
}

/// The only integer points of the S5 system, over `a1 + a2 + a3 <= 4`.
pub fn s5_system_solutions() -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a1 in 0..=4u32 {
        for a2 in 0..=4 - a1 {
            for a3 in 0..=4 - a1 - a2 {
                if 3 * a1 + 5 * a3 >= 15 && 6 * a1 + 4 * a2 >= 10 {
                    out.push((a1, a2, a3));
                }
            }
        }
    }
    out
}

/// σ₀(S5) = 6: the inequality system, the per-family counts behind it, and
/// an exact solve whose optimum `{A5} ∪ X1` is shown unique by removing each
/// chosen set in turn.
pub fn check_s5(catalog: &Catalog) -> Result<CheckReport> {
    let mut r = CheckReport::new("s5", "S5");
    let sols = s5_system_solutions();
    r.witness("system solutions", format!("{sols:?}"));
    r.require(sols == vec![(2, 0, 2)], || format!("system has solutions {sols:?}"));

    let four = part("4,1");
    let two = part("2,1,1,1");
    let x1 = member(5, MemberShape::SetStab(0b1)).to_group(200)?;
    let x2 = member(5, MemberShape::SetStab(0b11)).to_group(200)?;
    let f20 = catalog.get(5, "F20")?.group().clone();
    for (name, g, want) in [("X1", &x1, (6, 6)), ("X2", &x2, (0, 4)), ("F20", &f20, (10, 0))] {
        let got = (count_type(g, &four), count_type(g, &two));
        r.witness(format!("{name} (4-cycles, 2-cycles)"), format!("{got:?}"));
        r.require(got == want, || format!("{name} meets the 4-cycles and 2-cycles in {got:?}, expected {want:?}"));
    }
    let odd = count_in_class(5, &four, |_| true)? + count_in_class(5, &two, |_| true)?;
    r.witness("odd 2-elements", odd);

    let s5 = ConcreteGroup::symmetric(5)?;
    let lat = sigma0_exact(&s5, Mode::Lattice, Budget::unlimited())?;
    r.witness("sigma0 (lattice)", lat.display());
    r.require(lat.value() == Some(6), || format!("lattice mode gives {}", lat.display()));
    let cat = sigma0_exact(&s5, Mode::Catalog(catalog), Budget::unlimited())?;
    let cover = cat.cover().expect("finite");
    let mut labels = cover.labels();
    labels.sort();
    r.witness("sigma0 (catalogue)", cat.display());
    r.witness("optimal cover", labels.join(" "));
    let expected = ["A", "X1{1}", "X1{2}", "X1{3}", "X1{4}", "X1{5}"];
    r.require(cat.value() == Some(6) && labels == expected, || format!("optimal cover {labels:?}"));
    for &s in &cover.solution.chosen {
        let alt = solve_exact(&without_set(&cover.instance, s), Budget::unlimited(), None);
        let ok = alt.status == Status::Infeasible || (alt.status == Status::Optimal && alt.size() > 6);
        r.require(ok, || format!("another optimum avoids {}", cover.instance.sets[s].label));
    }
    r.witness("unique optimum", "yes");
    Ok(r)
}

/// The explicit seven-member cover of S6, the class table, the 5-cycle
/// incidences, and σ₀(S6) = 7 by exhaustive search.
pub fn check_s6(catalog: &Catalog) -> Result<CheckReport> {
    let mut r = CheckReport::new("s6", "S6");
    let n = 6;
    let s6 = ConcreteGroup::symmetric(n)?;
    let c = |t: &str| Perm::parse(t, n);
    let a6 = ConcreteGroup::alternating(n)?;
    let x1 = member(n, MemberShape::SetStab(0b1)).to_group(720)?;
    let p1 = ConcreteGroup::close(n, &[c("(3,4,6,5)")?, c("(1,2,3)(4,5,6)")?])?;
    r.witness("|P1|", p1.order());
    r.require(p1.order() == 120 && p1.is_primitive(), || {
        format!("P1 has order {} / primitive {}", p1.order(), p1.is_primitive())
    });
    let pgl = crate::permgroup::family_members(&FamilySpec::primitive(6, "PGL25"), catalog)?;
    let in_family = pgl.iter().any(|m| m.to_group(720).map(|g| g.elements() == p1.elements()).unwrap_or(false));
    r.require(in_family, || "P1 is not a conjugate of the catalogued PGL25".into());

    let mut collection = vec![("A6".to_string(), a6.clone()), ("X1".into(), x1.clone())];
    for t in ["(1,2)", "(1,3)"] {
        collection.push((format!("X1^{t}"), conjugate_group(&x1, &c(t)?)?));
    }
    collection.push(("P1".into(), p1.clone()));
    for t in ["(3,4)", "(3,5)"] {
        collection.push((format!("P1^{t}"), conjugate_group(&p1, &c(t)?)?));
    }
    let uncovered =
        s6.elements().iter().filter(|p| p.is_primary() && !collection.iter().any(|(_, h)| h.contains(p))).count();
    r.witness("explicit cover members", collection.len());
    r.witness("primary elements missed", uncovered);
    r.require(uncovered == 0, || format!("{uncovered} primary elements of S6 escape the explicit cover"));

    // class table
    let x2 = member(n, MemberShape::SetStab(0b11)).to_group(720)?;
    let w3 = member(n, MemberShape::BlockStab(vec![0b000111, 0b111000])).to_group(720)?;
    let w2 = member(n, MemberShape::BlockStab(vec![0b000011, 0b001100, 0b110000])).to_group(720)?;
    let cols = [&x1, &x2, &w3, &w2, &p1];
    let rows = [
        ("2,2,2", 15u64, [0usize, 3, 6, 7, 10]),
        ("4,1,1", 90, [30, 6, 0, 6, 30]),
        ("2,1,1,1,1", 15, [10, 7, 6, 3, 0]),
    ];
    for (lam, size, want) in rows {
        let l = part(lam);
        let got: Vec<usize> = cols.iter().map(|g| count_type(g, &l)).collect();
        let sz = class_size(&l);
        r.witness(format!("({lam})"), format!("{sz}: {got:?}"));
        r.require(sz == Nat::from(size) && got == want, || format!("row ({lam}) is {sz}: {got:?}"));
    }

    // incidences on 5-cycles and 4-cycles over all stabilizer/primitive pairs
    let stabs: Vec<ConcreteGroup> =
        (0..n).map(|i| member(n, MemberShape::SetStab(1 << i)).to_group(720)).collect::<Result<_>>()?;
    let prims: Vec<ConcreteGroup> = pgl.iter().map(|m| m.to_group(720)).collect::<Result<_>>()?;
    let five: Vec<Perm> = s6.elements().iter().filter(|p| p.cycle_type() == part("5,1")).copied().collect();
    let four: Vec<Perm> = s6.elements().iter().filter(|p| p.cycle_type() == part("4,1,1")).copied().collect();
    let meet = |cls: &[Perm], gs: &[&ConcreteGroup]| cls.iter().filter(|p| gs.iter().all(|g| g.contains(p))).count();
    r.witness("|Pi0|", five.len());
    let mut distinct = |name: &str, vals: Vec<usize>| {
        let mut v = vals;
        v.sort_unstable();
        v.dedup();
        r.witness(name, format!("{v:?}"));
        v
    };
    let singles = distinct("Pi0 ∩ S, Pi0 ∩ P", stabs.iter().chain(&prims).map(|g| meet(&five, &[g])).collect());
    let same = distinct(
        "Pi0 ∩ S1 ∩ S2, Pi0 ∩ P1 ∩ P2",
        pairs(&stabs).chain(pairs(&prims)).map(|(a, b)| meet(&five, &[a, b])).collect(),
    );
    let mixed = distinct("Pi0 ∩ S ∩ P", cross(&stabs, &prims).map(|(a, b)| meet(&five, &[a, b])).collect());
    let two_same = distinct(
        "Pi2 ∩ S1 ∩ S2, Pi2 ∩ P1 ∩ P2",
        pairs(&stabs).chain(pairs(&prims)).map(|(a, b)| meet(&four, &[a, b])).collect(),
    );
    let two_mixed = distinct("Pi2 ∩ S ∩ P", cross(&stabs, &prims).map(|(a, b)| meet(&four, &[a, b])).collect());
    let mut triples = Vec::new();
    let mut quads = Vec::new();
    let mut unions = Vec::new();
    for (s1, s2) in pairs(&stabs) {
        for (p1, p2) in pairs(&prims) {
            triples.push(meet(&four, &[s1, s2, p1]));
            triples.push(meet(&four, &[s1, p1, p2]));
            quads.push(meet(&four, &[s1, s2, p1, p2]));
            unions.push(four.iter().filter(|x| [s1, s2, p1, p2].iter().any(|g| g.contains(x))).count());
        }
    }
    let triples = distinct("Pi2 triple intersections", triples);
    let quads = distinct("Pi2 quadruple intersections", quads);
    let unions = distinct("Pi2 ∩ (S1 ∪ S2 ∪ P1 ∪ P2)", unions);
    r.require(five.len() == 144 && singles == [24] && same == [0] && mixed == [4], || {
        "5-cycle incidences differ".into()
    });
    r.require(two_same == [6] && two_mixed == [10] && triples == [2], || "4-cycle incidences differ".into());
    r.require(quads.iter().all(|&q| q <= 2) && unions.iter().all(|&u| u <= 76), || "4-cycle union bound fails".into());

    let sol = sigma0_exact(&s6, Mode::Lattice, Budget::unlimited())?;
    r.witness("sigma0", sol.display());
    if let Some(c) = sol.cover() {
        r.witness("maximal subgroups", c.instance.sets.len());
        r.witness("search nodes", c.solution.nodes);
    }
    r.require(sol.value() == Some(7), || format!("sigma0(S6) = {}", sol.display()));
    Ok(r)
}

fn pairs<T>(v: &[T]) -> impl Iterator<Item = (&T, &T)> {
    (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| (&v[i], &v[j])))
}

fn cross<'a, T>(a: &'a [T], b: &'a [T]) -> impl Iterator<Item = (&'a T, &'a T)> {
    a.iter().flat_map(move |x| b.iter().map(move |y| (x, y)))
}

/// Largest prime in `(n/2, n)`.
pub fn bertrand_prime(n: u64) -> Option<u64> {
    (n / 2 + 1..n).rev().find(|&p| is_prime(p))
}

/// Half-block stabilizers on full cycles for `n = 2^a`: one member per
/// cycle, every competitor strictly smaller, a prime-cycle witness showing
/// they alone do not suffice. Element-level at `n <= 8`.
pub fn check_power2(a: u32, catalog: &Catalog) -> Result<CheckReport> {
    let n = 1u32 << a;
    let mut r = CheckReport::new("power2", format!("n = 2^{a} = {n}"));
    if !(2..=5).contains(&a) {
        r.skip("formula mode covers 2 <= a <= 5");
        return Ok(r);
    }
    let h = (n / 2) as u64;
    let target = factorial(h) * factorial(h - 1);
    let full = Partition::new(vec![n])?;
    r.witness("|W ∩ (n)|", &target);
    r.require(intersect_blockstab_half(&full)? == target, || "half-block formula disagrees".into());
    for d in (2..n / 2).filter(|d| n.is_multiple_of(*d)) {
        let (v, exact) = if n <= 16 { (intersect_blockstab(&full, d)?, true) } else { (wreath_order(n, d), false) };
        r.witness(format!("W{d} {}", if exact { "count" } else { "order bound" }), &v);
        r.require(v < target, || format!("W{d} meets (n) in {v}"));
    }
    let q = (n - 1) as u64;
    if a > 2 && is_prime(q) {
        let c = pgl2_fullcycle_count(a)?;
        r.witness("PGL(2, n-1) full cycles", &c);
        r.require(c < target, || format!("PGL(2,{q}) has {c} full cycles"));
        if let Ok(e) = catalog.get(n, "PGL27").or_else(|_| catalog.get(n, &format!("PGL2{q}"))) {
            let exact = intersect_primitive(&full, e);
            r.require(exact == c, || format!("catalogue group has {exact} full cycles, formula {c}"));
        }
    }
    if n > 8 {
        r.assume(
            "proper primitive groups containing a full cycle lie between PGL(2,q) and PGammaL(2,q) with n = q + 1",
        );
    }
    let p = bertrand_prime(n as u64).expect("n >= 4");
    r.witness("prime in (n/2, n)", p);
    if n <= 16 {
        let cyc: Vec<usize> = (0..p as usize).collect();
        let x = Perm::cycle(n as usize, &cyc)?;
        let fixed = block_systems_fixed_by(&x, n / 2);
        r.require(fixed == 0, || format!("a {p}-cycle fixes {fixed} half-block systems"));
    }
    if n <= 8 {
        let mut bad = 0u64;
        let mut total = 0u64;
        for_each_in_class(n as usize, &full, |x| {
            total += 1;
            if block_systems_fixed_by(x, n / 2) != 1 {
                bad += 1;
            }
        })?;
        r.witness("full cycles checked", total);
        r.require(bad == 0, || format!("{bad} full cycles do not fix exactly one half-block system"));
        let w = member(n as usize, MemberShape::BlockStab(vec![(1 << h) - 1, ((1 << n) - 1) ^ ((1 << h) - 1)]));
        let brute = count_in_class(n as usize, &full, |x| w.contains(x))?;
        r.require(Nat::from(brute) == target, || format!("brute force finds {brute} full cycles in W"));
    }
    let value = Nat::from(1u32) + binomial(n as u64, h) / 2u32;
    r.witness("sigma0 claimed", &value);
    if a == 2 {
        let s4 = sigma0_exact(&ConcreteGroup::symmetric(4)?, Mode::Lattice, Budget::unlimited())?;
        r.witness("sigma0(S4)", s4.display());
        r.require(s4.value() == Some(4), || format!("sigma0(S4) = {}", s4.display()));
    }
    if a == 3 {
        let s8 = sigma0_exact(&ConcreteGroup::symmetric(8)?, Mode::Catalog(catalog), Budget::nodes(1_000_000))?;
        r.witness("sigma0(S8) solve", s8.display());
        r.require(s8.value() == Some(36), || format!("sigma0(S8) = {}", s8.display()));
    }
    Ok(r)
}

fn show(c: &CoverNumber) -> String {
    c.display()
}

/// For each solvable corpus group that is not a cyclic p-group: σ₀ = 2 when
/// the abelianization is not a p-group, otherwise σ₀ = σ. Both numbers come
/// from exact solves over the subgroup lattice.
pub fn check_solvable(corpus: &Corpus) -> Result<CheckReport> {
    let mut r = CheckReport::new("solvable", format!("{} corpus groups", corpus.entries().len()));
    let mut checked = 0;
    for e in corpus.entries() {
        let g = e.group()?;
        if !g.is_solvable()? {
            r.witness(&e.name, "skipped: not solvable");
            continue;
        }
        if g.is_cyclic_p_group() {
            r.witness(&e.name, "skipped: cyclic p-group");
            continue;
        }
        checked += 1;
        let ab = g.abelianization()?;
        let s0 = sigma0_exact(&g, Mode::Lattice, Budget::unlimited())?;
        let s = sigma_exact(&g, Mode::Lattice, Budget::unlimited())?;
        let ok = match ab {
            Abelianization::Mixed(..) => s0.value() == Some(2),
            _ => s0.value().is_some() && s0.value() == s.value(),
        };
        let abl = match ab {
            Abelianization::Trivial => "trivial".to_string(),
            Abelianization::PGroup(p) => format!("{p}-group"),
            Abelianization::Mixed(..) => "not a p-group".to_string(),
        };
        r.witness(&e.name, format!("order {}, G/G' {abl}, sigma0 {}, sigma {}", g.order(), show(&s0), show(&s)));
        r.require(ok, || format!("{}: sigma0 {} sigma {} with G/G' {abl}", e.name, show(&s0), show(&s)));
    }
    r.witness("groups checked", checked);
    Ok(r)
}

/// Normal subgroup of the given order, if there is exactly one.
fn normal_of_order(g: &ConcreteGroup, order: usize) -> Result<Option<ConcreteGroup>> {
    let lat = SubgroupLattice::with_cap(g, g.order().max(crate::permgroup::DEFAULT_LATTICE_CAP))?;
    let found: Vec<usize> =
        (0..lat.classes().len()).filter(|&c| lat.classes()[c].size == 1 && lat.classes()[c].order == order).collect();
    Ok(if found.len() == 1 { Some(lat.representative(found[0])) } else { None })
}

/// Quotient pairs shipped with the crate: (group, order of the normal subgroup).
pub const QUOTIENT_PAIRS: &[(&str, usize)] = &[("S4", 4), ("C12", 2), ("Q8", 2), ("A4xC2", 2)];

/// σ₀(G) <= σ(G) on every corpus group, and σ₀(G) <= σ₀(G/N) on the
/// quotient pairs.
pub fn check_quotient(corpus: &Corpus) -> Result<CheckReport> {
    let mut r = CheckReport::new("quotient", "corpus groups and quotient pairs");
    for e in corpus.entries() {
        let g = e.group()?;
        let s0 = sigma0_exact(&g, Mode::Lattice, Budget::unlimited())?;
        let s = sigma_exact(&g, Mode::Lattice, Budget::unlimited())?;
        let ok = match (&s0, &s) {
            (_, CoverNumber::Infinite { .. }) => true,
            (CoverNumber::Infinite { .. }, _) => false,
            _ => s0.value() <= s.value(),
        };
        r.require(ok, || format!("{}: sigma0 {} > sigma {}", e.name, show(&s0), show(&s)));
    }
    r.witness("monotone groups", corpus.entries().len());
    for &(name, k) in QUOTIENT_PAIRS {
        let Some(e) = corpus.get(name) else {
            r.witness(name, "not in corpus");
            continue;
        };
        let g = e.group()?;
        let Some(nsub) = normal_of_order(&g, k)? else {
            r.fail(format!("{name}: no unique normal subgroup of order {k}"));
            continue;
        };
        let q = g.quotient(&nsub)?;
        let a = sigma0_exact(&g, Mode::Lattice, Budget::unlimited())?;
        let b = sigma0_exact(&q, Mode::Lattice, Budget::unlimited())?;
        let ok = match (&a, &b) {
            (_, CoverNumber::Infinite { .. }) => true,
            (CoverNumber::Infinite { .. }, _) => false,
            _ => a.value() <= b.value(),
        };
        r.witness(format!("{name}/N{k}"), format!("{} <= {}", show(&a), show(&b)));
        r.require(ok, || format!("{name}: sigma0 {} > sigma0 of quotient {}", show(&a), show(&b)));
    }
    Ok(r)
}

fn is_prime_power(n: usize) -> bool {
    n > 1 && {
        let p = crate::combinat::smallest_prime_divisor(n as u64).unwrap() as usize;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    }
}

/// No single class of proper subgroups covers the primary elements, and
/// γ₀ = 2 for the solvable or symmetric corpus groups whose order is not a
/// prime power.
pub fn check_single_class(corpus: &Corpus) -> Result<CheckReport> {
    let mut r = CheckReport::new("single-class", "corpus groups");
    for e in corpus.entries() {
        let g = e.group()?;
        if g.is_cyclic_p_group() {
            continue;
        }
        let rep = no_single_class_covers(&g)?;
        r.require(rep.holds(), || format!("{}: class of order {:?} covers", e.name, rep.violations));
        let symmetric = factorial(g.degree() as u64) == Nat::from(g.order()) && g.degree() == e.degree;
        if !is_prime_power(g.order()) && (symmetric || g.is_solvable()?) {
            let gamma = gamma0_exact(&g)?;
            r.witness(format!("gamma0({})", e.name), gamma.display());
            r.require(gamma.value() == Some(2), || format!("gamma0({}) = {}", e.name, gamma.display()));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s5_and_s6() {
        let cat = Catalog::builtin();
        let r = check_s5(cat).unwrap();
        assert!(r.passed(), "{r}");
        let r = check_s6(cat).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn power2_small() {
        for a in [2, 3, 4, 5] {
            let r = check_power2(a, Catalog::builtin()).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert_eq!(bertrand_prime(8), Some(7));
    }
}
