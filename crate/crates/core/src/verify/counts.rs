use super::heavy::family_class_count;
use super::report::CheckReport;
use crate::combinat::{
    binary_partitions, binomial, check_subsum_lemma, class_size, format_ratio, partitions, ratio, sign_of_type,
    subsum_exists, Nat, Parity, Partition,
};
use crate::error::Result;
use crate::families::{
    block_systems_fixed_by, bounds_3_2a, intersect_alt, intersect_blockstab, intersect_blockstab_half,
    intersect_setstab, trivial_upper_bound, Catalog, FamilySpec,
};
use crate::permgroup::{count_in_class, family_members, for_each_in_class, FamilyMember, MemberShape};

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

/// The published integers, from the closed forms.
pub fn check_counts(catalog: &Catalog) -> Result<CheckReport> {
    let mut r = CheckReport::new("counts", "closed forms at n = 6, 8, 10, 11, 12, 14");
    let expect = |r: &mut CheckReport, name: &str, got: Nat, want: u64| {
        r.witness(name, &got);
        r.require(got == Nat::from(want), || format!("{name} = {got}, expected {want}"));
    };
    for (lam, size) in [("2,2,2", 15), ("4,1,1", 90), ("2,1,1,1,1", 15)] {
        expect(&mut r, &format!("|({lam})|"), class_size(&part(lam)), size);
    }
    let fams = ["X1", "X2", "W3", "W2", "P:PGL25"];
    let rows = [("2,2,2", [0u64, 3, 6, 7, 10]), ("4,1,1", [30, 6, 0, 6, 30]), ("2,1,1,1,1", [10, 7, 6, 3, 0])];
    for (lam, want) in rows {
        for (f, w) in fams.iter().zip(want) {
            let c = family_class_count(&FamilySpec::parse(6, f)?, &part(lam), catalog)?;
            expect(&mut r, &format!("{f} ∩ ({lam})"), c, w);
        }
    }
    expect(&mut r, "W4 ∩ (8)", intersect_blockstab_half(&part("8"))?, 144);
    expect(&mut r, "W5 ∩ (4,4,2)", intersect_blockstab_half(&part("4,4,2"))?, 1800);
    expect(&mut r, "X2 ∩ (4,4,2)", intersect_setstab(&part("4,4,2"), 2), 1260);
    expect(&mut r, "|(4,4,2)|", class_size(&part("4,4,2")), 56700);
    expect(&mut r, "X1 ∩ (4,4,2,1)", intersect_setstab(&part("4,4,2,1"), 1), 56700);
    expect(&mut r, "W7 ∩ (8,4,2)", intersect_blockstab_half(&part("8,4,2"))?, 3_175_200);
    expect(&mut r, "|(5,5)|", class_size(&part("5,5")), 72576);
    expect(&mut r, "W5 ∩ (5,5)", intersect_blockstab(&part("5,5"), 5)?, 576);
    let forcing = ratio(&Nat::from(72576u32), &Nat::from(576u32));
    r.witness("72576 / 576", format_ratio(&forcing));
    r.require(forcing == ratio(&Nat::from(126u32), &Nat::from(1u32)), || "forcing ratio is not 126".into());
    expect(&mut r, "1 + C(10,2)", trivial_upper_bound(10)?, 46);
    let (c1, c2) = bounds_3_2a(2)?;
    expect(&mut r, "c1 at 12", c1, 117);
    expect(&mut r, "c2 at 12", c2, 216);
    expect(&mut r, "W6 ∩ (4,4,4)", intersect_blockstab_half(&part("4,4,4"))?, 10800);
    let q = ratio(&class_size(&part("4,4,4")), &Nat::from(10800u32));
    r.witness("|(4,4,4)| / 10800", format_ratio(&q));
    r.require(q == ratio(&Nat::from(231u32), &Nat::from(2u32)), || "ratio is not 115.5".into());
    Ok(r)
}

/// Closed-form intersection counts against brute-force membership for every
/// partition of every `n <= n_max` (at most 8).
pub fn check_oracle(n_max: u32, catalog: &Catalog) -> Result<CheckReport> {
    let n_max = n_max.min(8);
    let mut r = CheckReport::new("oracle", format!("all partitions of n <= {n_max}"));
    let mut compared = 0u64;
    for n in 2..=n_max {
        let nu = n as usize;
        let alt = FamilyMember { degree: nu, family: "A".into(), shape: MemberShape::Alternating, assumed: false };
        for lambda in partitions(n) {
            let brute = count_in_class(nu, &lambda, |x| alt.contains(x))?;
            r.require(Nat::from(brute) == intersect_alt(&lambda), || format!("A{n} ∩ ({lambda}): {brute}"));
            compared += 1;
            for m in 1..n {
                let s = FamilyMember {
                    degree: nu,
                    family: "X".into(),
                    shape: MemberShape::SetStab((1 << m) - 1),
                    assumed: false,
                };
                let brute = count_in_class(nu, &lambda, |x| s.contains(x))?;
                let closed = intersect_setstab(&lambda, m);
                r.require(Nat::from(brute) == closed, || {
                    format!("X{m} ∩ ({lambda}) at n = {n}: brute {brute}, formula {closed}")
                });
                compared += 1;
            }
            for d in (2..n).filter(|d| n % d == 0) {
                let w = &family_members(&FamilySpec::block_stab(n, d)?, catalog)?[0];
                let brute = Nat::from(count_in_class(nu, &lambda, |x| w.contains(x))?);
                let exact = intersect_blockstab(&lambda, d)?;
                r.require(brute == exact, || format!("W{d} ∩ ({lambda}): brute {brute}, enumeration {exact}"));
                compared += 1;
                if 2 * d == n {
                    if let Ok(half) = intersect_blockstab_half(&lambda) {
                        r.require(brute == half, || {
                            format!("W{d} ∩ ({lambda}): brute {brute}, half-block formula {half}")
                        });
                        compared += 1;
                    }
                }
            }
        }
    }
    // conjugates × |M ∩ Π| = |Π| × (members containing one fixed x ∈ Π)
    for n in 3..=n_max {
        for spec in crate::families::maximal_families(n, catalog) {
            let members = family_members(&spec, catalog)?;
            for lambda in partitions(n) {
                let mut first = None;
                for_each_in_class(n as usize, &lambda, |x| {
                    if first.is_none() {
                        first = Some(*x);
                    }
                })?;
                let x = first.expect("classes are non-empty");
                let through = members.iter().filter(|m| m.contains(&x)).count();
                let per = count_in_class(n as usize, &lambda, |y| members[0].contains(y))?;
                let ok = Nat::from(members.len() * per as usize) == class_size(&lambda) * Nat::from(through);
                r.require(ok, || format!("double counting fails for {spec} on ({lambda})"));
                compared += 1;
            }
        }
    }
    r.witness("comparisons", compared);
    Ok(r)
}

/// Sub-sums of 2-power partitions of `2^a` and `3·2^a`, for `a <= a_max`.
pub fn check_subsum(a_max: u32) -> CheckReport {
    let mut r = CheckReport::new("subsum", format!("1 <= a <= {a_max}"));
    let rep = check_subsum_lemma(a_max);
    r.witness("partitions of 2^a", rep.power_checked);
    r.witness("partitions of 3·2^a", rep.triple_checked);
    r.witness("(2^(a+1), 2^a) cases", rep.exceptional_pair.len());
    r.witness("(2^a, 2^a, 2^a) cases", rep.exceptional_triple.len());
    if let Some(c) = rep.counterexamples.first() {
        r.fail(format!("a = {}: ({}) of {}", c.a, c.partition, c.total));
    }
    r
}

/// The easy upper bound: `C(n, n_2)` is odd, every 2-power partition has a
/// sub-sum `n_2` (or `n/2` for `n` a power of two, the full cycle aside),
/// and at `n <= 8` every 2-element lies in `A_n` or one of the stabilizers.
pub fn check_trivial_bound(n_max: u32, catalog: &Catalog) -> Result<CheckReport> {
    let mut r = CheckReport::new("trivial-bound", format!("3 <= n <= {n_max}"));
    let mut checked = 0usize;
    for n in 3..=n_max {
        let pow2 = n.is_power_of_two();
        let n2 = 1u64 << n.trailing_zeros();
        let target = if pow2 { n as u64 / 2 } else { n2 };
        if !pow2 {
            let odd = binomial(n as u64, n2) % 2u32 == Nat::from(1u32);
            r.require(odd, || format!("C({n}, {n2}) is even"));
        }
        for lambda in binary_partitions(n) {
            if pow2 && lambda.len() == 1 {
                continue;
            }
            let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
            let ok = subsum_exists(&parts, target)?.is_some();
            r.require(ok, || format!("({lambda}) has no sub-sum {target}"));
            checked += 1;
        }
        if n > 8 {
            continue;
        }
        let nu = n as usize;
        let family = if pow2 { FamilySpec::block_stab(n, n / 2)? } else { FamilySpec::set_stab(n, n2 as u32)? };
        let members = family_members(&family, catalog)?;
        let bound = trivial_upper_bound(n)?;
        r.require(Nat::from(members.len() + 1) == bound, || {
            format!("{} members at n = {n}, bound {bound}", members.len())
        });
        for lambda in binary_partitions(n) {
            if sign_of_type(&lambda) == Parity::Even {
                continue;
            }
            let mut missed = 0u64;
            for_each_in_class(nu, &lambda, |x| {
                let hit = members.iter().any(|m| m.contains(x));
                let full = pow2 && lambda.len() == 1 && block_systems_fixed_by(x, n / 2) > 0;
                if !hit && !full {
                    missed += 1;
                }
            })?;
            r.require(missed == 0, || format!("{missed} elements of ({lambda}) escape at n = {n}"));
        }
    }
    r.witness("partitions checked", checked);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass() {
        let cat = Catalog::builtin();
        for r in [
            check_counts(cat).unwrap(),
            check_oracle(6, cat).unwrap(),
            check_subsum(5),
            check_trivial_bound(20, cat).unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }
}
