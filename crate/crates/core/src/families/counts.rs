use num_traits::{One, Zero};

use super::catalog::PrimitiveCatalogEntry;
use crate::combinat::{
    binomial, class_size, factorial, is_prime, pow, sign_of_type, smallest_prime_divisor, subsum_exists, Nat, Parity,
    Partition,
};
use crate::error::{Error, Result};
use crate::permgroup::Perm;

/// `|S_d wr S_{n/d}| = (d!)^{n/d} (n/d)!` for block size `d`.
pub fn wreath_order(n: u32, d: u32) -> Nat {
    let b = (n / d) as u64;
    let mut o = factorial(b);
    let df = factorial(d as u64);
    for _ in 0..b {
        o *= &df;
    }
    o
}

/// Elements of type `lambda` stabilizing one fixed `m`-set: the sum over
/// sub-multisets `mu` of `lambda` with `|mu| = m` of
/// `class_size(mu) * class_size(lambda \ mu)`.
pub fn intersect_setstab(lambda: &Partition, m: u32) -> Nat {
    let mults = lambda.multiplicities();
    let mut total = Nat::zero();
    let mut take = vec![0u32; mults.len()];
    fn rec(i: usize, rem: u32, mults: &[(u32, u32)], take: &mut Vec<u32>, total: &mut Nat) {
        if i == mults.len() {
            if rem == 0 {
                let mut inside = Vec::new();
                let mut outside = Vec::new();
                for (k, &(part, mult)) in mults.iter().enumerate() {
                    inside.extend(std::iter::repeat_n(part, take[k] as usize));
                    outside.extend(std::iter::repeat_n(part, (mult - take[k]) as usize));
                }
                let a = Partition::new(inside).expect("positive parts");
                let b = Partition::new(outside).expect("positive parts");
                *total += class_size(&a) * class_size(&b);
            }
            return;
        }
        let (part, mult) = mults[i];
        for c in 0..=mult.min(rem / part) {
            take[i] = c;
            rec(i + 1, rem - c * part, mults, take, total);
        }
        take[i] = 0;
    }
    rec(0, m, &mults, &mut take, &mut total);
    total
}

/// `|W ∩ lambda|` for `W` a stabilizer of two blocks of size `n/2`, when all
/// parts of `lambda` are powers of two, none is 1, and no sub-multiset sums
/// to `n/2`:
/// `|lambda| * |W| / n! * 2^(k-1)` with `k` the number of parts.
pub fn intersect_blockstab_half(lambda: &Partition) -> Result<Nat> {
    let n = lambda.n();
    if !n.is_multiple_of(2) || n < 2 {
        return Err(Error::Hypothesis(format!("degree {n} is not even")));
    }
    if lambda.parts().contains(&1) {
        return Err(Error::Hypothesis(format!("{lambda} has fixed points")));
    }
    let parts: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
    if let Some(w) = subsum_exists(&parts, (n / 2) as u64)? {
        return Err(Error::Hypothesis(format!("parts {w:?} of {lambda} sum to n/2 = {}", n / 2)));
    }
    let k = lambda.len() as u64;
    let num = class_size(lambda) * wreath_order(n, n / 2) * pow(2, k - 1);
    let den = factorial(n as u64);
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Number of partitions of `{0..n-1}` into blocks of size `d` that `x`
/// permutes.
pub fn block_systems_fixed_by(x: &Perm, d: u32) -> u64 {
    let n = x.degree();
    let d = d as usize;
    assert!(d >= 1 && n.is_multiple_of(d));
    let inv = x.inverse();
    let mut blocks: Vec<u32> = Vec::new();
    fn ok(x: &Perm, inv: &Perm, b: u32, assigned: u32, blocks: &[u32]) -> bool {
        for img in [x.image_of_mask(b), inv.image_of_mask(b)] {
            if img & assigned != 0 && !blocks.contains(&img) {
                return false;
            }
        }
        true
    }
    fn rec(n: usize, d: usize, x: &Perm, inv: &Perm, assigned: u32, blocks: &mut Vec<u32>) -> u64 {
        if assigned.count_ones() as usize == n {
            return 1;
        }
        let first = (!assigned).trailing_zeros() as usize;
        let free: Vec<usize> = (first + 1..n).filter(|&i| assigned & (1 << i) == 0).collect();
        let mut total = 0;
        let mut choose = Vec::with_capacity(d);
        fn pick(start: usize, free: &[usize], need: usize, choose: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if need == 0 {
                f(choose);
                return;
            }
            for i in start..free.len() {
                if free.len() - i < need {
                    break;
                }
                choose.push(free[i]);
                pick(i + 1, free, need - 1, choose, f);
                choose.pop();
            }
        }
        pick(0, &free, d - 1, &mut choose, &mut |c: &[usize]| {
            let b = c.iter().fold(1u32 << first, |m, &i| m | (1 << i));
            let now = assigned | b;
            blocks.push(b);
            if ok(x, inv, b, now, blocks) {
                total += rec(n, d, x, inv, now, blocks);
            }
            blocks.pop();
        });
        total
    }
    rec(n, d, x, &inv, 0, &mut blocks)
}

/// Exact `|W_d ∩ lambda|` for any block size, by counting the block systems
/// fixed by one element of the class. Limited to `n <= 16`.
pub fn intersect_blockstab(lambda: &Partition, d: u32) -> Result<Nat> {
    let n = lambda.n();
    if d <= 1 || d >= n || !n.is_multiple_of(d) {
        return Err(Error::InvalidFamily(format!("block size {d} does not properly divide {n}")));
    }
    if n as usize > crate::permgroup::MAX_DEGREE {
        return Err(Error::CapExceeded { what: format!("block system count at degree {n}"), cap: 16 });
    }
    let x = representative(lambda);
    let fixed = block_systems_fixed_by(&x, d);
    let members = factorial(n as u64) / wreath_order(n, d);
    Ok(class_size(lambda) * Nat::from(fixed) / members)
}

/// A permutation of type `lambda` with cycles on consecutive points.
pub(crate) fn representative(lambda: &Partition) -> Perm {
    let n = lambda.n() as usize;
    let mut p = Perm::identity(n);
    let mut start = 0;
    for &len in lambda.parts() {
        let pts: Vec<usize> = (start..start + len as usize).collect();
        p = p.then(&Perm::cycle(n, &pts).expect("in range"));
        start += len as usize;
    }
    p
}

/// `|A_n ∩ lambda|`.
pub fn intersect_alt(lambda: &Partition) -> Nat {
    match sign_of_type(lambda) {
        Parity::Even => class_size(lambda),
        Parity::Odd => Nat::zero(),
    }
}

/// Exact count of elements of type `lambda` in a catalogued primitive group.
pub fn intersect_primitive(lambda: &Partition, entry: &PrimitiveCatalogEntry) -> Nat {
    Nat::from(entry.group().elements().iter().filter(|p| &p.cycle_type() == lambda).count())
}

/// Largest order of an imprimitive maximal subgroup of `S_n`, reached with
/// `p` blocks for `p` the smallest prime divisor of `n`.
pub fn imprimitive_order_max(n: u32) -> Result<Nat> {
    if n < 4 || is_prime(n as u64) {
        return Err(Error::Domain { n: n as u64, reason: "needs a composite degree".into() });
    }
    let p = smallest_prime_divisor(n as u64).expect("composite") as u32;
    Ok(wreath_order(n, n / p))
}

/// Upper bound on the order of a primitive group of degree `n` not
/// containing `A_n`: `3^n`, and `2^n` once `n > 24`. An imported result, not
/// checked here.
pub fn primitive_order_bound(n: u32) -> Nat {
    if n <= 24 {
        pow(3, n as u64)
    } else {
        pow(2, n as u64)
    }
}

/// Number of `2^a`-cycles in `PGL(2, 2^a - 1)` on the projective line.
pub fn pgl2_fullcycle_count(a: u32) -> Result<Nat> {
    if !(2..=62).contains(&a) {
        return Err(Error::Domain { n: a as u64, reason: "exponent must be at least 2".into() });
    }
    let q = (1u64 << a) - 1;
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(pow(2, (a - 2) as u64) * Nat::from(q) * Nat::from(q - 1))
}

/// `1 + C(n, n/2)/2` for `n` a power of two, else `1 + C(n, n_2)`.
pub fn trivial_upper_bound(n: u32) -> Result<Nat> {
    if n < 3 {
        return Err(Error::Domain { n: n as u64, reason: "needs n >= 3".into() });
    }
    let n64 = n as u64;
    if n.is_power_of_two() {
        Ok(Nat::one() + binomial(n64, n64 / 2) / 2u32)
    } else {
        let n2 = 1u64 << n.trailing_zeros();
        Ok(Nat::one() + binomial(n64, n2))
    }
}

/// `(c1, c2)` bracketing the primary covering number of `S_{3·2^a}`.
pub fn bounds_3_2a(a: u32) -> Result<(Nat, Nat)> {
    if a < 2 {
        return Err(Error::Domain { n: 3 << a, reason: "needs a >= 2".into() });
    }
    let p = 1u64 << a;
    let n = 3 * p;
    let main = binomial(n - 1, p - 1);
    let c1 = if a == 2 { Nat::from(117u32) } else { Nat::one() + &main };
    let mut c2 = Nat::from(2u32) + main;
    for i in 2..=2 * p {
        c2 += binomial(n - i, p / 2 - 1);
    }
    Ok((c1, c2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn setstab_examples() {
        assert_eq!(intersect_setstab(&p("2,2,2,1"), 1), nat(15));
        assert_eq!(intersect_setstab(&p("4,4,2,1"), 1), nat(56700));
        assert_eq!(intersect_setstab(&p("4,4,2"), 2), nat(1260));
    }

    #[test]
    fn half_block_examples() {
        assert_eq!(intersect_blockstab_half(&p("8")).unwrap(), nat(144));
        assert_eq!(intersect_blockstab_half(&p("4,4,2")).unwrap(), nat(1800));
        assert_eq!(intersect_blockstab_half(&p("8,4,2")).unwrap(), nat(3175200));
        assert!(matches!(intersect_blockstab_half(&p("4,4")), Err(Error::Hypothesis(_))));
        assert_eq!(intersect_blockstab_half(&p("4,4,4")).unwrap(), nat(10800));
    }

    #[test]
    fn general_block_counts_agree_with_half_formula() {
        for s in ["8", "4,4,2", "8,4,2", "4,4,4", "4,2,2,2,2"] {
            let l = p(s);
            if let Ok(v) = intersect_blockstab_half(&l) {
                assert_eq!(intersect_blockstab(&l, l.n() / 2).unwrap(), v, "{s}");
            }
        }
        // (5,5) in W5 of S10
        assert_eq!(intersect_blockstab(&p("5,5"), 5).unwrap(), nat(576));
    }

    #[test]
    fn alt_examples() {
        assert_eq!(intersect_alt(&p("2,2,2")), nat(0));
        assert_eq!(intersect_alt(&p("5,5")), nat(72576));
        assert_eq!(intersect_alt(&p("3,1,1")), nat(20));
    }

    #[test]
    fn order_bounds() {
        assert_eq!(imprimitive_order_max(12).unwrap(), nat(1036800));
        assert_eq!(imprimitive_order_max(9).unwrap(), nat(1296));
        assert_eq!(imprimitive_order_max(15).unwrap(), nat(10368000));
        assert!(imprimitive_order_max(13).is_err());
        for n in 4..=40u32 {
            if let Ok(m) = imprimitive_order_max(n) {
                let direct = (2..n).filter(|d| n % d == 0).map(|d| wreath_order(n, d)).max().unwrap();
                assert_eq!(m, direct, "{n}");
            }
        }
        assert_eq!(primitive_order_bound(14), nat(4782969));
        assert_eq!(primitive_order_bound(40), pow(2, 40));
        assert_eq!(primitive_order_bound(24), pow(3, 24));
    }

    #[test]
    fn pgl_counts() {
        assert_eq!(pgl2_fullcycle_count(3).unwrap(), nat(84));
        assert_eq!(pgl2_fullcycle_count(5).unwrap(), nat(7440));
        assert_eq!(pgl2_fullcycle_count(4), Err(Error::NotPrime(15)));
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(trivial_upper_bound(8).unwrap(), nat(36));
        assert_eq!(trivial_upper_bound(7).unwrap(), nat(8));
        assert_eq!(trivial_upper_bound(10).unwrap(), nat(46));
        assert_eq!(bounds_3_2a(2).unwrap(), (nat(117), nat(216)));
        let (c1, c2) = bounds_3_2a(3).unwrap();
        assert_eq!(c1, nat(1 + 245157));
        assert_eq!(c2, nat(253944));
    }

    #[test]
    fn w4_on_eight_cycles_by_brute_force() {
        let blocks = [0b0000_1111u32, 0b1111_0000];
        let c = crate::permgroup::count_in_class(8, &p("8"), |x| {
            let i = x.image_of_mask(blocks[0]);
            i == blocks[0] || i == blocks[1]
        })
        .unwrap();
        assert_eq!(c, 144);
    }
}
