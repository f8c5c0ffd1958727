use super::perm::Perm;
use crate::combinat::{class_size, Partition};
use crate::error::{Error, Result};

/// Calls `visit` once for every permutation of cycle type `lambda` in `S_n`.
/// Parts missing from `lambda` are read as fixed points.
pub fn for_each_in_class(n: usize, lambda: &Partition, mut visit: impl FnMut(&Perm)) -> Result<()> {
    let lambda = lambda.padded_to(n as u32)?;
    let mut lens: Vec<(u32, u32)> = lambda.multiplicities();
    let mut p = Perm::identity(n);
    let mut img: Vec<usize> = (0..n).collect();
    rec(n, 0u32, &mut lens, &mut img, &mut p, &mut visit);
    Ok(())
}

fn rec(n: usize, used: u32, lens: &mut [(u32, u32)], img: &mut [usize], p: &mut Perm, visit: &mut impl FnMut(&Perm)) {
    if used.count_ones() as usize == n {
        *p = Perm::from_images(img).expect("valid");
        visit(p);
        return;
    }
    // the smallest unused point starts the next cycle
    let start = (!used).trailing_zeros() as usize;
    for k in 0..lens.len() {
        let (len, mult) = lens[k];
        if mult == 0 {
            continue;
        }
        lens[k].1 -= 1;
        let mut cyc = vec![start];
        fill(n, used | (1 << start), len as usize, &mut cyc, lens, img, p, visit);
        lens[k].1 += 1;
    }
}

#[allow(clippy::too_many_arguments)]
fn fill(
    n: usize,
    used: u32,
    len: usize,
    cyc: &mut Vec<usize>,
    lens: &mut [(u32, u32)],
    img: &mut [usize],
    p: &mut Perm,
    visit: &mut impl FnMut(&Perm),
) {
    if cyc.len() == len {
        for i in 0..len {
            img[cyc[i]] = cyc[(i + 1) % len];
        }
        rec(n, used, lens, img, p, visit);
        return;
    }
    for x in 0..n {
        if used & (1 << x) != 0 {
            continue;
        }
        cyc.push(x);
        fill(n, used | (1 << x), len, cyc, lens, img, p, visit);
        cyc.pop();
    }
}

/// All permutations of cycle type `lambda`, refusing classes larger than
/// `budget`.
pub fn enumerate_class(n: usize, lambda: &Partition, budget: usize) -> Result<Vec<Perm>> {
    let lambda = lambda.padded_to(n as u32)?;
    let size = class_size(&lambda);
    if size > crate::combinat::Nat::from(budget) {
        return Err(Error::CapExceeded { what: format!("class {lambda} of size {size}"), cap: budget as u64 });
    }
    let mut out = Vec::with_capacity(budget.min(1 << 20));
    for_each_in_class(n, &lambda, |p| out.push(*p))?;
    Ok(out)
}

/// Number of elements of type `lambda` satisfying `member`.
pub fn count_in_class(n: usize, lambda: &Partition, member: impl Fn(&Perm) -> bool) -> Result<u64> {
    let mut c = 0u64;
    for_each_in_class(n, lambda, |p| {
        if member(p) {
            c += 1;
        }
    })?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{partitions, Nat};

    #[test]
    fn counts_match_class_sizes() {
        for n in 1..=8u32 {
            for lambda in partitions(n) {
                let mut count = 0u64;
                for_each_in_class(n as usize, &lambda, |p| {
                    assert_eq!(p.cycle_type(), lambda);
                    count += 1;
                })
                .unwrap();
                assert_eq!(Nat::from(count), class_size(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(enumerate_class(3, &"2,1".parse().unwrap(), 100).unwrap().len(), 3);
        let v = enumerate_class(10, &"4,4,2".parse().unwrap(), 100_000).unwrap();
        assert_eq!(v.len(), 56700);
        let mut s = v.clone();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), 56700);
        assert!(enumerate_class(10, &"5,5".parse().unwrap(), 1000).is_err());
        assert_eq!(enumerate_class(10, &"5,5".parse().unwrap(), 100_000).unwrap().len(), 72576);
    }
}
