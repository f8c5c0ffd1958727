use std::fmt;

use crate::combinat::{Parity, Partition};
use crate::error::{Error, Result};

/// Largest degree a [`Perm`] can hold.
pub const MAX_DEGREE: usize = 16;

/// A permutation of `{0, .., n-1}` stored inline. Points are 0-based here and
/// 1-based in text.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} above {MAX_DEGREE}");
        let mut img = [0u8; MAX_DEGREE];
        for (i, v) in img.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// Builds a permutation from its 0-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::CapExceeded { what: format!("degree {n}"), cap: MAX_DEGREE as u64 });
        }
        let mut seen = 0u32;
        let mut p = Perm::identity(n);
        for (i, &v) in images.iter().enumerate() {
            if v >= n {
                return Err(Error::PointOutOfRange { point: v + 1, degree: n });
            }
            if seen & (1 << v) != 0 {
                return Err(Error::RepeatedPoint(v + 1));
            }
            seen |= 1 << v;
            p.img[i] = v as u8;
        }
        Ok(p)
    }

    /// The cycle `(c0 c1 .. ck)` on 0-based points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut p = Perm::identity(n);
        p.apply_cycle(points)?;
        Ok(p)
    }

    fn apply_cycle(&mut self, points: &[usize]) -> Result<()> {
        let n = self.degree();
        for &x in points {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x + 1, degree: n });
            }
        }
        for (k, &x) in points.iter().enumerate() {
            self.img[x] = points[(k + 1) % points.len()] as u8;
        }
        Ok(())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Product applying `self` first, then `q`.
    #[inline]
    pub fn then(&self, q: &Perm) -> Perm {
        let mut r = *self;
        for i in 0..self.n as usize {
            r.img[i] = q.img[self.img[i] as usize];
        }
        r
    }

    /// Checked product, `p` first then `q`.
    pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
        if p.n != q.n {
            return Err(Error::DegreeMismatch(p.degree(), q.degree()));
        }
        Ok(p.then(q))
    }

    pub fn inverse(&self) -> Perm {
        let mut r = *self;
        for i in 0..self.n as usize {
            r.img[self.img[i] as usize] = i as u8;
        }
        r
    }

    /// `g^-1 self g`.
    #[inline]
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        // (g^-1 h g)(g(i)) = g(h(i))
        let mut r = *self;
        for i in 0..self.n as usize {
            r.img[g.img[i] as usize] = g.img[self.img[i] as usize];
        }
        r
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = *self;
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that
    /// point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut c = vec![s];
            seen |= 1 << s;
            let mut x = self.image(s);
            while x != s {
                seen |= 1 << x;
                c.push(x);
                x = self.image(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Point sets of all cycles, fixed points included, as bit masks.
    pub fn cycle_masks(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut m = 1u32 << s;
            let mut x = self.image(s);
            while x != s {
                m |= 1 << x;
                x = self.image(x);
            }
            seen |= m;
            out.push(m);
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<u32> {
        self.cycle_masks().iter().map(|m| m.count_ones()).collect()
    }

    /// Cycle type including fixed points.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycle_lengths()).expect("cycle lengths are positive")
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    pub fn sign(&self) -> Parity {
        let lens = self.cycle_lengths();
        if (self.degree() - lens.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True when the order is a prime power. The identity counts.
    pub fn is_primary(&self) -> bool {
        is_prime_power(self.order())
    }

    /// Whether the point set `mask` is mapped onto itself.
    #[inline]
    pub fn preserves(&self, mask: u32) -> bool {
        self.image_of_mask(mask) == mask
    }

    #[inline]
    pub fn image_of_mask(&self, mut mask: u32) -> u32 {
        let mut out = 0u32;
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            out |= 1 << self.img[i];
            mask &= mask - 1;
        }
        out
    }

    /// Lexicographic rank in `S_n` (factorial number system).
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut used = 0u32;
        let mut r = 0u64;
        for i in 0..n {
            let v = self.img[i] as u32;
            let smaller = (((1u32 << v) - 1) & !used).count_ones() as u64;
            r = r * (n - i) as u64 + smaller;
            used |= 1 << v;
        }
        r
    }

    pub fn unrank(n: usize, mut r: u64) -> Perm {
        let mut digits = vec![0u64; n];
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<u8> = (0..n as u8).collect();
        let mut p = Perm::identity(n);
        for i in 0..n {
            p.img[i] = avail.remove(digits[i] as usize);
        }
        p
    }

    /// Parses disjoint-cycle text such as `(1,2)(3,4,6,5)` at degree `n`.
    /// Digit-run cycles like `(3465)` are accepted when `n <= 9`. `()` and
    /// `e` denote the identity.
    pub fn parse(text: &str, n: usize) -> Result<Perm> {
        let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
        if n > MAX_DEGREE {
            return Err(Error::CapExceeded { what: format!("degree {n}"), cap: MAX_DEGREE as u64 });
        }
        let mut p = Perm::identity(n);
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" || t == "()" {
            return Ok(p);
        }
        let mut used = 0u32;
        let mut rest = t;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = rest[1..close].trim();
            rest = &rest[close + 1..];
            if body.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = if body.contains(',') || body.contains(char::is_whitespace) {
                body.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect()
            } else if n <= 9 {
                body.split("").filter(|s| !s.is_empty()).collect()
            } else {
                vec![body]
            };
            let mut pts = Vec::with_capacity(tokens.len());
            for tok in tokens {
                let v: usize = tok.parse().map_err(|_| err("point is not a number"))?;
                if v == 0 || v > n {
                    return Err(Error::PointOutOfRange { point: v, degree: n });
                }
                if used & (1 << (v - 1)) != 0 {
                    return Err(Error::RepeatedPoint(v));
                }
                used |= 1 << (v - 1);
                pts.push(v - 1);
            }
            p.apply_cycle(&pts)?;
        }
        Ok(p)
    }
}

pub(crate) fn is_prime_power(mut m: u64) -> bool {
    if m <= 1 {
        return true;
    }
    let p = crate::combinat::smallest_prime_divisor(m).expect("m > 1");
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let t = Perm::parse("(1,2)", 3).unwrap();
        assert_eq!(t.images(), &[1, 0, 2]);
        let c = Perm::parse("(3,4,6,5)", 6).unwrap();
        assert_eq!(c, Perm::parse("(3465)", 6).unwrap());
        assert_eq!(c.to_string(), "(3,4,6,5)");
        assert_eq!(Perm::parse("(1,2)(1,3)", 3), Err(Error::RepeatedPoint(1)));
        assert!(matches!(Perm::parse("(1,4)", 3), Err(Error::PointOutOfRange { point: 4, .. })));
        assert!(Perm::parse("(1,2", 3).is_err());
        assert!(Perm::parse("(10,11,12)", 12).unwrap().order() == 3);
    }

    #[test]
    fn algebra() {
        let p = Perm::parse("(1,2,3,4)(5,6)", 6).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(Perm::identity(5).cycle_type().parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(Perm::parse("(1,2,3,4,5,6,7,8)", 8).unwrap().sign(), Parity::Odd);
        assert!(p.then(&p.inverse()).is_identity());
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // apply (1,2) then (2,3): 1->2->3
        assert_eq!(a.then(&b).image(0), 2);
        assert!(Perm::compose(&a, &Perm::identity(4)).is_err());
        let g = Perm::parse("(1,3)", 3).unwrap();
        assert_eq!(a.conjugate_by(&g), g.inverse().then(&a).then(&g));
        assert_eq!(p.pow(4), Perm::identity(6));
    }

    #[test]
    fn primary() {
        assert!(Perm::parse("(1,2,3,4)", 4).unwrap().is_primary());
        assert!(!Perm::parse("(1,2,3)(4,5)", 5).unwrap().is_primary());
        assert!(Perm::identity(4).is_primary());
    }

    #[test]
    fn ranks_roundtrip() {
        for r in 0..720 {
            let p = Perm::unrank(6, r);
            assert_eq!(p.rank(), r);
        }
        assert_eq!(Perm::identity(6).rank(), 0);
    }
}
