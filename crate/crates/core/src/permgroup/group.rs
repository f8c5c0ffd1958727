use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use super::elements::ElementSet;
use super::perm::{is_prime_power, Perm};
use crate::combinat::Parity;
use crate::error::{Error, Result};

/// Default bound on the order of a group built by closure.
pub const DEFAULT_CLOSURE_CAP: usize = 50_000;

/// A permutation group with every element listed (sorted).
#[derive(Clone, Debug)]
pub struct ConcreteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

/// Outcome of asking whether `G/G'` is a `p`-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Abelianization {
    /// `G = G'`.
    Trivial,
    PGroup(u64),
    /// Two distinct primes dividing `|G/G'|`.
    Mixed(u64, u64),
}

impl ConcreteGroup {
    pub fn close(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::close_with_cap(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn close_with_cap(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = Perm::identity(degree);
        let gens: Vec<Perm> = generators.iter().copied().filter(|g| !g.is_identity()).collect();
        let mut seen: FxHashSet<Perm> = FxHashSet::default();
        seen.insert(id);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.then(g);
                if seen.insert(y) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { what: "group order".into(), cap: cap as u64 });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(ConcreteGroup { degree, generators: gens, elements })
    }

    /// Wraps an element list already known to be a group.
    pub(crate) fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        ConcreteGroup { degree, generators, elements }
    }

    pub fn trivial(degree: usize) -> Self {
        ConcreteGroup { degree, generators: vec![], elements: vec![Perm::identity(degree)] }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let gens = symmetric_generators(n);
        Self::close_with_cap(n, &gens, usize::MAX)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for k in 2..n {
            gens.push(Perm::cycle(n, &[0, 1, k])?);
        }
        Self::close_with_cap(n, &gens, usize::MAX)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &ConcreteGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements.iter().any(|x| x.order() == n)
    }

    /// The prime `p` when the order is a positive power of `p`.
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order() as u64;
        if n == 1 || !is_prime_power(n) {
            return None;
        }
        crate::combinat::smallest_prime_divisor(n)
    }

    pub fn is_cyclic_p_group(&self) -> bool {
        self.order() == 1 || (self.p_group_prime().is_some() && self.is_cyclic())
    }

    pub fn is_transitive(&self) -> bool {
        let mut orbit = 1u32;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                let y = g.image(x);
                if orbit & (1 << y) == 0 {
                    orbit |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        orbit.count_ones() as usize == self.degree
    }

    /// Transitive with no block system other than the trivial ones.
    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        // the finest block containing {0, k} must be everything
        for k in 1..self.degree {
            if self.minimal_block(k).count_ones() as usize != self.degree {
                return false;
            }
        }
        true
    }

    fn minimal_block(&self, k: usize) -> u32 {
        // union-find closure of the pair {0, k} under the generators
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut pending = vec![(0usize, k)];
        while let Some((a, b)) = pending.pop() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                continue;
            }
            parent[ra] = rb;
            for g in &self.generators {
                pending.push((g.image(a), g.image(b)));
            }
        }
        let root = find(&mut parent, 0);
        (0..n).filter(|&x| find(&mut parent, x) == root).fold(0u32, |m, x| m | (1 << x))
    }

    pub fn is_normal_in(&self, g: &ConcreteGroup) -> bool {
        g.generators.iter().all(|x| self.generators.iter().all(|h| self.contains(&h.conjugate_by(x))))
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<ConcreteGroup> {
        let mut gens: Vec<Perm> = seeds.iter().copied().filter(|s| !s.is_identity()).collect();
        let mut n = ConcreteGroup::close(self.degree, &gens)?;
        loop {
            let extra = n
                .generators
                .iter()
                .flat_map(|h| self.generators.iter().map(move |x| h.conjugate_by(x)))
                .find(|c| !n.contains(c));
            match extra {
                Some(c) => {
                    gens.push(c);
                    n = ConcreteGroup::close(self.degree, &gens)?;
                }
                None => return Ok(n),
            }
        }
    }

    /// The commutator subgroup, as the normal closure of generator
    /// commutators.
    pub fn derived_subgroup(&self) -> Result<ConcreteGroup> {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn abelianization(&self) -> Result<Abelianization> {
        let d = self.derived_subgroup()?;
        let q = (self.order() / d.order()) as u64;
        if q == 1 {
            return Ok(Abelianization::Trivial);
        }
        let p = crate::combinat::smallest_prime_divisor(q).expect("q > 1");
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
        }
        if r == 1 {
            Ok(Abelianization::PGroup(p))
        } else {
            Ok(Abelianization::Mixed(p, crate::combinat::smallest_prime_divisor(r).expect("r > 1")))
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        let mut g = self.clone();
        loop {
            if g.order() == 1 {
                return Ok(true);
            }
            let d = g.derived_subgroup()?;
            if d.order() == g.order() {
                return Ok(false);
            }
            g = d;
        }
    }

    pub fn primary_elements(&self) -> ElementSet {
        ElementSet::from_perms(self.degree, self.elements.iter().filter(|p| p.is_primary()).copied())
    }

    pub fn element_set(&self) -> ElementSet {
        ElementSet::from_perms(self.degree, self.elements.iter().copied())
    }

    pub fn even_part(&self) -> Result<ConcreteGroup> {
        let evens: Vec<Perm> = self.elements.iter().filter(|p| p.sign() == Parity::Even).copied().collect();
        let mut gens = Vec::new();
        let mut cur = ConcreteGroup::trivial(self.degree);
        for e in &evens {
            if !cur.contains(e) {
                gens.push(*e);
                cur = ConcreteGroup::close(self.degree, &gens)?;
            }
        }
        Ok(cur)
    }

    /// `G/N` as a permutation group on the cosets of `N`.
    pub fn quotient(&self, n: &ConcreteGroup) -> Result<ConcreteGroup> {
        if !n.is_subgroup_of(self) || !n.is_normal_in(self) {
            return Err(Error::InvalidFamily("quotient by a subgroup that is not normal".into()));
        }
        let index = self.order() / n.order();
        if index > super::perm::MAX_DEGREE {
            return Err(Error::CapExceeded { what: "quotient degree".into(), cap: super::perm::MAX_DEGREE as u64 });
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut next = 0;
        for i in 0..self.order() {
            if coset[i] != usize::MAX {
                continue;
            }
            let x = self.elements[i];
            for h in n.elements() {
                let j = self.index_of(&h.then(&x)).expect("closed");
                coset[j] = next;
            }
            next += 1;
        }
        let mut reps = vec![0usize; index];
        for (i, &c) in coset.iter().enumerate().rev() {
            reps[c] = i;
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let images: Vec<usize> =
                reps.iter().map(|&r| coset[self.index_of(&self.elements[r].then(g)).expect("closed")]).collect();
            gens.push(Perm::from_images(&images)?);
        }
        ConcreteGroup::close(index, &gens)
    }
}

/// `(1,2)` and `(1,2,..,n)`.
pub fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return vec![];
    }
    let all: Vec<usize> = (0..n).collect();
    vec![Perm::cycle(n, &[0, 1]).unwrap(), Perm::cycle(n, &all).unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, gens: &[&str]) -> ConcreteGroup {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect();
        ConcreteGroup::close(n, &gens).unwrap()
    }

    #[test]
    fn closures() {
        assert_eq!(g(3, &["(1,2)", "(1,2,3)"]).order(), 6);
        let p1 = g(6, &["(3,4,6,5)", "(1,2,3)(4,5,6)"]);
        assert_eq!(p1.order(), 120);
        assert!(p1.is_transitive());
        assert!(p1.is_primitive());
        assert_eq!(g(5, &["(1,2,3,4,5)", "(2,3,5,4)"]).order(), 20);
        assert_eq!(ConcreteGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(ConcreteGroup::alternating(6).unwrap().order(), 360);
        let s4 = ConcreteGroup::symmetric(4).unwrap();
        let again = ConcreteGroup::close(4, s4.generators()).unwrap();
        assert_eq!(again.elements(), s4.elements());
    }

    #[test]
    fn cap_is_enforced() {
        let s = symmetric_generators(8);
        assert!(matches!(ConcreteGroup::close_with_cap(8, &s, 1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn primitivity() {
        assert!(!g(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]).is_primitive());
        assert!(g(5, &["(1,2,3,4,5)", "(2,3,5,4)"]).is_primitive());
        assert!(!g(4, &["(1,2)"]).is_transitive());
    }

    #[test]
    fn abelianizations() {
        let s4 = ConcreteGroup::symmetric(4).unwrap();
        assert_eq!(s4.abelianization().unwrap(), Abelianization::PGroup(2));
        assert_eq!(g(6, &["(1,2,3,4,5,6)"]).abelianization().unwrap(), Abelianization::Mixed(2, 3));
        let d12 = g(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]);
        assert_eq!(d12.order(), 12);
        assert_eq!(d12.derived_subgroup().unwrap().order(), 3);
        assert_eq!(d12.abelianization().unwrap(), Abelianization::PGroup(2));
        assert_eq!(ConcreteGroup::alternating(5).unwrap().abelianization().unwrap(), Abelianization::Trivial);
        assert!(s4.is_solvable().unwrap());
        assert!(!ConcreteGroup::symmetric(5).unwrap().is_solvable().unwrap());
    }

    #[test]
    fn primary_counts() {
        assert_eq!(ConcreteGroup::symmetric(3).unwrap().primary_elements().len(), 6);
        assert_eq!(ConcreteGroup::symmetric(5).unwrap().primary_elements().len(), 100);
        assert_eq!(g(6, &["(1,2,3,4,5,6)"]).primary_elements().len(), 4);
    }

    #[test]
    fn quotients() {
        let s4 = ConcreteGroup::symmetric(4).unwrap();
        let v4 = g(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(s4.quotient(&g(4, &["(1,2)"])).is_err());
    }
}
