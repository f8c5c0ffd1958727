use num_bigint::BigInt;
use num_rational::BigRational;

use super::{binomial, p_part, ExactRatio, Partition};
use crate::error::{Error, Result};

/// `n = Σ 2^{aᵢ}` with `a₁ > a₂ > … > a_t ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoAdicExpansion {
    exponents: Vec<u32>,
    n: u64,
}

impl TwoAdicExpansion {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of terms `t`.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn reconstruct(&self) -> u64 {
        self.exponents.iter().map(|&a| 1u64 << a).sum()
    }
}

pub fn two_adic(n: u64) -> Result<TwoAdicExpansion> {
    if n == 0 {
        return Err(Error::Domain { n, reason: "2-adic expansion needs n ≥ 1".into() });
    }
    let exponents = (0..64u32).rev().filter(|&a| n >> a & 1 == 1).collect();
    Ok(TwoAdicExpansion { exponents, n })
}

/// `n ∈ {2^a, 3·2^a}`.
pub fn is_excluded_degree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let odd = n >> n.trailing_zeros();
    odd == 1 || odd == 3
}

/// Degrees on which the class `Π` and the ratio `f(n)` are defined: `n ≥ 5`
/// and `n` not of the form `2^a` or `3·2^a`.
pub fn hypothesis_domain(n: u64) -> Result<TwoAdicExpansion> {
    if n < 5 {
        return Err(Error::Domain { n, reason: "needs n ≥ 5".into() });
    }
    if is_excluded_degree(n) {
        return Err(Error::Domain { n, reason: "n is of the form 2^a or 3·2^a".into() });
    }
    two_adic(n)
}

fn parity_matches_terms(exp: &TwoAdicExpansion) -> bool {
    exp.n() % 2 == exp.len() as u64 % 2
}

/// The odd-sign class of 2-elements built from the 2-adic expansion of `n`:
/// `(2^{a₁},…,2^{a_t})` when `n ≢ t (mod 2)`, otherwise the largest part is
/// split into two halves.
pub fn pi_class(n: u64) -> Result<Partition> {
    let exp = hypothesis_domain(n)?;
    let mut parts: Vec<u32> = exp.exponents().iter().map(|&a| 1u32 << a).collect();
    if parity_matches_terms(&exp) {
        let half = parts[0] / 2;
        parts[0] = half;
        parts.insert(0, half);
    }
    Partition::new(parts)
}

/// The exponent `s` with `|X_{n₂} ∩ Π| = n₂!(n−n₂)!/2^s`.
pub fn s_exponent(n: u64) -> Result<u64> {
    let exp = hypothesis_domain(n)?;
    let sum: u64 = exp.exponents().iter().map(|&a| a as u64).sum();
    Ok(if parity_matches_terms(&exp) { sum + exp.exponents()[0] as u64 - 1 } else { sum })
}

/// `f(n) = 2^{s+1} · C(n, n₂) / C(n, ⌊n/2⌋)`.
pub fn f_ratio(n: u64) -> Result<ExactRatio> {
    let s = s_exponent(n)?;
    let n2 = p_part(n, 2)?;
    let num = super::pow(2, s + 1) * binomial(n, n2);
    let den = binomial(n, n / 2);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn expansions() {
        assert_eq!(two_adic(14).unwrap().exponents(), &[3, 2, 1]);
        assert_eq!(two_adic(11).unwrap().exponents(), &[3, 1, 0]);
        assert_eq!(two_adic(40).unwrap().exponents(), &[5, 3]);
        assert!(two_adic(0).is_err());
        for n in 1..2000 {
            let e = two_adic(n).unwrap();
            assert_eq!(e.reconstruct(), n);
            assert!(e.exponents().windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn excluded_degrees() {
        let excluded: Vec<u64> = (1..50).filter(|&n| is_excluded_degree(n)).collect();
        assert_eq!(excluded, vec![1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48]);
    }

    #[test]
    fn pi_classes() {
        let pi = |n| pi_class(n).unwrap().to_string();
        assert_eq!(pi(14), "(8,4,2)");
        assert_eq!(pi(11), "(4,4,2,1)");
        assert_eq!(pi(20), "(8,8,4)");
        assert_eq!(pi(5), "(4,1)");
        assert_eq!(pi(7), "(2,2,2,1)");
        assert_eq!(pi(10), "(4,4,2)");
        assert_eq!(pi(18), "(8,8,2)");
        assert_eq!(pi(40), "(16,16,8)");
        assert!(pi_class(12).is_err());
        assert!(pi_class(3).is_err());
    }

    #[test]
    fn s_exponents() {
        assert_eq!(s_exponent(11).unwrap(), 6);
        assert_eq!(s_exponent(18).unwrap(), 8);
        assert_eq!(s_exponent(14).unwrap(), 6);
    }

    #[test]
    fn f_values() {
        assert_eq!(f_ratio(5).unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(f_ratio(15).unwrap(), BigRational::new(1920.into(), 6435.into()));
        assert!(f_ratio(40).unwrap() > BigRational::one());
        assert!(f_ratio(22).unwrap() < BigRational::one());
    }
}
