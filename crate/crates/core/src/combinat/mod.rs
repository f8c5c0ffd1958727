//! Exact integer combinatorics used throughout the crate.
//!
//! Every quantity is a [`Nat`] (arbitrary precision) or an [`ExactRatio`];
//! nothing here rounds.

mod partition;
mod subsum;
mod twoadic;

pub use partition::{binary_partitions, partitions, Partition};
pub use subsum::{check_subsum_lemma, subsum_exists, two_disjoint_subsums, SubsumCounterexample, SubsumReport};
pub use twoadic::{f_ratio, hypothesis_domain, is_excluded_degree, pi_class, s_exponent, two_adic, TwoAdicExpansion};

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Nat = BigUint;
pub type ExactRatio = BigRational;

pub fn factorial(n: u64) -> Nat {
    (1..=n).fold(Nat::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` as a big integer.
pub fn pow(base: u64, exp: u64) -> Nat {
    num_traits::pow(Nat::from(base), exp as usize)
}

/// Number of permutations of `Sₙ` with cycle type `lambda`, where `n` is the
/// sum of the parts: `n! / ∏ iᵐⁱ mᵢ!`.
pub fn class_size(lambda: &Partition) -> Nat {
    let mut denom = Nat::one();
    for (part, mult) in lambda.multiplicities() {
        denom *= pow(part as u64, mult as u64) * factorial(mult as u64);
    }
    factorial(lambda.n() as u64) / denom
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of any permutation with cycle type `lambda`: that of `n − #parts`.
pub fn sign_of_type(lambda: &Partition) -> Parity {
    if (lambda.n() as usize - lambda.len()).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    (2..=n).find(|d| n.is_multiple_of(*d))
}

/// Largest power of the prime `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Domain { n, reason: "p-part of 0 is undefined".into() });
    }
    let mut m = n;
    let mut part = 1;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    Ok(part)
}

/// Smallest integer not below the ratio.
pub fn ceil_ratio(r: &ExactRatio) -> num_bigint::BigInt {
    r.ceil().to_integer()
}

pub fn ratio(num: &Nat, den: &Nat) -> ExactRatio {
    BigRational::new(num.clone().into(), den.clone().into())
}

/// Exact decimal rendering of a ratio, e.g. `115.5` or `1920/6435`.
///
/// Terminating decimals are written out in full; everything else is shown
/// as a reduced fraction.
pub fn format_ratio(r: &ExactRatio) -> String {
    if r.is_integer() {
        return r.to_integer().to_string();
    }
    let mut den = r.denom().clone();
    let two = num_bigint::BigInt::from(2);
    let five = num_bigint::BigInt::from(5);
    let mut digits = 0usize;
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if den.is_one() {
        digits = twos.max(fives);
    }
    if digits == 0 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let scale = num_traits::pow(num_bigint::BigInt::from(10), digits);
    let scaled = (r * BigRational::from_integer(scale)).to_integer();
    let neg = scaled.sign() == num_bigint::Sign::Minus;
    let s = scaled.magnitude().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

/// Lossy conversion for human display only.
pub fn approx_f64(r: &ExactRatio) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(s: &str) -> Nat {
        s.parse().unwrap()
    }

    // Independent oracle: repeated multiplication in u128.
    fn factorial_u128(n: u32) -> u128 {
        (1..=n as u128).product()
    }

    // Independent oracle: Pascal's triangle.
    fn pascal(n: usize, k: usize) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        row.get(k).copied().unwrap_or(0)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Nat::one());
        assert_eq!(factorial(6), Nat::from(720u32));
        assert_eq!(factorial(16), nat("20922789888000"));
        for n in 0..=30 {
            assert_eq!(factorial(n as u64), Nat::from(factorial_u128(n)));
        }
        assert_eq!(factorial(500).to_string().len(), 1135);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(8, 4), Nat::from(70u32));
        assert_eq!(binomial(11, 3), Nat::from(165u32));
        assert_eq!(binomial(5, 7), Nat::zero());
        for n in 0..40 {
            for k in 0..=n + 1 {
                assert_eq!(binomial(n as u64, k as u64), Nat::from(pascal(n, k)));
            }
        }
    }

    #[test]
    fn class_sizes() {
        let cs = |s: &str| class_size(&s.parse().unwrap());
        assert_eq!(cs("2,2,2"), Nat::from(15u32));
        assert_eq!(cs("4,1,1"), Nat::from(90u32));
        assert_eq!(cs("4,4,2"), Nat::from(56700u32));
        assert_eq!(cs("5,5"), Nat::from(72576u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=12u32 {
            let total: Nat = partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn signs() {
        let sg = |s: &str| sign_of_type(&s.parse().unwrap());
        assert_eq!(sg("2,2,2"), Parity::Odd);
        assert_eq!(sg("5,5"), Parity::Even);
        assert_eq!(sg("8,4,2"), Parity::Odd);
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(40, 2).unwrap(), 8);
        assert_eq!(p_part(10, 2).unwrap(), 2);
        assert_eq!(p_part(7, 2).unwrap(), 1);
        assert_eq!(p_part(40, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn ratio_formatting() {
        let r = ratio(&factorial(12), &(Nat::from(8u32) * factorial(6) * factorial(6)));
        assert_eq!(format_ratio(&r), "115.5");
        assert_eq!(ceil_ratio(&r), 116.into());
        let r = ratio(&Nat::from(1920u32), &Nat::from(6435u32));
        assert_eq!(format_ratio(&r), "128/429");
        assert_eq!(format_ratio(&ratio(&Nat::from(4u32), &Nat::one())), "4");
        assert_eq!(format_ratio(&ratio(&Nat::from(1u32), &Nat::from(40u32))), "0.025");
    }
}
