use num_traits::One;

use super::report::CheckReport;
use crate::combinat::{f_ratio, factorial, is_excluded_degree, is_prime, pow, smallest_prime_divisor, Nat};
use crate::families::{imprimitive_order_max, primitive_order_bound, wreath_order};

fn swap_lhs(a: u64, b: u64) -> Nat {
    factorial(a).pow(b as u32) * factorial(b)
}

/// `a!^b b! >= b!^a a!` for `1 <= b < a <= limit`, equality exactly at `b = 1`.
pub fn check_lemma_swap(limit: u64) -> CheckReport {
    let mut r = CheckReport::new("lemma-swap", format!("1 <= b < a <= {limit}"));
    let mut pairs = 0u64;
    for a in 2..=limit {
        for b in 1..a {
            pairs += 1;
            let (l, rhs) = (swap_lhs(a, b), swap_lhs(b, a));
            let ok = if b == 1 { l == rhs } else { l > rhs };
            if !r.require(ok, || format!("(a, b) = ({a}, {b}): {l} vs {rhs}")) {
                return r;
            }
        }
    }
    r.witness("pairs", pairs);
    r.witness("(3,2)", format!("{} > {}", swap_lhs(3, 2), swap_lhs(2, 3)));
    r.witness("(5,1)", format!("{} = {}", swap_lhs(5, 1), swap_lhs(1, 5)));
    r
}

fn divisors(m: u64) -> Vec<u64> {
    (2..m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// `b!^a a!`, the order of `S_b wr S_a`.
fn wr(b: u64, a: u64) -> Nat {
    factorial(b).pow(a as u32) * factorial(a)
}

/// For composite `m <= limit`: the factorizations `m = a1 b1 = a2 b2` with
/// `2 <= a_i <= b_i` and `a1 <= a2` satisfy `b1!^a1 a1! >= b2!^a2 a2!`,
/// equality only for equal factorizations; and the smallest prime `p` gives
/// the strict maximum of `(m/d)!^d d!` over `1 < d < m`.
pub fn check_lemma_ab(limit: u64) -> CheckReport {
    let mut r = CheckReport::new("lemma-ab", format!("composite m <= {limit}"));
    let (mut composites, mut pairs) = (0u64, 0u64);
    for m in 4..=limit {
        if is_prime(m) {
            continue;
        }
        composites += 1;
        let small: Vec<u64> = divisors(m).into_iter().filter(|&a| a * a <= m).collect();
        for &a1 in &small {
            for &a2 in &small {
                if a1 > a2 {
                    continue;
                }
                pairs += 1;
                let (l, rhs) = (wr(m / a1, a1), wr(m / a2, a2));
                let ok = if a1 == a2 { l == rhs } else { l > rhs };
                if !r.require(ok, || format!("m = {m}, a1 = {a1}, a2 = {a2}: {l} vs {rhs}")) {
                    return r;
                }
            }
        }
        let p = smallest_prime_divisor(m).unwrap();
        let best = wr(m / p, p);
        for d in divisors(m) {
            let v = wr(m / d, d);
            let ok = if d == p { v == best } else { v < best };
            if !r.require(ok, || format!("m = {m}, d = {d}: {v} vs {best} at p = {p}")) {
                return r;
            }
        }
    }
    r.witness("composites", composites).witness("factorization pairs", pairs);
    let m12: Vec<String> = [2u64, 3, 4, 6].iter().map(|&d| format!("d={d}: {}", wr(12 / d, d))).collect();
    r.witness("m=12", m12.join(", "));
    r.witness("m=15 max at", if wr(5, 3) > wr(3, 5) { 3 } else { 5 });
    r
}

/// `2 floor(n/2)! ceil(n/2)!`.
pub fn half_split_bound(n: u64) -> Nat {
    Nat::from(2u32) * factorial(n / 2) * factorial(n - n / 2)
}

/// For `n` in `lo..=hi`: every imprimitive maximal subgroup, and the
/// imported primitive order bound, stay at most `2 floor(n/2)! ceil(n/2)!`,
/// with equality only for the half-block stabilizers.
pub fn check_order_dominance(lo: u64, hi: u64) -> CheckReport {
    let mut r = CheckReport::new("order-dominance", format!("{lo} <= n <= {hi}"));
    r.assume("primitive groups not containing A_n have order below 3^n, and below 2^n for n > 24");
    for n in lo..=hi {
        let bound = half_split_bound(n);
        let prim = primitive_order_bound(n as u32);
        if !r.require(prim < bound, || format!("n = {n}: primitive bound {prim} >= {bound}")) {
            return r;
        }
        if is_prime(n) {
            continue;
        }
        let top = imprimitive_order_max(n as u32).expect("composite");
        for d in divisors(n) {
            let w = wreath_order(n as u32, d as u32);
            let ok = w <= top && if 2 * d == n { w == bound } else { w < bound };
            if !r.require(ok, || format!("n = {n}, d = {d}: |W_d| = {w}, bound {bound}")) {
                return r;
            }
        }
    }
    r.witness("n=12", format!("3^12 = {} < {} = |W_6|", pow(3, 12), half_split_bound(12)));
    r.witness("n=13", format!("3^13 = {} < {}", pow(3, 13), half_split_bound(13)));
    if hi > 24 {
        r.witness("2^n used from", 25);
    }
    r
}

/// The exceptional degrees where `f(n) >= 1`.
pub fn expected_f_exception(n: u64) -> bool {
    (n % 2 == 1 && n <= 13) || (n.is_multiple_of(2) && n <= 20) || n == 40
}

/// Evaluates `f(n)` exactly on the whole domain up to `n_max` and compares
/// `{n : f(n) >= 1}` with the stated exception set.
pub fn check_f_characterization(n_max: u64) -> CheckReport {
    let mut r = CheckReport::new("f-char", format!("5 <= n <= {n_max}, n not 2^a or 3*2^a"));
    let mut exceptions = Vec::new();
    let mut domain = 0;
    for n in 5..=n_max {
        if is_excluded_degree(n) {
            continue;
        }
        domain += 1;
        let f = f_ratio(n).expect("in domain");
        let below = f < num_rational::BigRational::one();
        if !below {
            exceptions.push(n);
        }
        if !r.require(below != expected_f_exception(n), || format!("n = {n}: f = {f}")) {
            return r;
        }
    }
    r.witness("degrees", domain);
    r.witness("exceptions", format!("{exceptions:?}"));
    for n in [13u64, 15, 22, 40] {
        if n <= n_max {
            r.witness(format!("f({n})"), f_ratio(n).unwrap());
        }
    }
    r
}

/// `2.718281`, below `e`.
pub fn e_lower() -> (Nat, Nat) {
    (Nat::from(2_718_281u32), Nat::from(1_000_000u32))
}

/// Sanity only: `k! > e (k/e)^k` for `2 <= k <= k_max`, with `e` replaced by
/// a rational lower bound, which only makes the right side larger.
pub fn check_stirling(k_max: u64) -> CheckReport {
    let mut r = CheckReport::new("stirling", format!("2 <= k <= {k_max} (sanity only)"));
    let (num, den) = e_lower();
    for k in 2..=k_max {
        // k! > e^(1-k) k^k  <=>  k! num^(k-1) > k^k den^(k-1)
        let lhs = factorial(k) * num.pow(k as u32 - 1);
        let rhs = pow(k, k) * den.pow(k as u32 - 1);
        if !r.require(lhs > rhs, || format!("k = {k}")) {
            return r;
        }
    }
    r.witness("e lower bound", "2718281/1000000");
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_limits_pass() {
        assert!(check_lemma_swap(12).passed());
        assert!(check_lemma_ab(30).passed());
        assert!(check_order_dominance(12, 30).passed());
        assert!(check_f_characterization(60).passed());
        assert!(check_stirling(50).passed());
    }

    #[test]
    fn example_values() {
        assert_eq!(swap_lhs(3, 2), Nat::from(72u32));
        assert_eq!(swap_lhs(2, 3), Nat::from(48u32));
        assert_eq!(wr(6, 2), Nat::from(1036800u32));
        assert_eq!(wr(4, 3), Nat::from(82944u32));
        assert_eq!(wr(3, 4), Nat::from(31104u32));
        assert_eq!(wr(2, 6), Nat::from(46080u32));
        assert!(wr(5, 3) > wr(3, 5));
    }
}
