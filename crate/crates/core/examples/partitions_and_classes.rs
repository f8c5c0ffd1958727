//! Cycle types, class sizes and the 2-adic data behind the main class Π.
//!
//! cargo run --example partitions_and_classes -- 14

use primcov::combinat::{
    binary_partitions, class_size, f_ratio, format_ratio, partitions, pi_class, s_exponent, two_adic,
};

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);

    println!(
        "{} partitions of {n}, {} with 2-power parts",
        partitions(n as u32).len(),
        binary_partitions(n as u32).len()
    );
    println!("2-adic exponents of {n}: {:?}", two_adic(n).unwrap().exponents());

    match pi_class(n) {
        Ok(pi) => {
            println!("Π = {pi}, |Π| = {}", class_size(&pi));
            println!("s = {}, f(n) = {}", s_exponent(n).unwrap(), format_ratio(&f_ratio(n).unwrap()));
        }
        Err(e) => println!("no Π at {n}: {e}"),
    }
    for lam in ["2,2,2", "4,1,1", "2,1,1,1,1"] {
        let p = lam.parse().unwrap();
        println!("|({lam})| in S6 = {}", class_size(&p));
    }
}
