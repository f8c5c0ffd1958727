//! The unbeatability certificate for the n_2-set stabilizers at one degree.
//!
//! cargo run --example unbeatable -- 18

use primcov::families::{unbeatable_certificate, Catalog, Evidence};

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(18);
    let rep = match unbeatable_certificate(n, Catalog::builtin()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("n = {n}, Π = {}, target |X_{} ∩ Π| = {}", rep.pi, rep.n2, rep.target);
    for c in &rep.competitors {
        let how = match &c.evidence {
            Evidence::Exact { count } => format!("exact {count}"),
            Evidence::OrderBound { bound, assumed } => {
                format!("below {bound}{}", if *assumed { " (assumed)" } else { "" })
            }
        };
        println!("  {:<14} {:<40} ratio {}  {:?}", c.family, how, c.ratio, c.outcome);
    }
    println!("verdict: {:?}", rep.verdict);
    for a in &rep.assumed_inputs {
        println!("assumed: {a}");
    }
}
