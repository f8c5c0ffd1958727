//! The claimed σ₀(S_n) for 3 <= n <= 64 with the checks behind each row.
//!
//! cargo run --release --example theorem_table

use primcov::families::Catalog;
use primcov::verify::reproduce_theorem_table;

fn main() {
    for row in reproduce_theorem_table(64, false, Catalog::builtin()).unwrap() {
        println!("{:>3}  {:<28} {}  [{}]", row.n, row.case, row.claim, row.certified_by.join(", "));
    }
}
