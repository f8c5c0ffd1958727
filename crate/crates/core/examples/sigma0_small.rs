//! σ₀ and σ for small symmetric groups and the shipped corpus.
//!
//! cargo run --release --example sigma0_small

use primcov::cover::{sigma0_exact, sigma_exact, Budget, Mode};
use primcov::families::Catalog;
use primcov::permgroup::{ConcreteGroup, Corpus};

fn main() {
    for n in 3..=7 {
        let g = ConcreteGroup::symmetric(n).unwrap();
        let mode = if n <= 4 { Mode::Lattice } else { Mode::Catalog(Catalog::builtin()) };
        let s = sigma0_exact(&g, mode, Budget::unlimited()).unwrap();
        println!("σ₀(S{n}) = {}", s.display());
    }
    println!();
    for e in Corpus::builtin().entries() {
        let g = e.group().unwrap();
        let s0 = sigma0_exact(&g, Mode::Lattice, Budget::unlimited()).unwrap();
        let s = sigma_exact(&g, Mode::Lattice, Budget::unlimited()).unwrap();
        println!("{:<10} order {:>3}  σ₀ {:<4} σ {}", e.name, g.order(), s0.display(), s.display());
    }
}
