//! Sweeps every odd 2-element of S12 through the anchored collection of
//! 216 subgroups.
//!
//! cargo run --release --example anchored_cover_s12

use primcov::families::Catalog;
use primcov::verify::check_32a;

fn main() {
    let r = check_32a(2, true, Catalog::builtin()).unwrap();
    print!("{r}");
}
