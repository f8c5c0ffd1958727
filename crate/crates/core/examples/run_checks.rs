//! Runs checks by id and prints them as a table or as JSON lines.
//!
//! cargo run --release --example run_checks -- s5 s6 lemma-swap
//! cargo run --release --example run_checks -- --jsonl counts

use primcov::verify::{render, run_check, Format, Params, CHECK_IDS};

fn main() {
    let mut format = Format::Table;
    let mut ids = Vec::new();
    for a in std::env::args().skip(1) {
        if a == "--jsonl" {
            format = Format::JsonLines;
        } else {
            ids.push(a);
        }
    }
    if ids.is_empty() {
        ids = vec!["lemma-swap".into(), "counts".into(), "s5".into()];
        eprintln!("available: {}", CHECK_IDS.join(" "));
    }
    let p = Params::default();
    let mut reports = Vec::new();
    for id in &ids {
        reports.extend(run_check(id, &p).unwrap());
    }
    print!("{}", render(&reports, format));
}
