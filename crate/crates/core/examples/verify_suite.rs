//! Runs the seeded identity suites and prints one line per property.
//!
//! `cargo run --release --example verify_suite -- 16 7 100`

use lefschetz_zeta::verify::verify;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let order = args.first().copied().unwrap_or(8) as usize;
    let seed = args.get(1).copied().unwrap_or(0);
    let count = args.get(2).copied().unwrap_or(10) as usize;
    let report = verify(order, seed, count);
    for p in &report.properties {
        let mark = if p.pass { "ok  " } else { "FAIL" };
        println!("{mark} {:<20} {:<36} {:>5}", p.module, p.name, p.instances);
        if let Some(c) = &p.counterexample {
            println!("     counterexample: {c}");
        }
    }
    println!("all pass: {}", report.all_pass());
}
