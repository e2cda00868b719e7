//! Drives the `lzeta` command surface in-process and prints its JSON.

use lefschetz_zeta::cli::run;

fn main() {
    let calls: &[&[&str]] = &[
        &["macdonald", "--chi", "2", "--order", "4"],
        &["factorize", "--input", r#"{"order":4,"coeffs":["1","1","0","0","0"]}"#],
        &["zeta-from-indices", "--input", r#"["1/2", "0", "1"]"#],
        &["dold-check", "--input", "[1,0,0,0]"],
        &["matrix-zeta", "--input", r#"{"dim":2,"rows":[["2","1"],["1","1"]]}"#, "--order", "5"],
        &["admissibility", "--input", r#"{"dim":1,"rows":[["-1"]]}"#, "--n-max", "10"],
        &["matrix-zeta", "--input", r#"{"dim":1,"rows":[["-1"]]}"#],
    ];
    for argv in calls {
        let out = run(argv.iter().copied());
        print!("$ lzeta {}\n[{}] {}", argv.join(" "), out.status, out.stdout);
    }
}
