//! Truncated power series: arithmetic, inverses and the substitution t -> t^k.

use lefschetz_zeta::series::{int, ratio};
use lefschetz_zeta::{MonicSeries, TruncatedSeries};

fn main() -> lefschetz_zeta::Result<()> {
    let a = TruncatedSeries::new(vec![int(1), int(2), ratio(1, 3), int(0), int(-1)])?;
    let b = TruncatedSeries::from_integers(&[0, 1, 1])?;
    println!("a       = {a}");
    println!("b       = {b}");
    // binary operations keep the smaller order
    println!("a + b   = {}", a.add(&b));
    println!("a * b   = {}", a.mul(&b));
    println!("a'      = {}", a.derivative());

    let z = MonicSeries::new(a)?;
    let inv = z.inverse();
    println!("1/a     = {inv}");
    println!("a * 1/a = {}", z.mul(&inv));

    let geometric = MonicSeries::geometric(6);
    println!("1/(1-t) = {geometric}");
    let sub = geometric.substitute_tk(2, 12)?;
    println!("t -> t^2: {sub}");
    match geometric.substitute_tk(2, 13) {
        Err(e) => println!("target order 13 from order 6 under t^2: {e}"),
        Ok(s) => println!("unexpected {s}"),
    }
    Ok(())
}
