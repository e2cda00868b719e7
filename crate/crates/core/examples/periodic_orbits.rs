//! Zeta functions of hyperbolic periodic orbits and of their iterates.

use lefschetz_zeta::spectral::{orbit_zeta, orbit_zeta_iterate};
use lefschetz_zeta::transforms::{exponents_from_orbit_counts, linear_coefficient_of_iterate};
use lefschetz_zeta::zeta::{factorize, indices_from_zeta};
use lefschetz_zeta::{OrbitCount, OrbitTable, RationalMatrix};

fn main() -> lefschetz_zeta::Result<()> {
    let order = 10;
    // a saddle orbit of period 2 flipping orientation, and a source of period 3
    let table = OrbitTable::from_linearizations(&[
        (2, RationalMatrix::from_integers(&[[0, 3], [-1, 0]])?),
        (3, RationalMatrix::from_integers(&[[2, 0], [0, 3]])?),
    ])?;
    for c in table.counts() {
        println!("period {}: a = {}, b = {}", c.period, c.a, c.b);
    }
    let z = orbit_zeta(&table, order)?;
    println!("zeta      = {z}");
    println!("indices   = {:?}", indices_from_zeta(&z).values().iter().map(ToString::to_string).collect::<Vec<_>>());
    let e = exponents_from_orbit_counts(&table, order)?;
    println!("exponents = {:?}", e.iter().map(|(l, v)| format!("{l}: {v}")).collect::<Vec<_>>());
    assert_eq!(factorize(&z), e);

    let single = OrbitTable::from_counts(vec![OrbitCount { period: 4, a: 1, b: -1 }])?;
    for k in 1..=8 {
        let zk = orbit_zeta_iterate(4, 1, -1, k, order);
        println!(
            "k = {k}: zeta(f^k) = {zk}, linear coefficient {}",
            linear_coefficient_of_iterate(&single, k)
        );
    }
    Ok(())
}
