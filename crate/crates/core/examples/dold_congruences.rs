//! Dold coefficients a_k = (1/k) sum_{d | k} mu(k/d) i_d for a linear map and
//! for a sequence that is not the index sequence of any map.

use lefschetz_zeta::spectral::index_sequence_of_matrix;
use lefschetz_zeta::transforms::{dold_check, dold_coefficients, indices_from_dold, mobius};
use lefschetz_zeta::{IndexSequence, RationalMatrix};

fn report(label: &str, i: &IndexSequence) {
    let a = dold_coefficients(i);
    let v = dold_check(i);
    println!("{label}");
    println!("  i = {:?}", i.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("  a = {:?}", a.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    match v.first_violation {
        None => println!("  congruences hold"),
        Some((k, value)) => println!("  first violation at k = {k}: a_k = {value}"),
    }
    println!("  reconstruction ok: {}", indices_from_dold(&a) == *i);
}

fn main() -> lefschetz_zeta::Result<()> {
    println!("mu(1..12) = {:?}", (1..=12).map(mobius).collect::<Vec<_>>());
    let cat = RationalMatrix::from_integers(&[[2, 1], [1, 1]])?;
    report("cat map [[2,1],[1,1]]", &index_sequence_of_matrix(&cat, 12)?);
    let a = RationalMatrix::from_integers(&[[-3, 1, 0], [2, 0, 1], [1, 1, 4]])?;
    report("3x3 integer matrix", &index_sequence_of_matrix(&a, 12)?);
    report("control (1, 0, 0, ...)", &IndexSequence::from_integers(&[1, 0, 0, 0, 0, 0]));
    Ok(())
}
