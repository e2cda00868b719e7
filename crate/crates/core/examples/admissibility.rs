//! How far the zeta function of a linear map is defined, and the spectral
//! data behind it.

use lefschetz_zeta::spectral::{
    admissibility_order, char_poly, cyclotomic, index_sequence_of_matrix, real_root_count,
    spectral_class, RootInterval,
};
use lefschetz_zeta::RationalMatrix;

fn main() -> lefschetz_zeta::Result<()> {
    for d in 1..=6 {
        println!("Phi_{d} = {}", cyclotomic(d));
    }
    let cases = [
        ("rotation by 90 degrees", RationalMatrix::from_integers(&[[0, -1], [1, 0]])?),
        ("[[-1]]", RationalMatrix::from_integers(&[[-1]])?),
        ("[[1]]", RationalMatrix::from_integers(&[[1]])?),
        ("cat map", RationalMatrix::from_integers(&[[2, 1], [1, 1]])?),
        ("diag(-3, 0, 5)", RationalMatrix::diagonal(&[-3, 0, 5])),
    ];
    for (name, a) in &cases {
        let n = admissibility_order(a, 10)?;
        println!("{name}: admissible to order {n}");
        match index_sequence_of_matrix(a, 10) {
            Ok(i) => println!("  indices {:?}", i.values().iter().map(ToString::to_string).collect::<Vec<_>>()),
            Err(e) => println!("  {e}"),
        }
    }
    let a = RationalMatrix::from_integers(&[[-3, 1, 0], [0, 2, 1], [1, 0, 4]])?;
    let p = char_poly(&a)?;
    println!("char poly {p}");
    println!(
        "roots below -1: {}, above 1: {}, class {}",
        real_root_count(&p, RootInterval::BelowMinusOne)?,
        real_root_count(&p, RootInterval::AboveOne)?,
        spectral_class(&a)?
    );
    Ok(())
}
