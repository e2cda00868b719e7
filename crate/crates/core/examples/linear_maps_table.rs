//! The four zeta functions of hyperbolic linear maps, for f and f^2, with the
//! linear truncations, each computed from a concrete matrix both ways.

use lefschetz_zeta::spectral::{matrix_zeta, spectral_class};
use lefschetz_zeta::RationalMatrix;

fn main() -> lefschetz_zeta::Result<()> {
    let order = 4;
    let samples = [
        RationalMatrix::from_integers(&[[0, 1], [0, 0]])?,
        RationalMatrix::from_integers(&[[2, 1], [1, 1]])?,
        RationalMatrix::from_integers(&[[-2]])?,
        RationalMatrix::from_integers(&[[1, 2], [3, 0]])?,
    ];
    println!("{:<8} {:<34} {:<16} {:<34} zeta_1(f^2)", "class", "zeta(f)", "zeta_1(f)", "zeta(f^2)");
    for a in &samples {
        let class = spectral_class(a)?;
        let f = matrix_zeta(a, order)?;
        let f2 = matrix_zeta(&a.pow(2)?, order)?;
        assert_eq!(f.zeta, f.zeta_from_indices);
        assert_eq!(f2.zeta, f2.zeta_from_indices);
        println!(
            "{:<8} {:<34} {:<16} {:<34} {}",
            class.to_string(),
            f.zeta.to_string(),
            f.zeta.truncate(1).to_string(),
            f2.zeta.to_string(),
            f2.zeta.truncate(1)
        );
    }
    Ok(())
}
