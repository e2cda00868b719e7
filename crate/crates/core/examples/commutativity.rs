//! AB and BA have the same zeta function, also for rectangular A and B.

use lefschetz_zeta::spectral::{char_poly, commutativity_witness};
use lefschetz_zeta::RationalMatrix;

fn main() -> lefschetz_zeta::Result<()> {
    let a = RationalMatrix::from_integers(&[[1, 2, 0], [0, 1, 3]])?;
    let b = RationalMatrix::from_integers(&[[2, 0], [1, 1], [0, 2]])?;
    let ab = a.mul(&b)?;
    let ba = b.mul(&a)?;
    println!("AB =\n{ab}\nBA =\n{ba}");
    println!("char AB = {}", char_poly(&ab)?);
    println!("char BA = {}", char_poly(&ba)?);
    let w = commutativity_witness(&a, &b, 10)?;
    println!("zeta(AB) = {}", w.zeta_ab);
    println!("zeta(BA) = {}", w.zeta_ba);
    println!("pass: {}", w.pass);
    println!("shape check: {}", commutativity_witness(&a, &a, 4).unwrap_err());
    Ok(())
}
