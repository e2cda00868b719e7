//! Local zeta functions of surface fixed points and the Macdonald series.

use lefschetz_zeta::spectral::{lecalvez_zeta, macdonald_series};
use lefschetz_zeta::transforms::sp_from_indices_recurrence;
use lefschetz_zeta::zeta::indices_from_zeta;

fn main() {
    let order = 16;
    for (q, r) in [(1, 1), (2, 1), (3, 2), (4, 3)] {
        let z = lecalvez_zeta(q, r, order);
        println!("q = {q}, r = {r}: degree {:?}, {z}", z.inner().degree());
    }
    // negative r gives no polynomial
    println!("q = 2, r = -1: {}", lecalvez_zeta(2, -1, 8));

    // local zeta values are the symmetric-product indices
    let z = lecalvez_zeta(3, 2, order);
    let s = sp_from_indices_recurrence(&indices_from_zeta(&z));
    println!("SP_n indices: {:?}", s.values().iter().map(ToString::to_string).collect::<Vec<_>>());

    for chi in [-2, 0, 1, 2, 3] {
        println!("chi = {chi:>2}: {}", macdonald_series(chi, 6));
    }
}
