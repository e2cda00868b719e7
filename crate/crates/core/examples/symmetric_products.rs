//! Index sequences and symmetric-product indices, by recurrence and by
//! brute-force sums over compositions.

use lefschetz_zeta::transforms::{
    compositions_of, indices_from_sp_compositions, indices_from_sp_recurrence,
    sp_from_indices_compositions, sp_from_indices_recurrence,
};
use lefschetz_zeta::zeta::zeta_from_indices;
use lefschetz_zeta::IndexSequence;

fn main() -> lefschetz_zeta::Result<()> {
    // one attracting orbit of period 2 and one of period 3
    let i = IndexSequence::from_integers(&[0, 2, 3, 2, 0, 5, 0, 2]);
    let s = sp_from_indices_recurrence(&i);
    println!("i   = {:?}", i.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("s   = {:?}", s.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("zeta = {}", zeta_from_indices(&i));

    for n in 1..=i.len() {
        let oracle = sp_from_indices_compositions(&i, n)?;
        let back = indices_from_sp_compositions(&s, n)?;
        println!(
            "n = {n}: {} compositions, s_n = {oracle}, i_n = {back}",
            compositions_of(n)?.len()
        );
    }
    println!("i -> s -> i ok: {}", indices_from_sp_recurrence(&s) == i);
    println!("n = 21: {}", compositions_of(21).unwrap_err());
    Ok(())
}
