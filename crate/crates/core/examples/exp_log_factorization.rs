//! exp/log between series and the unique product form prod (1 - t^l)^{e_l}.

use lefschetz_zeta::series::{int, ratio};
use lefschetz_zeta::zeta::{
    exp_series, expand_factors, factorize, is_integral, log_series, pow_rational,
};
use lefschetz_zeta::{FactorExponents, Integrality, MonicSeries, TruncatedSeries};

fn show(f: &FactorExponents) -> String {
    let parts: Vec<String> = f.iter().map(|(l, e)| format!("(1 - t^{l})^({e})")).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn main() -> lefschetz_zeta::Result<()> {
    let order = 8;
    let one_plus_t = MonicSeries::from_integers(&[1, 1, 0, 0, 0, 0, 0, 0, 0])?;
    println!("1 + t         = {}", show(&factorize(&one_plus_t)));

    let x = TruncatedSeries::monomial(int(1), 1, order);
    let e = exp_series(&x)?;
    println!("exp(t)        = {e}");
    println!("log(exp(t))   = {}", log_series(&e));
    if let Integrality::Fractional { index, value } = is_integral(&e) {
        println!("first fractional coefficient of exp(t): t^{index} has {value}");
    }

    let sqrt = pow_rational(&MonicSeries::geometric(order), &ratio(1, 2));
    println!("(1-t)^(-1/2)  = {sqrt}");
    let f = factorize(&sqrt);
    println!("factors       = {}", show(&f));
    println!("roundtrip ok  = {}", expand_factors(&f, order) == sqrt);

    let integral = MonicSeries::from_integers(&[1, 3, -2, 7, 0, 1, 1, -4, 2])?;
    let g = factorize(&integral);
    println!("{integral}");
    println!("  = {}", show(&g));
    println!("  integer exponents: {}", g.is_integral());
    Ok(())
}
