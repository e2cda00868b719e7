//! Group structure of monic series and the Lefschetz zeta bridge.
//!
//! `exp` and `log` are mutually inverse isomorphisms between the additive
//! group `t Q[[t]]` and the multiplicative group `1 + t Q[[t]]`. Every monic
//! series factors uniquely as a product of `(1 - t^n)^{e_n}` with rational
//! exponents, and the exponents are all integers exactly when the series has
//! integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{int, rational_binomial_factor, MonicSeries, Rational, TruncatedSeries};

/// Sparse exponent map `n -> e_n` for `prod (1 - t^n)^{e_n}`.
///
/// Zero exponents are never stored and every key is at most `max_index`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactorExponents {
    exponents: BTreeMap<usize, Rational>,
    max_index: usize,
}

impl FactorExponents {
    pub fn new(max_index: usize) -> Self {
        FactorExponents {
            exponents: BTreeMap::new(),
            max_index,
        }
    }

    /// Builds from `(n, e_n)` pairs, summing repeated keys. Keys outside
    /// `1..=max_index` are rejected.
    pub fn from_pairs<I>(max_index: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut f = FactorExponents::new(max_index);
        for (n, e) in pairs {
            if n == 0 || n > max_index {
                return Err(Error::Domain(format!(
                    "factor index {n} outside 1..={max_index}"
                )));
            }
            f.add_to(n, &e);
        }
        Ok(f)
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    /// Exponent of `(1 - t^n)`; zero when absent.
    pub fn get(&self, n: usize) -> Rational {
        self.exponents.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.exponents.iter().map(|(&n, e)| (n, e))
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.exponents.values().all(|e| e.is_integer())
    }

    /// Adds `delta` to `e_n`, dropping the entry when it becomes zero.
    /// Indices above `max_index` are ignored.
    pub(crate) fn add_to(&mut self, n: usize, delta: &Rational) {
        if n > self.max_index || delta.is_zero() {
            return;
        }
        let e = self.exponents.entry(n).or_insert_with(Rational::zero);
        *e += delta;
        if e.is_zero() {
            self.exponents.remove(&n);
        }
    }
}

/// Fixed point indices `i_1..i_N` of the iterates of a map (or any rational
/// sequence treated as a log-derivative sequence). Position `n` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSequence(Vec<Rational>);

impl IndexSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        IndexSequence(values)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        IndexSequence(values.iter().map(|&v| int(v)).collect())
    }

    pub fn from_bigints(values: Vec<BigInt>) -> Self {
        IndexSequence(values.into_iter().map(Rational::from_integer).collect())
    }

    /// The constant sequence `c, c, ..., c` of length `len`.
    pub fn constant(c: i64, len: usize) -> Self {
        IndexSequence(vec![int(c); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> &Rational {
        &self.0[n - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn first_fractional(&self) -> Option<usize> {
        self.0.iter().position(|v| !v.is_integer()).map(|p| p + 1)
    }

    pub fn is_integral(&self) -> bool {
        self.first_fractional().is_none()
    }

    pub fn truncate(&self, len: usize) -> Self {
        IndexSequence(self.0[..len.min(self.0.len())].to_vec())
    }
}

/// Result of an integrality query on a monic series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integrality {
    Integral,
    /// The first coefficient (by index) that is not an integer.
    Fractional { index: usize, value: Rational },
}

impl Integrality {
    pub fn is_integral(&self) -> bool {
        matches!(self, Integrality::Integral)
    }
}

/// `exp(x)` for `x` without constant term, via `n y_n = sum_{k=1}^n k x_k y_{n-k}`.
pub fn exp_series(x: &TruncatedSeries) -> Result<MonicSeries> {
    if !x.coeff(0).is_zero() {
        return Err(Error::Domain(format!(
            "exp needs a zero constant term, found {}",
            x.coeff(0)
        )));
    }
    let order = x.order();
    let xs = x.coeffs();
    let mut y: Vec<Rational> = Vec::with_capacity(order + 1);
    y.push(Rational::one());
    for n in 1..=order {
        let mut acc = Rational::zero();
        for k in 1..=n {
            if !xs[k].is_zero() {
                acc += &xs[k] * int(k as i64) * &y[n - k];
            }
        }
        y.push(acc / int(n as i64));
    }
    MonicSeries::new(TruncatedSeries::new(y)?)
}

/// `log(z)` for monic `z`, via `n L_n = n z_n - sum_{k=1}^{n-1} k L_k z_{n-k}`.
pub fn log_series(z: &MonicSeries) -> TruncatedSeries {
    let order = z.order();
    let zs = z.inner().coeffs();
    let mut l: Vec<Rational> = Vec::with_capacity(order + 1);
    l.push(Rational::zero());
    for n in 1..=order {
        let mut acc = &zs[n] * int(n as i64);
        for k in 1..n {
            if !l[k].is_zero() && !zs[n - k].is_zero() {
                acc -= &l[k] * int(k as i64) * &zs[n - k];
            }
        }
        l.push(acc / int(n as i64));
    }
    TruncatedSeries::new(l).expect("non-empty")
}

/// `z^y := exp(y log z)`.
pub fn pow_rational(z: &MonicSeries, y: &Rational) -> MonicSeries {
    exp_series(&log_series(z).scale(y)).expect("log has zero constant term")
}

/// Unique factorization `z = prod_{n=1}^N (1 - t^n)^{e_n}` up to the order of `z`.
///
/// Proceeds by increasing degree: the lowest non-zero non-constant
/// coefficient `c_m` of the remaining quotient forces `e_m = -c_m`, and the
/// factor is divided out before moving on.
pub fn factorize(z: &MonicSeries) -> FactorExponents {
    let order = z.order();
    let mut rest = z.clone();
    let mut out = FactorExponents::new(order);
    for m in 1..=order {
        let c = rest.coeff(m);
        if c.is_zero() {
            continue;
        }
        let e = -c;
        // Dividing by (1 - t^m)^e is multiplying by (1 - t^m)^{-e}.
        rest = rest.mul(&rational_binomial_factor(m, &-&e, order));
        debug_assert!(rest.coeff(m).is_zero());
        out.add_to(m, &e);
    }
    out
}

/// `prod (1 - t^n)^{e_n}` expanded to `order`. Factors with `n > order`
/// contribute 1.
pub fn expand_factors(f: &FactorExponents, order: usize) -> MonicSeries {
    f.iter()
        .filter(|&(n, _)| n <= order)
        .fold(MonicSeries::one(order), |acc, (n, e)| {
            acc.mul(&rational_binomial_factor(n, e, order))
        })
}

/// Integrality of the coefficients with the first fractional witness.
pub fn is_integral(z: &MonicSeries) -> Integrality {
    match z.inner().first_fractional() {
        None => Integrality::Integral,
        Some(index) => Integrality::Fractional {
            index,
            value: z.coeff(index),
        },
    }
}

/// Lefschetz zeta function `exp(sum_{n>=1} i_n / n t^n)`; the order is the
/// sequence length.
pub fn zeta_from_indices(i: &IndexSequence) -> MonicSeries {
    let mut x = vec![Rational::zero()];
    x.extend(
        i.values()
            .iter()
            .enumerate()
            .map(|(k, v)| v / int(k as i64 + 1)),
    );
    exp_series(&TruncatedSeries::new(x).expect("non-empty")).expect("zero constant term")
}

/// `i_n = n [t^n] log z` for `n = 1..=order`. Non-integral entries are kept
/// as rationals; check [`IndexSequence::is_integral`].
pub fn indices_from_zeta(z: &MonicSeries) -> IndexSequence {
    let l = log_series(z);
    IndexSequence(
        (1..=z.order())
            .map(|n| l.coeff(n) * int(n as i64))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn series(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(c).unwrap()
    }

    fn monic(c: &[i64]) -> MonicSeries {
        MonicSeries::from_integers(c).unwrap()
    }

    fn rseries(c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    // exp by its defining sum 1 + x + x^2/2! + ..., independent of the recurrence.
    fn exp_by_definition(x: &TruncatedSeries) -> TruncatedSeries {
        let order = x.order();
        let mut acc = TruncatedSeries::one(order);
        let mut power = TruncatedSeries::one(order);
        let mut fact = Rational::one();
        for k in 1..=order {
            power = power.mul(x);
            fact *= int(k as i64);
            acc = acc.add(&power.scale(&(Rational::one() / &fact)));
        }
        acc
    }

    #[test]
    fn exp_examples() {
        let e = exp_series(&series(&[0, 1, 0, 0])).unwrap();
        assert_eq!(*e.inner(), rseries(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
        assert_eq!(exp_series(&TruncatedSeries::zero(5)).unwrap(), MonicSeries::one(5));
        let mercator = rseries(&[(0, 1), (1, 1), (1, 2), (1, 3)]);
        assert_eq!(exp_series(&mercator).unwrap(), monic(&[1, 1, 1, 1]));
    }

    #[test]
    fn exp_matches_definition() {
        let x = rseries(&[(0, 1), (2, 3), (-1, 1), (5, 7), (0, 1), (1, 2), (-3, 4)]);
        assert_eq!(*exp_series(&x).unwrap().inner(), exp_by_definition(&x));
    }

    #[test]
    fn exp_rejects_constant_term() {
        assert!(matches!(exp_series(&series(&[1, 1])), Err(Error::Domain(_))));
    }

    #[test]
    fn log_examples() {
        assert!(log_series(&MonicSeries::one(4)).is_zero());
        assert_eq!(
            log_series(&MonicSeries::geometric(3)),
            rseries(&[(0, 1), (1, 1), (1, 2), (1, 3)])
        );
        let l = log_series(&monic(&[1, 1, 0, 0]));
        assert_eq!(l, rseries(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert_eq!(exp_series(&l).unwrap(), monic(&[1, 1, 0, 0]));
    }

    #[test]
    fn pow_examples() {
        let r = pow_rational(&monic(&[1, -1, 0, 0, 0]), &int(-1));
        assert_eq!(r, MonicSeries::geometric(4));

        let half = pow_rational(&monic(&[1, 0, -1, 0, 0]), &ratio(1, 2));
        assert_eq!(*half.inner(), rseries(&[(1, 1), (0, 1), (-1, 2), (0, 1), (-1, 8)]));
        assert_eq!(half.mul(&half), monic(&[1, 0, -1, 0, 0]));

        assert_eq!(pow_rational(&monic(&[1, 4, 2]), &int(0)), MonicSeries::one(2));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&monic(&[1, 1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![(1, &int(-1)), (2, &int(1))]);

        let inv = monic(&[1, 1, 0, 0, 0, 0, 0, 0]).inverse();
        let f = factorize(&inv);
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![(1, &int(1)), (2, &int(-1))]);

        assert!(factorize(&MonicSeries::one(8)).is_empty());
    }

    #[test]
    fn expand_examples() {
        let f = FactorExponents::from_pairs(6, [(1, int(-1))]).unwrap();
        assert_eq!(expand_factors(&f, 6), MonicSeries::geometric(6));
        assert_eq!(expand_factors(&FactorExponents::new(6), 6), MonicSeries::one(6));
        let f = FactorExponents::from_pairs(6, [(1, int(-1)), (2, int(1))]).unwrap();
        assert_eq!(expand_factors(&f, 6), monic(&[1, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn factorize_fractional_exponents() {
        let z = pow_rational(&monic(&[1, -1, 0, 0, 0, 0]), &ratio(2, 3));
        let f = factorize(&z);
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![(1, &ratio(2, 3))]);
        assert_eq!(expand_factors(&f, 5), z);
    }

    #[test]
    fn integrality_examples() {
        assert_eq!(is_integral(&MonicSeries::geometric(5)), Integrality::Integral);
        let e = exp_series(&series(&[0, 1, 0, 0])).unwrap();
        assert_eq!(
            is_integral(&e),
            Integrality::Fractional { index: 2, value: ratio(1, 2) }
        );
        let half = pow_rational(&monic(&[1, 0, -1, 0, 0]), &ratio(1, 2));
        assert_eq!(
            is_integral(&half),
            Integrality::Fractional { index: 2, value: ratio(-1, 2) }
        );
    }

    #[test]
    fn zeta_from_indices_examples() {
        assert_eq!(zeta_from_indices(&IndexSequence::constant(1, 10)), MonicSeries::geometric(10));
        assert_eq!(zeta_from_indices(&IndexSequence::constant(0, 10)), MonicSeries::one(10));
        assert_eq!(
            zeta_from_indices(&IndexSequence::constant(-1, 6)),
            monic(&[1, -1, 0, 0, 0, 0, 0])
        );
        let alt = IndexSequence::from_integers(&[1, -1, 1, -1, 1, -1]);
        assert_eq!(zeta_from_indices(&alt), monic(&[1, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn indices_from_zeta_examples() {
        assert_eq!(indices_from_zeta(&MonicSeries::geometric(6)), IndexSequence::constant(1, 6));
        assert_eq!(indices_from_zeta(&MonicSeries::one(6)), IndexSequence::constant(0, 6));
        let z = monic(&[1, 1, 0, 0, 0, 0]).inverse();
        assert_eq!(
            indices_from_zeta(&z),
            IndexSequence::from_integers(&[-1, 1, -1, 1, -1])
        );
    }

    #[test]
    fn indices_of_non_zeta_series_are_flagged() {
        // exp(t/2 + t^2) has i_1 = 1/2, i_2 = 2.
        let z = exp_series(&rseries(&[(0, 1), (1, 2), (1, 1), (0, 1)])).unwrap();
        let i = indices_from_zeta(&z);
        assert_eq!(i.values(), &[ratio(1, 2), int(2), int(0)]);
        assert_eq!(i.first_fractional(), Some(1));
    }

    #[test]
    fn from_pairs_rejects_out_of_range() {
        assert!(FactorExponents::from_pairs(3, [(4, int(1))]).is_err());
        assert!(FactorExponents::from_pairs(3, [(0, int(1))]).is_err());
        let f = FactorExponents::from_pairs(3, [(1, int(1)), (1, int(-1))]).unwrap();
        assert!(f.is_empty());
    }
}
