//! Truncated formal power series over the rationals.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..=c_N` and represents a
//! class in `Q[[t]] / (t^{N+1})`. Binary operations return a series whose
//! order is the smaller of the two operand orders, and equality compares
//! coefficients up to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Working order used when a caller does not request one.
pub const DEFAULT_ORDER: usize = 32;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from `c_0..=c_N`. The order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Malformed(
                "a series needs at least the constant coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The monomial `c * t^k`, zero if `k > order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Reduces to a lower order. Requests above the current order are clamped.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Index of the highest non-zero coefficient within the order, `None`
    /// for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// First index whose coefficient is not an integer.
    pub fn first_fractional(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_integer())
    }

    pub fn is_integral(&self) -> bool {
        self.first_fractional().is_none()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Coefficientwise sum at order `min(self.order, other.order)`.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &other.coeffs[n])
                .collect(),
        }
    }

    /// Truncated Cauchy product at order `min(self.order, other.order)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Formal derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=self.order())
                .map(|n| &self.coeffs[n] * int(n as i64))
                .collect(),
        }
    }
}

/// Equality up to the smaller of the two orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let unit = abs.is_one();
            match n {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ if abs.is_integer() => write!(f, "{abs}")?,
                _ => write!(f, "({abs})")?,
            }
            match n {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// A series with constant term 1: an element of the group `1 + t Q[[t]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicSeries(TruncatedSeries);

impl MonicSeries {
    pub fn new(inner: TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_one() {
            return Err(Error::Domain(format!(
                "expected a monic series (constant term 1), found constant term {}",
                inner.coeffs[0]
            )));
        }
        Ok(MonicSeries(inner))
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(TruncatedSeries::from_integers(coeffs)?)
    }

    pub fn one(order: usize) -> Self {
        MonicSeries(TruncatedSeries::one(order))
    }

    /// `1/(1 - t) = 1 + t + t^2 + ...`
    pub fn geometric(order: usize) -> Self {
        MonicSeries(TruncatedSeries {
            coeffs: vec![Rational::one(); order + 1],
        })
    }

    pub fn inner(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_inner(self) -> TruncatedSeries {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.0.coeff(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        MonicSeries(self.0.truncate(order))
    }

    pub fn mul(&self, other: &Self) -> Self {
        MonicSeries(self.0.mul(&other.0))
    }

    /// Inverse in `1 + t Q[[t]]`: `b_0 = 1`, `b_n = -sum_{i=1}^n a_i b_{n-i}`.
    pub fn inverse(&self) -> Self {
        let a = &self.0.coeffs;
        let order = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
        b.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !a[i].is_zero() {
                    acc -= &a[i] * &b[n - i];
                }
            }
            b.push(acc);
        }
        MonicSeries(TruncatedSeries { coeffs: b })
    }

    /// `self * other^{-1}`.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// Integer power, negative exponents through [`MonicSeries::inverse`].
    pub fn powi(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = MonicSeries::one(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// The homomorphism `z(t) mod t^{m+1} -> z(t^k) mod t^{n+1}`, defined
    /// when `n <= k m`.
    pub fn substitute_tk(&self, k: usize, target_order: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("substitution t -> t^k needs k >= 1".into()));
        }
        let available = k * self.order();
        if target_order > available {
            return Err(Error::Precision {
                target: target_order,
                available,
            });
        }
        let mut out = TruncatedSeries::zero(target_order);
        for j in 0..=target_order / k {
            out.coeffs[j * k] = self.0.coeffs[j].clone();
        }
        Ok(MonicSeries(out))
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_integral()
    }
}

impl TryFrom<TruncatedSeries> for MonicSeries {
    type Error = Error;
    fn try_from(value: TruncatedSeries) -> Result<Self> {
        MonicSeries::new(value)
    }
}

impl From<MonicSeries> for TruncatedSeries {
    fn from(value: MonicSeries) -> Self {
        value.0
    }
}

impl fmt::Display for MonicSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact expansion of `(1 - t^n)^e` to the given order.
///
/// Non-negative exponents use the finite binomial expansion; negative ones
/// are the inverse of the positive power.
pub fn binomial_factor(n: usize, e: i64, order: usize) -> MonicSeries {
    assert!(n >= 1, "binomial_factor: n must be positive");
    let pos = e.unsigned_abs();
    let mut s = TruncatedSeries::zero(order);
    let mut c = BigInt::one();
    let mut j: u64 = 0;
    while j <= pos && (j as usize) * n <= order {
        let v = if j % 2 == 0 { c.clone() } else { -c.clone() };
        s.coeffs[j as usize * n] = Rational::from_integer(v);
        c = c * BigInt::from(pos - j) / BigInt::from(j + 1);
        j += 1;
    }
    let f = MonicSeries(s);
    if e < 0 {
        f.inverse()
    } else {
        f
    }
}

/// Exact expansion of `(1 - t^n)^q` for rational `q` via the generalized
/// binomial series `sum_j C(q, j) (-1)^j t^{nj}`.
pub fn rational_binomial_factor(n: usize, q: &Rational, order: usize) -> MonicSeries {
    assert!(n >= 1, "rational_binomial_factor: n must be positive");
    let mut s = TruncatedSeries::zero(order);
    let mut c = Rational::one();
    let mut j = 0usize;
    while j * n <= order {
        s.coeffs[j * n] = if j % 2 == 0 { c.clone() } else { -c.clone() };
        c = c * (q - int(j as i64)) / int(j as i64 + 1);
        if c.is_zero() {
            break;
        }
        j += 1;
    }
    MonicSeries(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(c).unwrap()
    }

    fn monic(c: &[i64]) -> MonicSeries {
        MonicSeries::from_integers(c).unwrap()
    }

    // Brute-force polynomial product, no truncation.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn add_cancels_and_takes_min_order() {
        assert_eq!(series(&[1, 1]).add(&series(&[1, -1])), series(&[2, 0]));
        let z = series(&[1, 3, -2]);
        assert_eq!(TruncatedSeries::zero(2).add(&z), z);

        // (t + t^2) at order 3 plus t^3 at order 2
        let a = series(&[0, 1, 1, 0]);
        let r = a.add(&TruncatedSeries::monomial(int(1), 3, 2));
        assert_eq!(r.order(), 2);
        assert_eq!(r.coeffs(), series(&[0, 1, 1]).coeffs());
    }

    #[test]
    fn mul_examples() {
        let r = series(&[1, -1, 0, 0]).mul(&series(&[1, 1, 1, 1]));
        assert_eq!(r.coeffs(), series(&[1, 0, 0, 0]).coeffs());

        let expected = convolve(&[1, -1], &[1, 0, -1]);
        assert_eq!(expected, vec![1, -1, -1, 1]);
        let r = series(&[1, -1, 0, 0]).mul(&series(&[1, 0, -1, 0]));
        assert_eq!(r.coeffs(), series(&expected).coeffs());

        let z = series(&[2, -1, 5]);
        assert_eq!(z.mul(&TruncatedSeries::one(2)), z);
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let r = series(&[1, 1, 1, 1, 1]).mul(&series(&[1, 1]));
        assert_eq!(r.order(), 1);
        assert_eq!(r.coeffs(), series(&[1, 2]).coeffs());
    }

    #[test]
    fn inverse_examples() {
        let inv = monic(&[1, -1, 0, 0, 0, 0]).inverse();
        assert_eq!(inv.inner().coeffs(), series(&[1, 1, 1, 1, 1, 1]).coeffs());
        assert_eq!(MonicSeries::one(4).inverse(), MonicSeries::one(4));

        let inv = monic(&[1, 1, 0, 0, 0]).inverse();
        assert_eq!(inv.inner().coeffs(), series(&[1, -1, 1, -1, 1]).coeffs());
        assert_eq!(inv.mul(&monic(&[1, 1, 0, 0, 0])), MonicSeries::one(4));
    }

    #[test]
    fn non_monic_is_rejected() {
        assert!(matches!(
            MonicSeries::new(series(&[2, 1])),
            Err(Error::Domain(_))
        ));
        assert!(MonicSeries::new(series(&[0, 1])).is_err());
    }

    #[test]
    fn substitute_examples() {
        let g = MonicSeries::geometric(3);
        let r = g.substitute_tk(2, 6).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.inner().coeffs(), series(&[1, 0, 1, 0, 1, 0, 1]).coeffs());

        let z = monic(&[1, 3, -2, 7]);
        assert_eq!(z.substitute_tk(1, 2).unwrap().inner().coeffs(), series(&[1, 3, -2]).coeffs());

        let r = monic(&[1, 1]).substitute_tk(3, 3).unwrap();
        assert_eq!(r.inner().coeffs(), series(&[1, 0, 0, 1]).coeffs());
    }

    #[test]
    fn substitute_rejects_insufficient_precision() {
        let err = monic(&[1, 1]).substitute_tk(3, 4).unwrap_err();
        assert_eq!(err, Error::Precision { target: 4, available: 3 });
    }

    #[test]
    fn binomial_factor_examples() {
        let f = binomial_factor(1, -1, 4);
        assert_eq!(f.inner().coeffs(), series(&[1, 1, 1, 1, 1]).coeffs());
        let f = binomial_factor(2, 1, 4);
        assert_eq!(f.inner().coeffs(), series(&[1, 0, -1, 0, 0]).coeffs());

        // (1-t)^{-2} by repeated multiplication of the geometric series.
        let g = MonicSeries::geometric(3);
        let oracle = g.mul(&g);
        let f = binomial_factor(1, -2, 3);
        assert_eq!(f.inner().coeffs(), series(&[1, 2, 3, 4]).coeffs());
        assert_eq!(f, oracle);
    }

    #[test]
    fn rational_binomial_agrees_with_integer_powers() {
        for n in 1..4 {
            for e in -3..=3 {
                assert_eq!(
                    rational_binomial_factor(n, &int(e), 12),
                    binomial_factor(n, e, 12)
                );
            }
        }
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let z = monic(&[1, 2, -1, 3, 0, 1]);
        let mut acc = MonicSeries::one(5);
        for _ in 0..3 {
            acc = acc.mul(&z);
        }
        assert_eq!(z.powi(3), acc);
        assert_eq!(z.powi(-3), acc.inverse());
        assert_eq!(z.powi(0), MonicSeries::one(5));
    }

    #[test]
    fn display_is_readable() {
        let s = TruncatedSeries::new(vec![int(1), int(-1), ratio(1, 2)]).unwrap();
        assert_eq!(s.to_string(), "1 - t + (1/2)t^2 + O(t^3)");
    }

    #[test]
    fn degree_and_integrality() {
        let s = TruncatedSeries::new(vec![int(1), ratio(3, 2), int(0)]).unwrap();
        assert_eq!(s.degree(), Some(1));
        assert_eq!(s.first_fractional(), Some(1));
        assert_eq!(TruncatedSeries::zero(3).degree(), None);
    }
}
