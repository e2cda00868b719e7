//! Conversions among the encodings of a dynamical zeta function.
//!
//! A zeta function `Z(t)` can be given by its index sequence `i_n`
//! (`Z = exp(sum i_n t^n / n)`), by its coefficients `s_n` (the indices of
//! the symmetric products, `s_0 = 1`), by Dold coefficients `a_k` with
//! `i_n = sum_{k | n} k a_k`, or by factor exponents `e_l` with
//! `Z = prod (1 - t^l)^{e_l}`. Production paths use convolution recurrences;
//! the composition sums are kept as an independent oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{int, Rational};
use crate::spectral::OrbitTable;
use crate::zeta::{FactorExponents, IndexSequence};

/// Largest `n` for which compositions are enumerated (`2^{n-1}` of them).
pub const COMPOSITION_CAP: usize = 20;

/// Indices `s_1..s_N` of the symmetric products; `s_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpIndexSequence(Vec<Rational>);

impl SpIndexSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        SpIndexSequence(values)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        SpIndexSequence(values.iter().map(|&v| int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `s_n` for `0 <= n <= len`, with `s_0 = 1`.
    pub fn get(&self, n: usize) -> Rational {
        if n == 0 {
            Rational::one()
        } else {
            self.0[n - 1].clone()
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|v| v.is_integer())
    }
}

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            !parts.is_empty() && parts.iter().all(|&p| p > 0),
            "a composition has at least one part and every part is positive"
        );
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|C|`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `pi(C) = c_1 * ... * c_k`.
    pub fn product(&self) -> BigInt {
        self.parts.iter().map(|&p| BigInt::from(p)).product()
    }

    /// `pi(a, C) = a_{c_1} * ... * a_{c_k}` for a 1-based sequence `a`.
    pub fn weight(&self, a: &[Rational]) -> Rational {
        self.parts.iter().map(|&p| a[p - 1].clone()).product()
    }
}

/// All `2^{n-1}` compositions of `n` in lexicographic order.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::Domain("compositions need n >= 1".into()));
    }
    if n > COMPOSITION_CAP {
        return Err(Error::SizeCap {
            what: "composition size",
            value: n,
            cap: COMPOSITION_CAP,
        });
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut stack = Vec::with_capacity(n);
    fill_compositions(n, &mut stack, &mut out);
    Ok(out)
}

fn fill_compositions(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if rest == 0 {
        out.push(Composition {
            parts: prefix.clone(),
        });
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        fill_compositions(rest - first, prefix, out);
        prefix.pop();
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(n+1) s_{n+1} = sum_{j=0}^{n} s_{n-j} i_{j+1}` with `s_0 = 1`.
///
/// # Panics
///
/// When `i` is integral and satisfies the Dold congruences the result is an
/// integer sequence; a fractional value there is an arithmetic bug and aborts.
pub fn sp_from_indices_recurrence(i: &IndexSequence) -> SpIndexSequence {
    let iv = i.values();
    let mut s: Vec<Rational> = Vec::with_capacity(iv.len() + 1);
    s.push(Rational::one());
    for n in 0..iv.len() {
        let mut acc = Rational::zero();
        for j in 0..=n {
            acc += &s[n - j] * &iv[j];
        }
        s.push(acc / int(n as i64 + 1));
    }
    s.remove(0);
    let out = SpIndexSequence(s);
    if i.is_integral() && dold_check(i).pass {
        assert!(
            out.is_integral(),
            "integral indices produced fractional symmetric product indices"
        );
    }
    out
}

/// `s_n = sum_{C in C_n} pi(i, C) / (pi(C) |C|!)`.
pub fn sp_from_indices_compositions(i: &IndexSequence, n: usize) -> Result<Rational> {
    check_len(i.len(), n)?;
    let mut acc = Rational::zero();
    for c in compositions_of(n)? {
        let den = c.product() * factorial(c.len());
        acc += c.weight(i.values()) / Rational::from_integer(den);
    }
    Ok(acc)
}

/// `i_{n+1} = (n+1) s_{n+1} - sum_{j=0}^{n-1} s_{n-j} i_{j+1}`.
pub fn indices_from_sp_recurrence(s: &SpIndexSequence) -> IndexSequence {
    let mut iv: Vec<Rational> = Vec::with_capacity(s.len());
    for n in 0..s.len() {
        let mut acc = s.get(n + 1) * int(n as i64 + 1);
        for j in 0..n {
            acc -= s.get(n - j) * &iv[j];
        }
        iv.push(acc);
    }
    IndexSequence::new(iv)
}

/// `i_n = n sum_{C in C_n} (-1)^{|C|+1} pi(s, C) / |C|`.
///
/// The composition sum is the coefficient of `t^n` in `log(1 + sum s_k t^k)`;
/// the index is `n` times it.
pub fn indices_from_sp_compositions(s: &SpIndexSequence, n: usize) -> Result<Rational> {
    check_len(s.len(), n)?;
    let mut acc = Rational::zero();
    for c in compositions_of(n)? {
        let term = c.weight(s.values()) / int(c.len() as i64);
        if c.len() % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc * int(n as i64))
}

fn check_len(len: usize, n: usize) -> Result<()> {
    if n == 0 || n > len {
        return Err(Error::Domain(format!(
            "position {n} outside the sequence range 1..={len}"
        )));
    }
    Ok(())
}

/// Divisors of `n` in increasing order, by trial division.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function by trial-division factorization.
pub fn mobius(n: usize) -> i8 {
    assert!(n >= 1, "mobius: n must be positive");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Dold coefficients `a_1..a_N` with per-entry integrality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoldCoefficients(Vec<Rational>);

impl DoldCoefficients {
    pub fn new(values: Vec<Rational>) -> Self {
        DoldCoefficients(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `a_k` for `1 <= k <= len`.
    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral_at(&self, k: usize) -> bool {
        self.get(k).is_integer()
    }

    pub fn integrality_flags(&self) -> Vec<bool> {
        self.0.iter().map(|a| a.is_integer()).collect()
    }
}

/// `a_k = (1/k) sum_{d | k} mu(k/d) i_d`, never rounded.
pub fn dold_coefficients(i: &IndexSequence) -> DoldCoefficients {
    let a = (1..=i.len())
        .map(|k| {
            let mut acc = Rational::zero();
            for d in divisors(k) {
                match mobius(k / d) {
                    1 => acc += i.get(d),
                    -1 => acc -= i.get(d),
                    _ => {}
                }
            }
            acc / int(k as i64)
        })
        .collect();
    DoldCoefficients(a)
}

/// `i_n = sum_{k | n} k a_k`.
pub fn indices_from_dold(a: &DoldCoefficients) -> IndexSequence {
    IndexSequence::new(
        (1..=a.len())
            .map(|n| {
                divisors(n)
                    .into_iter()
                    .map(|k| a.get(k) * int(k as i64))
                    .sum()
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoldVerdict {
    pub pass: bool,
    /// First `k` with a fractional `a_k`, and that value.
    pub first_violation: Option<(usize, Rational)>,
}

/// The Dold congruences hold iff every `a_k` is an integer.
pub fn dold_check(i: &IndexSequence) -> DoldVerdict {
    let a = dold_coefficients(i);
    let first_violation = a
        .values()
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_integer())
        .map(|(k, v)| (k + 1, v.clone()));
    DoldVerdict {
        pass: first_violation.is_none(),
        first_violation,
    }
}

/// Factor exponents of `prod_m (1 - t^m)^{-a_m} (1 - t^{2m})^{-b_m}`, i.e.
/// `e_l = -(a_l + b_{l/2})` with `b_{l/2} = 0` for odd `l`.
///
/// Factors with index above `max_index` are dropped; an orbit period above
/// `max_index` is rejected.
pub fn exponents_from_orbit_counts(
    orbits: &OrbitTable,
    max_index: usize,
) -> Result<FactorExponents> {
    let mut f = FactorExponents::new(max_index);
    for o in orbits.counts() {
        if o.period > max_index {
            return Err(Error::Domain(format!(
                "orbit period {} exceeds the working order {max_index}",
                o.period
            )));
        }
        f.add_to(o.period, &-int(o.a));
        f.add_to(2 * o.period, &-int(o.b));
    }
    Ok(f)
}

/// The linear coefficient of the zeta function of the `k`-th iterate,
/// computed by the per-orbit case analysis and by `sum_{l | k} l (-e_l)`.
///
/// # Panics
///
/// If the two formulas disagree, which can only be an implementation bug.
pub fn linear_coefficient_of_iterate(orbits: &OrbitTable, k: usize) -> BigInt {
    assert!(k >= 1, "iterate k must be positive");

    let mut by_cases = BigInt::zero();
    for o in orbits.counts() {
        let m = o.period;
        if k % m != 0 {
            continue;
        }
        let d = BigInt::from(m);
        if (k / m) % 2 == 1 {
            by_cases += d * o.a;
        } else {
            by_cases += d * (o.a + 2 * o.b);
        }
    }

    let max_index = orbits
        .counts()
        .iter()
        .map(|o| 2 * o.period)
        .max()
        .unwrap_or(0)
        .max(k);
    let e = exponents_from_orbit_counts(orbits, max_index).expect("periods within max_index");
    let by_exponents: Rational = divisors(k)
        .into_iter()
        .map(|l| -e.get(l) * int(l as i64))
        .sum();
    assert!(by_exponents.is_integer());
    let by_exponents = by_exponents.to_integer();

    assert_eq!(
        by_cases, by_exponents,
        "linear coefficient of iterate {k}: case analysis and divisor sum disagree"
    );
    by_cases
}

/// `i_n = -sum_{l | n} l e_l`, the index sequence of `prod (1 - t^l)^{e_l}`.
pub fn indices_from_exponents(e: &FactorExponents, len: usize) -> IndexSequence {
    IndexSequence::new(
        (1..=len)
            .map(|n| {
                -divisors(n)
                    .into_iter()
                    .map(|l| e.get(l) * int(l as i64))
                    .sum::<Rational>()
            })
            .collect(),
    )
}
