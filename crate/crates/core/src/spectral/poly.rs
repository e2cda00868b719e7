//! Dense univariate polynomials over the rationals, with the pieces needed
//! for exact real-root counting (Sturm chains, repeated-gcd multiplicities)
//! and cyclotomic tests.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::series::{int, Rational};

/// Coefficients in increasing degree; no trailing zeros (the zero
/// polynomial has no coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Rational::one()],
        }
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = int(-1);
        c[n] = Rational::one();
        Poly::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// # Panics
    ///
    /// On division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(q), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sign of `p(x)` as `x -> +infinity`.
    fn sign_at_pos_inf(&self) -> i32 {
        sign(&self.leading())
    }

    /// Sign of `p(x)` as `x -> -infinity`.
    fn sign_at_neg_inf(&self) -> i32 {
        let s = sign(&self.leading());
        match self.degree() {
            Some(d) if d % 2 == 1 => -s,
            _ => s,
        }
    }

    /// Sturm chain `p, p', -rem(p, p'), ...` down to a constant.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone()];
        if self.is_constant() {
            return chain;
        }
        chain.push(self.derivative());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        chain
    }

    /// The factors `Q_k = P_k / P_{k+1}` with `P_1 = p`, `P_{k+1} = gcd(P_k, P_k')`.
    ///
    /// `Q_k` is squarefree and vanishes exactly at the roots of multiplicity
    /// at least `k`, so a root of multiplicity `m` appears in `Q_1..Q_m`.
    pub fn multiplicity_layers(&self) -> Vec<Poly> {
        let mut layers = Vec::new();
        let mut p = self.monic();
        while !p.is_constant() {
            let next = p.gcd(&p.derivative());
            let (q, r) = p.div_rem(&next);
            debug_assert!(r.is_zero());
            layers.push(q);
            p = next;
        }
        layers
    }
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// End point of a half-line used in Sturm counts.
#[derive(Clone, Debug)]
pub(crate) enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// Number of sign variations of a Sturm chain at a bound.
pub(crate) fn chain_variations(chain: &[Poly], at: &Bound) -> usize {
    match at {
        Bound::NegInf => variations(chain.iter().map(Poly::sign_at_neg_inf)),
        Bound::PosInf => variations(chain.iter().map(Poly::sign_at_pos_inf)),
        Bound::At(x) => variations(chain.iter().map(|p| sign(&p.eval(x)))),
    }
}

/// Distinct real roots in `(lo, hi]` of a polynomial, `lo < hi`.
pub(crate) fn distinct_roots_between(p: &Poly, lo: &Bound, hi: &Bound) -> usize {
    let chain = p.sturm_chain();
    chain_variations(&chain, lo).saturating_sub(chain_variations(&chain, hi))
}

/// The `d`-th cyclotomic polynomial from `x^d - 1 = prod_{e | d} Phi_e`.
pub fn cyclotomic(d: usize) -> Poly {
    assert!(d >= 1, "cyclotomic: d must be positive");
    let mut table: Vec<Poly> = Vec::with_capacity(d);
    for e in 1..=d {
        let phi = next_cyclotomic(e, &table);
        table.push(phi);
    }
    table.pop().expect("d >= 1")
}

/// `Phi_d` given `lower = [Phi_1, ..., Phi_{d-1}]`.
pub(crate) fn next_cyclotomic(d: usize, lower: &[Poly]) -> Poly {
    let mut p = Poly::x_pow_minus_one(d);
    for e in crate::transforms::divisors(d) {
        if e < d {
            let (q, r) = p.div_rem(&lower[e - 1]);
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), Poly::from_integers(&[-1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_integers(&[1, 0, 1]));
        // x^6 - 1 divided by (x - 1)(x + 1)(x^2 + x + 1)
        let (q, r) = Poly::x_pow_minus_one(6)
            .div_rem(&Poly::from_integers(&[-1, 1]).mul(&Poly::from_integers(&[1, 1])).mul(&Poly::from_integers(&[1, 1, 1])));
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_integers(&[1, -1, 1]));
        assert_eq!(cyclotomic(6), q);
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        fn phi(n: usize) -> usize {
            (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
        }
        for d in 1..=40 {
            let c = cyclotomic(d);
            assert_eq!(c.degree(), Some(phi(d)), "d = {d}");
            assert!(c.is_monic() && c.is_integral());
        }
    }

    #[test]
    fn div_rem_and_gcd() {
        let a = Poly::from_integers(&[-4, 0, 1]); // x^2 - 4
        let b = Poly::from_integers(&[-2, 1]); // x - 2
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_integers(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Poly::from_integers(&[2, 1]).mul(&Poly::from_integers(&[1, 0, 1]))), Poly::from_integers(&[2, 1]));
        assert_eq!(a.gcd(&Poly::from_integers(&[1, 0, 1])), Poly::one());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x - 2)(x + 3)(x - 1/2)
        let p = Poly::from_integers(&[-2, 1])
            .mul(&Poly::from_integers(&[3, 1]))
            .mul(&Poly::new(vec![crate::series::ratio(-1, 2), int(1)]));
        assert_eq!(distinct_roots_between(&p, &Bound::NegInf, &Bound::PosInf), 3);
        assert_eq!(distinct_roots_between(&p, &Bound::At(int(1)), &Bound::PosInf), 1);
        assert_eq!(distinct_roots_between(&p, &Bound::NegInf, &Bound::At(int(-1))), 1);
        assert_eq!(distinct_roots_between(&p, &Bound::At(int(-1)), &Bound::At(int(1))), 1);
    }

    #[test]
    fn multiplicity_layers_of_repeated_roots() {
        // (x - 2)^3 (x + 1)
        let lin = Poly::from_integers(&[-2, 1]);
        let p = lin.mul(&lin).mul(&lin).mul(&Poly::from_integers(&[1, 1]));
        let layers = p.multiplicity_layers();
        assert_eq!(layers.len(), 3);
        assert_eq!(layers[0], lin.mul(&Poly::from_integers(&[1, 1])));
        assert_eq!(layers[1], lin);
        assert_eq!(layers[2], lin);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_integers(&[-2, -5, 1]).to_string(), "x^2 - 5x - 2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
