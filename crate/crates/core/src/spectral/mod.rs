//! Linear models: from exact matrices and periodic-orbit tables to zeta
//! functions.
//!
//! A hyperbolic linear map `A` has a local zeta function determined by the
//! parities `(sigma-, sigma+)` of the number of eigenvalues (with
//! multiplicity) in `(-inf, -1)` and `(1, +inf)`. The same function is
//! obtained from the indices `sign det(I - A^k)` of the iterates; both
//! routes are provided so they can be checked against each other.

mod matrix;
mod orbits;
mod poly;

pub use matrix::RationalMatrix;
pub use orbits::{OrbitCount, OrbitTable};
pub use poly::{cyclotomic, Poly};

use std::fmt;

use num_traits::Zero;

use self::matrix::signum;
use self::poly::{distinct_roots_between, Bound};
use crate::error::{Error, Result};
use crate::series::{binomial_factor, int, MonicSeries};
use crate::zeta::{zeta_from_indices, IndexSequence};

/// Monic characteristic polynomial `det(x I - A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly(Poly);

impl CharPoly {
    /// Wraps a monic polynomial of degree at least 1.
    pub fn new(p: Poly) -> Result<Self> {
        if !p.is_monic() || p.degree().unwrap_or(0) == 0 {
            return Err(Error::Domain(format!(
                "characteristic polynomials are monic of positive degree, got {p}"
            )));
        }
        Ok(CharPoly(p))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("non-zero")
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn char_poly(a: &RationalMatrix) -> Result<CharPoly> {
    CharPoly::new(a.char_poly()?)
}

/// Open half-lines relevant for the spectral class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootInterval {
    /// `(-inf, -1)`
    BelowMinusOne,
    /// `(1, +inf)`
    AboveOne,
}

/// Real roots of `p` in the interval, counted with multiplicity.
///
/// Fails with [`Error::NonAdmissible`] when `1` or `-1` is a root: such a
/// spectrum is not hyperbolic.
pub fn real_root_count(p: &CharPoly, interval: RootInterval) -> Result<usize> {
    check_unit_roots(p)?;
    let (lo, hi) = match interval {
        RootInterval::BelowMinusOne => (Bound::NegInf, Bound::At(int(-1))),
        RootInterval::AboveOne => (Bound::At(int(1)), Bound::PosInf),
    };
    Ok(p.poly()
        .multiplicity_layers()
        .iter()
        .map(|layer| distinct_roots_between(layer, &lo, &hi))
        .sum())
}

fn check_unit_roots(p: &CharPoly) -> Result<()> {
    if p.poly().eval(&int(1)).is_zero() {
        return Err(Error::NonAdmissible {
            order: 1,
            detail: "eigenvalue 1".into(),
        });
    }
    if p.poly().eval(&int(-1)).is_zero() {
        return Err(Error::NonAdmissible {
            order: 2,
            detail: "eigenvalue -1".into(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpectralClass {
    pub sigma_minus: bool,
    pub sigma_plus: bool,
}

impl SpectralClass {
    pub const ALL: [SpectralClass; 4] = [
        SpectralClass::new(false, false),
        SpectralClass::new(false, true),
        SpectralClass::new(true, false),
        SpectralClass::new(true, true),
    ];

    pub const fn new(sigma_minus: bool, sigma_plus: bool) -> Self {
        SpectralClass {
            sigma_minus,
            sigma_plus,
        }
    }

    /// From bits in `{0, 1}`; anything else is a domain error.
    pub fn from_bits(sigma_minus: u8, sigma_plus: u8) -> Result<Self> {
        match (sigma_minus, sigma_plus) {
            (0 | 1, 0 | 1) => Ok(SpectralClass::new(sigma_minus == 1, sigma_plus == 1)),
            _ => Err(Error::Domain(format!(
                "spectral class bits must be 0 or 1, got ({sigma_minus}, {sigma_plus})"
            ))),
        }
    }

    pub fn bits(&self) -> (u8, u8) {
        (self.sigma_minus as u8, self.sigma_plus as u8)
    }
}

impl fmt::Display for SpectralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, p) = self.bits();
        write!(f, "({m},{p})")
    }
}

pub fn spectral_class(a: &RationalMatrix) -> Result<SpectralClass> {
    let p = char_poly(a)?;
    let minus = real_root_count(&p, RootInterval::BelowMinusOne)?;
    let plus = real_root_count(&p, RootInterval::AboveOne)?;
    Ok(SpectralClass::new(minus % 2 == 1, plus % 2 == 1))
}

/// Largest `n <= n_max` such that no eigenvalue of `a` is a root of unity of
/// order `<= n`, tested as `gcd(char_poly, Phi_d) = 1` for `d = 1..=n`.
pub fn admissibility_order(a: &RationalMatrix, n_max: usize) -> Result<usize> {
    let p = char_poly(a)?;
    let mut phis: Vec<Poly> = Vec::with_capacity(n_max);
    for d in 1..=n_max {
        let phi = poly::next_cyclotomic(d, &phis);
        if !p.poly().gcd(&phi).is_constant() {
            return Ok(d - 1);
        }
        phis.push(phi);
    }
    Ok(n_max)
}

/// The four closed forms `(0,0) -> 1/(1-t)`, `(0,1) -> 1-t`, `(1,0) -> 1+t`,
/// `(1,1) -> 1/(1+t)`.
pub fn linear_zeta(class: SpectralClass, order: usize) -> MonicSeries {
    let sign: i64 = if class.sigma_minus { -1 } else { 1 };
    // 1 - sign * t, inverted when sigma+ equals sigma-.
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    if order >= 1 {
        c[1] = -sign;
    }
    let base = MonicSeries::from_integers(&c).expect("monic");
    if class.sigma_minus == class.sigma_plus {
        base.inverse()
    } else {
        base
    }
}

/// Fixed point index of the `k`-th iterate of `x -> A x` at the origin,
/// `sign det(I - A^k)`.
pub fn local_index(a: &RationalMatrix, k: usize) -> Result<i8> {
    let ak = a.pow(k)?;
    index_of_power(&ak, k)
}

fn index_of_power(ak: &RationalMatrix, k: usize) -> Result<i8> {
    let det = RationalMatrix::identity(ak.rows()).sub(ak)?.determinant()?;
    match signum(&det) {
        0 => Err(Error::NonAdmissible {
            order: k,
            detail: format!("det(I - A^{k}) = 0"),
        }),
        s => Ok(s),
    }
}

/// `(sign det(I - A^k))_{k=1..n}`; requires `admissibility_order(a, n) = n`.
pub fn index_sequence_of_matrix(a: &RationalMatrix, n: usize) -> Result<IndexSequence> {
    let adm = admissibility_order(a, n)?;
    if adm < n {
        return Err(Error::NonAdmissible {
            order: adm + 1,
            detail: format!("eigenvalue that is a root of unity of order {}", adm + 1),
        });
    }
    let mut out = Vec::with_capacity(n);
    let mut power = RationalMatrix::identity(a.rows());
    for k in 1..=n {
        power = power.mul(a)?;
        out.push(index_of_power(&power, k)? as i64);
    }
    Ok(IndexSequence::from_integers(&out))
}

/// Summary of the zeta function of a linear map computed both ways.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixZeta {
    pub class: SpectralClass,
    pub indices: IndexSequence,
    /// From the spectral class.
    pub zeta: MonicSeries,
    /// From the index sequence.
    pub zeta_from_indices: MonicSeries,
}

pub fn matrix_zeta(a: &RationalMatrix, order: usize) -> Result<MatrixZeta> {
    let indices = index_sequence_of_matrix(a, order)?;
    let class = spectral_class(a)?;
    Ok(MatrixZeta {
        class,
        zeta: linear_zeta(class, order),
        zeta_from_indices: zeta_from_indices(&indices),
        indices,
    })
}

/// `prod_m (1 - t^m)^{-a_m} (1 - t^{2m})^{-b_m}` to `order`.
pub fn orbit_zeta(orbits: &OrbitTable, order: usize) -> Result<MonicSeries> {
    let mut z = MonicSeries::one(order);
    for o in orbits.counts() {
        if o.period > order {
            return Err(Error::Domain(format!(
                "orbit period {} exceeds the working order {order}",
                o.period
            )));
        }
        z = z.mul(&binomial_factor(o.period, -o.a, order));
        if 2 * o.period <= order {
            z = z.mul(&binomial_factor(2 * o.period, -o.b, order));
        }
    }
    Ok(z)
}

/// Zeta function of the `k`-th iterate restricted to the period-`m` orbits
/// with counts `(a, b)`. With `d = gcd(k, m)`:
/// `(1 - t^{m/d})^{-d a} (1 - t^{2m/d})^{-d b}` when `k/d` is odd and
/// `(1 - t^{m/d})^{-d (a + 2b)}` when `k/d` is even.
pub fn orbit_zeta_iterate(m: usize, a: i64, b: i64, k: usize, order: usize) -> MonicSeries {
    assert!(m >= 1 && k >= 1, "period and iterate must be positive");
    let d = num_integer::gcd(k, m);
    let step = m / d;
    let di = d as i64;
    if (k / d) % 2 == 1 {
        binomial_factor(step, -di * a, order).mul(&binomial_factor(2 * step, -di * b, order))
    } else {
        binomial_factor(step, -di * (a + 2 * b), order)
    }
}

/// `Z(f, U)(t) = Z(f^k |_{U_1}, U_1)(t^k)` for a set cyclically permuted
/// by `f` with `k` components.
pub fn iterate_zeta_axiom(
    z_on_component: &MonicSeries,
    k: usize,
    target_order: usize,
) -> Result<MonicSeries> {
    z_on_component.substitute_tk(k, target_order)
}

/// Zeta function of a disjoint union: the product of the parts. The empty
/// product is `1` at `order`; otherwise the result order is the minimum of
/// `order` and the part orders.
pub fn multiplicative_assemble(parts: &[MonicSeries], order: usize) -> MonicSeries {
    parts
        .iter()
        .fold(MonicSeries::one(order), |acc, p| acc.mul(p))
}

/// `(1 - t)^{-chi}`: coefficient `n` is the Euler characteristic of the
/// `n`-th symmetric product.
pub fn macdonald_series(chi: i64, order: usize) -> MonicSeries {
    binomial_factor(1, -chi, order)
}

/// Local zeta function `(1 - t^q)^r / (1 - t)` of an isolated fixed point of
/// an orientation-preserving surface homeomorphism.
pub fn lecalvez_zeta(q: usize, r: i64, order: usize) -> MonicSeries {
    assert!(q >= 1, "q must be positive");
    binomial_factor(q, r, order).mul(&MonicSeries::geometric(order))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommutativityVerdict {
    pub pass: bool,
    pub indices_ab: IndexSequence,
    pub indices_ba: IndexSequence,
    pub zeta_ab: MonicSeries,
    pub zeta_ba: MonicSeries,
}

/// Compares the zeta functions of `AB` and `BA` for `A` of shape `d x d'`
/// and `B` of shape `d' x d`.
pub fn commutativity_witness(
    a: &RationalMatrix,
    b: &RationalMatrix,
    order: usize,
) -> Result<CommutativityVerdict> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::Dimension(format!(
            "need A: d x d' and B: d' x d, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    let indices_ab = index_sequence_of_matrix(&ab, order)?;
    let indices_ba = index_sequence_of_matrix(&ba, order)?;
    let zeta_ab = zeta_from_indices(&indices_ab);
    let zeta_ba = zeta_from_indices(&indices_ba);
    let class_ab = spectral_class(&ab)?;
    let class_ba = spectral_class(&ba)?;
    let pass = indices_ab == indices_ba
        && zeta_ab.inner().coeffs() == zeta_ba.inner().coeffs()
        && class_ab == class_ba;
    Ok(CommutativityVerdict {
        pass,
        indices_ab,
        indices_ba,
        zeta_ab,
        zeta_ba,
    })
}
