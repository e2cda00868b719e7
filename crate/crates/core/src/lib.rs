//! Exact dynamical (Lefschetz) zeta functions.
//!
//! The crate works in the truncated ring `Q[[t]] / (t^{N+1})` and provides:
//!
//! - [`series`]: truncated power series with exact rational coefficients,
//!   inversion of monic series and the `t -> t^k` substitution.
//! - [`zeta`]: `exp`/`log`, rational powers, the unique factorization into
//!   `(1 - t^n)^{e_n}` factors and the bridge between fixed point index
//!   sequences and zeta functions.
//! - [`transforms`]: conversions between index sequences, symmetric product
//!   indices, Dold coefficients and factor exponents.
//! - [`spectral`]: characteristic polynomials, root counting, admissibility
//!   and the zeta functions of hyperbolic linear maps and periodic orbits.
//! - [`cli`] and [`verify`]: the JSON command surface used by the `lzeta`
//!   binary and the seeded identity suites.

pub mod cli;
pub mod error;
pub mod json;
pub mod series;
pub mod spectral;
pub mod transforms;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use series::{MonicSeries, Rational, TruncatedSeries, DEFAULT_ORDER};
pub use spectral::{
    CharPoly, OrbitCount, OrbitTable, Poly, RationalMatrix, RootInterval, SpectralClass,
};
pub use transforms::{Composition, DoldCoefficients, DoldVerdict, SpIndexSequence};
pub use zeta::{FactorExponents, IndexSequence, Integrality};
