use std::collections::BTreeMap;

use super::matrix::RationalMatrix;
use super::{spectral_class, SpectralClass};
use crate::error::{Error, Result};

/// Signed counts for the hyperbolic orbits of one period `m`.
///
/// With `n_{(s-,s+)}` the number of period-`m` orbits whose return map has
/// spectral class `(s-, s+)`:
/// `a = n_(0,0) - n_(0,1) + n_(1,0) - n_(1,1)` and `b = -n_(1,0) + n_(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrbitCount {
    pub period: usize,
    pub a: i64,
    pub b: i64,
}

impl OrbitCount {
    /// Counts contributed by a single orbit of the given class.
    pub fn single(period: usize, class: SpectralClass) -> Self {
        let (a, b) = match (class.sigma_minus, class.sigma_plus) {
            (false, false) => (1, 0),
            (false, true) => (-1, 0),
            (true, false) => (1, -1),
            (true, true) => (-1, 1),
        };
        OrbitCount { period, a, b }
    }
}

/// Periodic orbit data, one record per period.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrbitTable {
    counts: Vec<OrbitCount>,
}

impl OrbitTable {
    /// Periods must be positive and pairwise distinct.
    pub fn from_counts(mut counts: Vec<OrbitCount>) -> Result<Self> {
        counts.sort();
        if counts.iter().any(|c| c.period == 0) {
            return Err(Error::Domain("orbit periods must be positive".into()));
        }
        if counts.windows(2).any(|w| w[0].period == w[1].period) {
            return Err(Error::Domain("orbit periods must be distinct".into()));
        }
        Ok(OrbitTable { counts })
    }

    /// Builds the counts from concrete orbits `(period m, A)`, where `A` is
    /// the per-step linearization along the orbit; each orbit is classified
    /// by the spectral class of `A^m`.
    pub fn from_linearizations(orbits: &[(usize, RationalMatrix)]) -> Result<Self> {
        let mut acc: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
        for (period, matrix) in orbits {
            if *period == 0 {
                return Err(Error::Domain("orbit periods must be positive".into()));
            }
            let class = spectral_class(&matrix.pow(*period)?)?;
            let one = OrbitCount::single(*period, class);
            let e = acc.entry(*period).or_default();
            e.0 += one.a;
            e.1 += one.b;
        }
        Self::from_counts(
            acc.into_iter()
                .map(|(period, (a, b))| OrbitCount { period, a, b })
                .collect(),
        )
    }

    pub fn counts(&self) -> &[OrbitCount] {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max_period(&self) -> usize {
        self.counts.iter().map(|c| c.period).max().unwrap_or(0)
    }
}
