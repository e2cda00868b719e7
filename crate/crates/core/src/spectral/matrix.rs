use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::series::{int, Rational};

/// Dense matrix with exact rational entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Dimension("matrices must be non-empty".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.data[i * d + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let d = values.len();
        let mut m = Self::zeros(d, d);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * d + i] = int(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, found {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators so the
    /// elimination runs over the integers; the scaling is divided out at the
    /// end.
    pub fn determinant(&self) -> Result<Rational> {
        self.require_square()?;
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let l = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();

        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
        Ok(Rational::new(sign * det, scale))
    }

    /// Characteristic polynomial `det(x I - A)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Result<Poly> {
        self.require_square()?;
        let d = self.rows;
        let mut c = vec![Rational::zero(); d + 1];
        c[d] = Rational::one();
        let mut m = Self::zeros(d, d);
        for k in 1..=d {
            // M_k = A M_{k-1} + c_{d-k+1} I
            m = self.mul(&m)?;
            for i in 0..d {
                m.data[i * d + i] += &c[d - k + 1];
            }
            let am = self.mul(&m)?;
            c[d - k] = -am.trace() / int(k as i64);
        }
        Ok(Poly::new(c))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Sign of a rational as -1, 0 or 1.
pub(crate) fn signum(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    // Cofactor expansion, independent of the elimination path.
    fn laplace(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
                .collect();
            let term = m.get(0, j) * laplace(&RationalMatrix::new(minor).unwrap());
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            RationalMatrix::diagonal(&[2, -2]).char_poly().unwrap(),
            Poly::from_integers(&[-4, 0, 1])
        );
        let rot = RationalMatrix::from_integers(&[[0, -1], [1, 0]]).unwrap();
        assert_eq!(rot.char_poly().unwrap(), Poly::from_integers(&[1, 0, 1]));
        let m = RationalMatrix::from_integers(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(m.char_poly().unwrap(), Poly::from_integers(&[-2, -5, 1]));
    }

    #[test]
    fn char_poly_constant_term_is_signed_determinant() {
        let m = RationalMatrix::from_integers(&[[2, -1, 0, 3], [1, 1, 4, 0], [0, -2, 5, 1], [3, 0, 1, -1]])
            .unwrap();
        let p = m.char_poly().unwrap();
        assert_eq!(p.coeff(0), m.determinant().unwrap()); // (-1)^4
        let m3 = RationalMatrix::from_integers(&[[2, -1, 0], [1, 1, 4], [0, -2, 5]]).unwrap();
        assert_eq!(m3.char_poly().unwrap().coeff(0), -m3.determinant().unwrap());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = RationalMatrix::new(vec![
            vec![ratio(1, 2), int(3), ratio(-2, 3)],
            vec![int(0), ratio(5, 4), int(1)],
            vec![int(2), int(-1), ratio(7, 5)],
        ])
        .unwrap();
        assert_eq!(m.determinant().unwrap(), laplace(&m));
        let singular = RationalMatrix::from_integers(&[[1, 2], [2, 4]]).unwrap();
        assert!(singular.determinant().unwrap().is_zero());
        let pivot = RationalMatrix::from_integers(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(pivot.determinant().unwrap(), int(-1));
    }

    #[test]
    fn rectangular_products() {
        let a = RationalMatrix::from_integers(&[[2, 0]]).unwrap();
        let b = RationalMatrix::from_integers(&[[1], [0]]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), RationalMatrix::from_integers(&[[2]]).unwrap());
        assert_eq!(b.mul(&a).unwrap(), RationalMatrix::from_integers(&[[2, 0], [0, 0]]).unwrap());
        assert!(a.mul(&a).is_err());
        assert!(a.determinant().is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RationalMatrix::new(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
        assert!(RationalMatrix::new(vec![]).is_err());
    }
}
