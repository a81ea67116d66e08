//! Dense matrices over exact rings and fraction-free elimination.

use std::fmt::Debug;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::par;

/// Commutative ring with exact, owned arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}

/// A ring in which `a / b` can be computed whenever `b` divides `a`.
pub trait ExactDiv: Ring {
    fn div_exact(&self, divisor: &Self) -> Result<Self>;
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        MultiPoly::div_exact(self, divisor)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::Singular);
        }
        Ok(self / divisor)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
    ncols: usize,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Self { rows, ncols }
    }

    pub fn from_fn(nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        Self { rows: (0..nrows).map(|i| (0..ncols).map(|j| f(i, j)).collect()).collect(), ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows(), |i, j| self.rows[j][i].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(), ncols: self.ncols }
    }

    pub fn try_map<U: Clone, E>(
        &self,
        f: impl Fn(&T) -> std::result::Result<U, E>,
    ) -> std::result::Result<Matrix<U>, E> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&f).collect::<std::result::Result<Vec<_>, E>>())
            .collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(Matrix { rows, ncols: self.ncols })
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.rows[rows[i]][cols[j]].clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        let rows = par::map(&self.rows, |r| {
            (0..other.ncols)
                .map(|j| {
                    r.iter().zip(&other.rows).fold(T::zero(), |acc, (a, b)| {
                        if a.is_zero() || b[j].is_zero() {
                            acc
                        } else {
                            acc + a.clone() * b[j].clone()
                        }
                    })
                })
                .collect()
        });
        Matrix { rows, ncols: other.ncols }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r[i + 1..].iter().all(T::is_zero))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r[..i].iter().all(T::is_zero))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.rows[i][j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.rows[i][j]
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::Singular);
        }
        let (q, r) = self.div_rem(divisor);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }
}

/// Scales each row by the lcm of its denominators. Returns the integer matrix
/// and the row scales `s` with `integer = diag(s) * m`.
pub fn integer_rows(m: &Matrix<BigRational>) -> (Matrix<BigInt>, Vec<BigInt>) {
    let scales: Vec<BigInt> =
        m.rows.iter().map(|r| r.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()))).collect();
    let rows =
        m.rows.iter().zip(&scales).map(|(r, s)| r.iter().map(|x| x.numer() * (s / x.denom())).collect()).collect();
    (Matrix::from_rows(rows), scales)
}

/// Determinant of a rational matrix: rows are cleared to integers, then the
/// integer determinant is taken modularly.
pub fn rational_det(m: &Matrix<BigRational>) -> Result<BigRational> {
    let (int, scales) = integer_rows(m);
    let det = super::modular::modular_det(&int);
    let scale = scales.iter().fold(BigInt::from(1), |acc, s| acc * s);
    Ok(BigRational::new(det, scale))
}

/// Moves a row with a nonzero entry in column `k` into position `k`.
/// Returns `false` when the column is zero from row `k` down.
fn pivot<T: Ring>(rows: &mut [Vec<T>], k: usize, sign: &mut bool) -> bool {
    if !rows[k][k].is_zero() {
        return true;
    }
    match (k + 1..rows.len()).find(|&i| !rows[i][k].is_zero()) {
        Some(i) => {
            rows.swap(k, i);
            *sign = !*sign;
            true
        }
        None => false,
    }
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
pub fn bareiss_det<T: ExactDiv>(m: &Matrix<T>) -> Result<T> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut rows = m.rows.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if !pivot(&mut rows, k, &mut negate) {
            return Ok(T::zero());
        }
        let (top, bottom) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let failed = std::sync::atomic::AtomicBool::new(false);
        par::for_each_mut(bottom, |row| {
            for j in k + 1..n {
                let num = pivot_row[k].clone() * row[j].clone() - row[k].clone() * pivot_row[j].clone();
                match num.div_exact(&prev) {
                    Ok(v) => row[j] = v,
                    Err(_) => failed.store(true, std::sync::atomic::Ordering::Relaxed),
                }
            }
            row[k] = T::zero();
        });
        if failed.into_inner() {
            return Err(Error::InexactDivision);
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Fraction-free Gauss-Jordan elimination on `[M | I]`.
///
/// Returns `(d, N)` with `M * N = d * I` and `d = ±det M`, so that
/// `M^{-1} = N / d`. Fails with [`Error::Singular`] when `det M = 0`.
pub fn fraction_free_inverse<T: ExactDiv>(m: &Matrix<T>) -> Result<(T, Matrix<T>)> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.nrows();
    let mut rows: Vec<Vec<T>> = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if !pivot(&mut rows, k, &mut negate) {
            return Err(Error::Singular);
        }
        let pivot_row = rows[k].clone();
        let failed = std::sync::atomic::AtomicBool::new(false);
        let mut others: Vec<(usize, &mut Vec<T>)> = rows.iter_mut().enumerate().filter(|(i, _)| *i != k).collect();
        par::for_each_mut(&mut others, |(_, row)| {
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let mut num = pivot_row[k].clone() * row[j].clone();
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    num = num - factor.clone() * pivot_row[j].clone();
                }
                match num.div_exact(&prev) {
                    Ok(v) => row[j] = v,
                    Err(_) => failed.store(true, std::sync::atomic::Ordering::Relaxed),
                }
            }
            row[k] = T::zero();
        });
        if failed.into_inner() {
            return Err(Error::InexactDivision);
        }
        prev = pivot_row[k].clone();
    }
    // Every diagonal entry on the left now equals the last pivot.
    let d = prev;
    let right = Matrix::from_fn(n, n, |i, j| rows[i][n + j].clone());
    Ok((d, right))
}

/// Exact inverse of a rational matrix. With `diag(s) M = M'` and
/// `M' N = d I`, the inverse is `N diag(s) / d`.
pub fn inverse(m: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    let (int, scales) = integer_rows(m);
    let (d, n) = fraction_free_inverse(&int)?;
    Ok(Matrix::from_fn(n.nrows(), n.ncols(), |i, j| BigRational::new(&n[(i, j)] * &scales[j], d.clone())))
}
