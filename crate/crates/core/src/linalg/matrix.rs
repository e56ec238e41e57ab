use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {}x{} matrix", data.len(), rows, cols)));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension("ragged rows".into()));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: r, cols: c, data })
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries converted to `i64`, or `None` if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_i64()).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn neg(&self) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::Dimension("vector length".into()));
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * &self[(i, j)];
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Upper-left `i × i` block.
    pub fn leading_block(&self, i: usize) -> IntMatrix {
        self.submatrix(0..i, 0..i)
    }

    pub fn submatrix(
        &self,
        rows: impl IntoIterator<Item = usize>,
        cols: impl IntoIterator<Item = usize> + Clone,
    ) -> IntMatrix {
        let mut data = Vec::new();
        let mut nr = 0;
        let mut nc = 0;
        for i in rows {
            nr += 1;
            nc = 0;
            for j in cols.clone() {
                nc += 1;
                data.push(self[(i, j)].clone());
            }
        }
        if nr == 0 {
            nc = cols.into_iter().count();
        }
        IntMatrix { rows: nr, cols: nc, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Dense matrix of reduced rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_int_scaled(m: &IntMatrix, denom: &BigInt) -> RatMatrix {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|x| BigRational::new(x.clone(), denom.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_int(&self, other: &IntMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension("rational times integer matrix".into()));
        }
        let mut data = vec![BigRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * BigRational::from(other[(k, j)].clone());
                }
            }
        }
        Ok(RatMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Returns `self * scale` if every entry becomes integral.
    pub fn scaled_to_int(&self, scale: &BigInt) -> Option<IntMatrix> {
        let s = BigRational::from(scale.clone());
        let data: Option<Vec<BigInt>> = self
            .data
            .iter()
            .map(|x| {
                let y = x * &s;
                y.is_integer().then(|| y.to_integer())
            })
            .collect();
        data.map(|data| IntMatrix { rows: self.rows, cols: self.cols, data })
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension("determinant of non-square matrix".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n.saturating_sub(1) {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Adjugate and determinant via fraction-free Gauss–Jordan elimination.
///
/// Returns `(adj, det)` with `m * adj = det * I`. Fails on singular input.
pub fn adjugate(m: &IntMatrix) -> Result<(IntMatrix, BigInt)> {
    if !m.is_square() {
        return Err(Error::Dimension("adjugate of non-square matrix".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok((IntMatrix::zeros(0, 0), BigInt::one()));
    }
    let w = 2 * n;
    let mut a = IntMatrix::zeros(n, w);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = m[(i, j)].clone();
        }
        a[(i, n + i)] = BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let p = (k..n).find(|&i| !a[(i, k)].is_zero()).ok_or(Error::Singular)?;
        if p != k {
            a.swap_rows(p, k);
            sign = -sign;
        }
        let pivot = a[(k, k)].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = a[(i, k)].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let v = &pivot * &a[(i, j)] - &factor * &a[(k, j)];
                debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                a[(i, j)] = v / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = pivot;
    }
    // Left block is now prev * I, where prev = det of the row-permuted input.
    let det_m = if sign < 0 { -&prev } else { prev.clone() };
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = a[(i, n + j)].clone();
            adj[(i, j)] = if sign < 0 { -x } else { x };
        }
    }
    Ok((adj, det_m))
}

/// Exact rational inverse.
pub fn inverse(m: &IntMatrix) -> Result<RatMatrix> {
    let (adj, d) = adjugate(m)?;
    Ok(RatMatrix::from_int_scaled(&adj, &d))
}

/// Sylvester test: every leading principal minor of order `i` has sign `(-1)^i`.
pub fn sylvester_negdef(m: &IntMatrix) -> bool {
    if !m.is_symmetric() {
        return false;
    }
    (1..=m.rows).all(|i| {
        let d = det(&m.leading_block(i)).expect("square block");
        if i % 2 == 0 {
            d.is_positive()
        } else {
            d.is_negative()
        }
    })
}

/// Integral solution `x` of `x · M = v`, if one exists.
pub fn solve_integral(m: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if !m.is_square() || v.len() != m.rows {
        return Err(Error::Dimension("solve_integral".into()));
    }
    let (adj, d) = adjugate(m)?;
    // x = v M^{-1} = (v adj) / det
    let num = adj.left_mul_vec(v)?;
    let mut out = Vec::with_capacity(num.len());
    for x in num {
        if !(&x % &d).is_zero() {
            return Ok(None);
        }
        out.push(x / &d);
    }
    Ok(Some(out))
}
