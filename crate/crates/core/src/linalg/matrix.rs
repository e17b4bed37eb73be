use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Storage is dense on purpose: the algebras handled here stay below a few
/// thousand basis elements, and the large systems go through
/// [`super::SparseEchelon`] instead.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<F>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<F> {
        self.row(r).to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &F, other: &Self) -> Result<()> {
        self.check_same_shape(other)?;
        if s.is_zero() {
            return Ok(());
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = a.clone() + s.clone() * b.clone();
            }
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Matrix product; zero entries of `self` are skipped, which makes
    /// products of sparse action matrices cheap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let v = a.clone() * b.clone();
                        out[(i, j)] = out[(i, j)].clone() + v;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![F::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o = o.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        Ok(Self::from_fn(self.rows, cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    /// Reduced row-echelon form and the pivot columns.
    ///
    /// Forward elimination is fraction-free (Bareiss): every update is
    /// `(p * a_ij - a_ic * a_rj) / p_prev`, which keeps integer inputs integral
    /// until the final normalisation pass.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let p = m[(r, c)].clone();
            for i in r + 1..rows {
                let f = m[(i, c)].clone();
                for j in c + 1..cols {
                    let rj = &m[(r, j)];
                    let v = if f.is_zero() || rj.is_zero() {
                        p.clone() * m[(i, j)].clone()
                    } else {
                        p.clone() * m[(i, j)].clone() - f.clone() * rj.clone()
                    };
                    m[(i, j)] = if v.is_zero() { v } else { v / prev.clone() };
                }
                m[(i, c)] = F::zero();
            }
            prev = p;
            pivots.push(c);
            r += 1;
        }
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = F::one() / m[(k, c)].clone();
            for j in c..cols {
                if !m[(k, j)].is_zero() {
                    m[(k, j)] = m[(k, j)].clone() * inv.clone();
                }
            }
            for i in 0..k {
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !m[(k, j)].is_zero() {
                        let v = f.clone() * m[(k, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - v;
                    }
                }
            }
        }
        for i in pivots.len()..rows {
            for j in 0..cols {
                m[(i, j)] = F::zero();
            }
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()])?)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = r[(k, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Reduced row-echelon basis of the row space (nonzero rows only).
    pub fn row_space_basis(&self) -> (Self, Vec<usize>) {
        let (r, pivots) = self.rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        (r.select_rows(&rows), pivots)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }
}

/// Null-space basis read off a reduced row-echelon matrix.
pub(crate) fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -r[(k, f)].clone();
            }
            v
        })
        .collect()
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Serialised form: dimensions plus row-major scalar strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl<F: Field> Matrix<F> {
    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|x| x.to_scalar_string()).collect(),
        }
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<Self> {
        let data = doc
            .entries
            .iter()
            .map(|s| F::parse_scalar(s).ok_or_else(|| Error::Schema(format!("bad scalar {s:?}"))))
            .collect::<Result<Vec<F>>>()?;
        Self::from_vec(doc.rows, doc.cols, data)
    }
}

/// Dot product.
pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `a + s * b`
pub fn axpy<F: Field>(a: &mut [F], s: &F, b: &[F]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.clone() + s.clone() * y.clone();
        }
    }
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Matrix::from_rows(cols, &rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let i3 = Matrix::<Rational>::identity(3);
        assert_eq!(i3.rref(), (i3.clone(), vec![0, 1, 2]));
        let z = Matrix::<Rational>::zeros(2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = mat(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_needs_row_swap_and_fractions() {
        let (r, p) = mat(&[&[0, 2, 4], &[3, 0, 1]]).rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r[(0, 2)], Rational::from_ratio(1, 3));
        assert_eq!(r[(1, 2)], q(2));
    }

    #[test]
    fn kernels() {
        assert!(Matrix::<Rational>::identity(4).kernel_basis().is_empty());
        assert_eq!(Matrix::<Rational>::zeros(1, 3).kernel_basis().len(), 3);
        let k = mat(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k, vec![vec![q(-2), q(1)]]);
    }

    #[test]
    fn solves() {
        let i = Matrix::<Rational>::identity(3);
        let b = vec![q(1), q(-2), Rational::from_ratio(1, 2)];
        assert_eq!(i.solve(&b).unwrap(), Some(b.clone()));

        let m = mat(&[&[1, 1]]);
        let x = m.solve(&[q(3)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q(3)]);

        assert_eq!(mat(&[&[1], &[1]]).solve(&[q(0), q(1)]).unwrap(), None);
        assert!(matches!(
            i.solve(&[q(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
