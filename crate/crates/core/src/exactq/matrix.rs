//! Dense matrices over the rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::{Int, Rat};

/// Dense row-major matrix of arbitrary-precision rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds from a slice of rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.concat() }
    }

    /// Builds from a slice of columns; all columns must have equal length.
    pub fn from_cols(cols: &[Vec<Rat>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    /// Convenience constructor from small integers, row-major.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| Rat::from_integer(Int::from(rows[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(Rat::is_integer)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, s: &Rat) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Kronecker product, row-major convention: entry ((i1,i2),(j1,j2)) of
    /// the result is a[i1,j1] * b[i2,j2] at row i1*b.rows+i2.
    pub fn kronecker(&self, b: &QMatrix) -> QMatrix {
        QMatrix::from_fn(self.rows * b.rows, self.cols * b.cols, |i, j| {
            let (i1, i2) = (i / b.rows, i % b.rows);
            let (j1, j2) = (j / b.cols, j % b.cols);
            &self[(i1, j1)] * &b[(i2, j2)]
        })
    }

    /// Gram matrix of the columns: `self^T * self`.
    pub fn gram(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.cols);
        for i in 0..self.cols {
            for j in 0..=i {
                let mut acc = Rat::zero();
                for k in 0..self.rows {
                    acc += &self[(k, i)] * &self[(k, j)];
                }
                out[(j, i)] = acc.clone();
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Reduced row echelon form. Returns the reduced matrix, the pivot
    /// columns in strictly increasing order, and the rank.
    pub fn rref(&self) -> (QMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(r, pivot_row);
            let inv = m[(pivot_row, col)].recip();
            for j in col..m.cols {
                let v = &m[(pivot_row, j)] * &inv;
                m[(pivot_row, j)] = v;
            }
            for row in 0..m.rows {
                if row == pivot_row || m[(row, col)].is_zero() {
                    continue;
                }
                let factor = m[(row, col)].clone();
                for j in col..m.cols {
                    let sub = &factor * &m[(pivot_row, j)];
                    m[(row, j)] -= sub;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right nullspace `{v : self * v = 0}`, one vector per
    /// free column of the reduced row echelon form, in ascending free-column
    /// order.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots, _) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` exactly. Returns `None` when inconsistent; for
    /// underdetermined systems returns the solution with free variables zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len(), "solve: dimension mismatch");
        let aug = QMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots, rank) = aug.rref();
        // Inconsistent iff a pivot lands in the augmented column.
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate().take(rank) {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (r, pivots, rank) = aug.rref();
        if rank < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Exact determinant via Gaussian elimination over Q.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rat::zero();
            };
            if r != col {
                m.swap_rows(r, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.recip();
            for row in col + 1..n {
                if m[(row, col)].is_zero() {
                    continue;
                }
                let factor = &m[(row, col)] * &inv;
                for j in col..n {
                    let sub = &factor * &m[(col, j)];
                    m[(row, j)] -= sub;
                }
            }
        }
        det
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

impl Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rint};
    use super::*;

    #[test]
    fn rref_identity() {
        let m = QMatrix::identity(3);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, QMatrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero() {
        let m = QMatrix::zero(2, 3);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, QMatrix::zero(2, 3));
        assert!(pivots.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_deficient() {
        let m = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_idempotent() {
        let m = QMatrix::from_i64(&[&[2, 4, 1], &[0, 3, 5]]);
        let (r, _, _) = m.rref();
        let (rr, _, _) = r.rref();
        assert_eq!(r, rr);
    }

    #[test]
    fn nullspace_identity_empty() {
        assert!(QMatrix::identity(4).nullspace_basis().is_empty());
    }

    #[test]
    fn nullspace_zero_is_standard_basis() {
        let basis = QMatrix::zero(2, 2).nullspace_basis();
        assert_eq!(basis, vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]]);
    }

    #[test]
    fn nullspace_k3_eigenspace() {
        // adjacency of the triangle minus 2I has kernel spanned by (1,1,1)
        let m = QMatrix::from_i64(&[&[-2, 1, 1], &[1, -2, 1], &[1, 1, -2]]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let first = v[0].clone();
        assert!(v.iter().all(|x| *x == first) && !first.is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        let x = m.solve(&[rint(1), rint(0)]).unwrap();
        assert_eq!(x, vec![rat(2, 3), rat(-1, 3)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));
        assert!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(QMatrix::from_i64(&[&[1, 0], &[1, 0]]).solve(&[rint(0), rint(1)]).is_none());
    }

    #[test]
    fn det_examples() {
        assert_eq!(QMatrix::identity(3).det(), rint(1));
        assert_eq!(QMatrix::from_i64(&[&[2, 1], &[1, 2]]).det(), rint(3));
        assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).det(), rint(0));
    }

    #[test]
    fn kronecker_shape() {
        let a = QMatrix::from_i64(&[&[1, 2]]);
        let b = QMatrix::from_i64(&[&[3], &[4]]);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k, QMatrix::from_i64(&[&[3, 6], &[4, 8]]));
    }
}
