//! Integer matrices, column-style Hermite normal form, integer kernels.

use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{denominator_lcm, Int, QMatrix, Rat};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IMatrix { rows, cols, data }
    }

    /// Exact conversion from a rational matrix; `None` if any entry is
    /// non-integral.
    pub fn try_from_qmatrix(m: &QMatrix) -> Option<Self> {
        if !m.is_integer() {
            return None;
        }
        Some(Self::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].numer().clone()))
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IMatrix) -> IMatrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = IMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Int {
        assert_eq!(self.rows, self.cols);
        let mut t = Int::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self[(i, j)].is_zero())
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// col_j -= q * col_c
    fn sub_col(&mut self, j: usize, c: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let sub = q * &self[(i, c)];
            self[(i, j)] -= sub;
        }
    }
}

impl Index<(usize, usize)> for IMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Column-style Hermite normal form.
///
/// Returns `(H, pivot_rows)` where `H = M * U` for some unimodular `U`.
/// Pivot columns come first, in increasing pivot-row order; the pivot entry
/// is positive, entries to its right in the pivot row are zero and entries
/// to its left are reduced into `[0, pivot)`. Non-pivot columns (beyond
/// `pivot_rows.len()`) are zero.
pub fn column_hnf(m: &IMatrix) -> (IMatrix, Vec<usize>) {
    let (h, pivots, _) = hnf_inner(m, false);
    (h, pivots)
}

/// Column HNF with the unimodular transform: returns `(H, pivot_rows, U)`
/// with `M * U = H` and `det U = ±1`.
pub fn column_hnf_with_transform(m: &IMatrix) -> (IMatrix, Vec<usize>, IMatrix) {
    let (h, pivots, u) = hnf_inner(m, true);
    (h, pivots, u.expect("transform requested"))
}

fn hnf_inner(m: &IMatrix, track: bool) -> (IMatrix, Vec<usize>, Option<IMatrix>) {
    let mut h = m.clone();
    let mut u = track.then(|| IMatrix::identity(m.cols));
    let mut pivots = Vec::new();
    let mut c = 0usize;

    for r in 0..h.rows {
        if c == h.cols {
            break;
        }
        // Euclidean sweep: shrink entries of row r in columns >= c until at
        // most one is nonzero.
        loop {
            let mut best: Option<usize> = None;
            for j in c..h.cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) => {
                        if h[(r, j)].abs() < h[(r, b)].abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(b, c);
            if let Some(u) = u.as_mut() {
                u.swap_cols(b, c);
            }
            let mut done = true;
            for j in c + 1..h.cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = div_round_toward_zero(&h[(r, j)], &h[(r, c)]);
                h.sub_col(j, c, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_col(j, c, &q);
                }
                if !h[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_col(c);
            if let Some(u) = u.as_mut() {
                u.negate_col(c);
            }
        }
        // Reduce earlier pivot columns against the new pivot.
        for j in 0..c {
            let q = h[(r, j)].div_floor(&h[(r, c)]);
            h.sub_col(j, c, &q);
            if let Some(u) = u.as_mut() {
                u.sub_col(j, c, &q);
            }
        }
        pivots.push(r);
        c += 1;
    }

    debug_assert!((c..h.cols).all(|j| h.col_is_zero(j)));
    (h, pivots, u)
}

fn div_round_toward_zero(a: &Int, b: &Int) -> Int {
    a / b
}

/// Z-basis of the integer span of a rational generating set.
///
/// Generators are scaled by the least common multiple of their denominators,
/// the column HNF of the resulting integer matrix is computed, and the scale
/// divided back out. The returned columns form a basis of the Z-span; the
/// column count equals the rank of the generators. Empty or all-zero input
/// yields a zero-column matrix.
pub fn hnf_column_basis(gens: &[Vec<Rat>]) -> QMatrix {
    if gens.is_empty() {
        return QMatrix::zero(0, 0);
    }
    let dim = gens[0].len();
    assert!(gens.iter().all(|g| g.len() == dim), "generators of mixed dimension");
    let scale = denominator_lcm(gens.iter().flatten());
    let m = IMatrix::from_fn(dim, gens.len(), |i, j| {
        let r = &gens[j][i];
        r.numer() * (&scale / r.denom())
    });
    let (h, pivots) = column_hnf(&m);
    let rank = pivots.len();
    let scale_rat = Rat::from_integer(scale);
    QMatrix::from_fn(dim, rank, |i, j| Rat::from_integer(h[(i, j)].clone()) / &scale_rat)
}

/// Basis of the integer kernel `{x in Z^cols : M x = 0}`.
pub fn integer_kernel(m: &IMatrix) -> Vec<Vec<Int>> {
    let (_, pivots, u) = column_hnf_with_transform(m);
    let rank = pivots.len();
    (rank..m.cols())
        .map(|j| (0..m.cols()).map(|i| u[(i, j)].clone()).collect())
        .collect()
}
