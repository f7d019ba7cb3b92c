//! Exact LDL^T factorization of symmetric positive definite matrices.

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{QMatrix, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LdltError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not positive definite (pivot {0} not positive)")]
    NotPositiveDefinite(usize),
}

/// Factors a symmetric positive definite rational matrix as `L * D * L^T`
/// with `L` unit lower triangular and `D` diagonal, all exact. The diagonal
/// is returned as a vector; every entry is strictly positive.
pub fn ldlt(gram: &QMatrix) -> Result<(QMatrix, Vec<Rat>), LdltError> {
    if !gram.is_symmetric() {
        return Err(LdltError::NotSymmetric);
    }
    let n = gram.rows();
    let mut l = QMatrix::identity(n);
    let mut d = vec![Rat::zero(); n];
    for j in 0..n {
        let mut dj = gram[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        if !dj.is_positive() {
            return Err(LdltError::NotPositiveDefinite(j));
        }
        let inv = dj.recip();
        d[j] = dj;
        for i in j + 1..n {
            let mut v = gram[(i, j)].clone();
            for k in 0..j {
                v -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l[(i, j)] = v * &inv;
        }
    }
    Ok((l, d))
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rint};
    use super::*;

    fn reconstruct(l: &QMatrix, d: &[Rat]) -> QMatrix {
        let n = l.rows();
        let dm = QMatrix::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { Rat::zero() });
        l.mul(&dm).mul(&l.transpose())
    }

    #[test]
    fn identity_case() {
        let (l, d) = ldlt(&QMatrix::identity(3)).unwrap();
        assert_eq!(l, QMatrix::identity(3));
        assert_eq!(d, vec![rint(1), rint(1), rint(1)]);
    }

    #[test]
    fn two_by_two() {
        let g = QMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        let (l, d) = ldlt(&g).unwrap();
        assert_eq!(l[(1, 0)], rat(1, 2));
        assert_eq!(d, vec![rint(2), rat(3, 2)]);
        assert_eq!(reconstruct(&l, &d), g);
    }

    #[test]
    fn rejects_indefinite() {
        let g = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(ldlt(&g).unwrap_err(), LdltError::NotPositiveDefinite(0));
    }

    #[test]
    fn rejects_asymmetric() {
        let g = QMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert_eq!(ldlt(&g).unwrap_err(), LdltError::NotSymmetric);
    }

    #[test]
    fn reconstruction_exact() {
        let g = QMatrix::from_i64(&[&[4, 2, 2], &[2, 5, 1], &[2, 1, 6]]);
        let (l, d) = ldlt(&g).unwrap();
        assert_eq!(reconstruct(&l, &d), g);
        let one = rint(1);
        assert!((0..3).all(|i| l[(i, i)] == one));
    }
}
