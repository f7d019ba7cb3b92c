//! Steiner equiangular tight frames from triple systems and Hadamard
//! matrices.

use thiserror::Error;

use super::{hadamard, SteinerError, SteinerSystem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SteinerEtfError {
    #[error(transparent)]
    Steiner(#[from] SteinerError),
    #[error("construction verification failed: {0}")]
    Verification(String),
}

/// Unit-norm measurement matrix with verified coherence.
#[derive(Clone, Debug)]
pub struct MeasurementMatrix {
    /// rows x cols, column-major access through `column`.
    pub entries: Vec<Vec<f64>>,
    pub rows: usize,
    pub cols: usize,
    /// max |<a_i, a_j>| over distinct columns.
    pub coherence: f64,
    pub provenance: String,
}

impl MeasurementMatrix {
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.entries[i][j]).collect()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entries[i][j] * x[j]).sum())
            .collect()
    }

    pub fn transpose_mul_vec(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j] * y[i]).sum())
            .collect()
    }

    /// Welch bound sqrt((n-k)/(k(n-1))) for this shape.
    pub fn welch_bound(&self) -> f64 {
        let (k, n) = (self.rows as f64, self.cols as f64);
        ((n - k) / (k * (n - 1.0))).sqrt()
    }
}

/// Builds the Steiner ETF of a triple system: one signed, unit-normalized
/// column per (point, Hadamard column) pair, supported on the blocks
/// through the point and signed by the non-constant rows of a Hadamard
/// matrix of order r+1 whose first row is all ones. Tightness and
/// equiangularity are verified numerically at 1e-10.
pub fn steiner_etf(sts: &SteinerSystem) -> Result<MeasurementMatrix, SteinerEtfError> {
    let r = sts.replication();
    let h = hadamard(r + 1)?;
    let b = sts.blocks.len();
    let n = sts.points * (r + 1);
    let stars = sts.point_stars();
    let norm = 1.0 / (r as f64).sqrt();

    let mut entries = vec![vec![0f64; n]; b];
    for (p, star) in stars.iter().enumerate() {
        debug_assert_eq!(star.len(), r);
        for hcol in 0..r + 1 {
            let col = p * (r + 1) + hcol;
            for (l, &block) in star.iter().enumerate() {
                // rows 1..r+1 of the Hadamard matrix: orthogonal to the
                // all-ones first row
                entries[block][col] = h[l + 1][hcol] as f64 * norm;
            }
        }
    }

    let m = MeasurementMatrix {
        entries,
        rows: b,
        cols: n,
        coherence: 1.0 / r as f64,
        provenance: format!("steiner_etf(v={})", sts.points),
    };
    verify_etf(&m).map_err(SteinerEtfError::Verification)?;
    Ok(m)
}

fn verify_etf(m: &MeasurementMatrix) -> Result<(), String> {
    // unit columns
    for j in 0..m.cols {
        let norm: f64 = (0..m.rows).map(|i| m.entries[i][j] * m.entries[i][j]).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(format!("column {j} has norm^2 {norm}"));
        }
    }
    // tightness: A A^T = (n/k) I
    let c = m.cols as f64 / m.rows as f64;
    for i in 0..m.rows {
        for j in i..m.rows {
            let ip: f64 = (0..m.cols).map(|l| m.entries[i][l] * m.entries[j][l]).sum();
            let target = if i == j { c } else { 0.0 };
            if (ip - target).abs() > 1e-9 {
                return Err(format!("row gram ({i},{j}) = {ip}, expected {target}"));
            }
        }
    }
    // equiangularity at the stated coherence
    for i in 0..m.cols {
        let ci = m.column(i);
        for j in i + 1..m.cols {
            let ip: f64 = ci.iter().zip(m.column(j)).map(|(a, b)| a * b).sum();
            if (ip.abs() - m.coherence).abs() > 1e-10 {
                return Err(format!("columns ({i},{j}) have |ip| {}", ip.abs()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::steiner_triple_system;
    use super::*;

    #[test]
    fn fano_etf() {
        let sts = steiner_triple_system(7).unwrap();
        let m = steiner_etf(&sts).unwrap();
        assert_eq!((m.rows, m.cols), (7, 28));
        assert!((m.coherence - 1.0 / 3.0).abs() < 1e-15);
        // Welch bound met with equality
        assert!((m.coherence - m.welch_bound()).abs() < 1e-9);
    }

    #[test]
    fn sts15_etf() {
        let sts = steiner_triple_system(15).unwrap();
        let m = steiner_etf(&sts).unwrap();
        assert_eq!((m.rows, m.cols), (35, 120));
        assert!((m.coherence - m.welch_bound()).abs() < 1e-9);
    }

    #[test]
    fn sts9_needs_missing_hadamard() {
        let sts = steiner_triple_system(9).unwrap();
        assert!(matches!(
            steiner_etf(&sts),
            Err(SteinerEtfError::Steiner(SteinerError::HadamardOrder(5)))
        ));
    }
}
