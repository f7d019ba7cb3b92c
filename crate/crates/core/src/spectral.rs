//! Exact rational spectra of adjacency matrices and the orthogonal
//! projectors onto their eigenspaces.

use thiserror::Error;

use crate::exactq::{charpoly, rational_roots, QMatrix, Rat};
use crate::graphs::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("{0} is not a rational eigenvalue of {1}")]
    NotAnEigenvalue(Rat, String),
}

/// Rational part of a graph spectrum: distinct rational eigenvalues with
/// multiplicities, sorted in decreasing order, plus the total degree mass of
/// the irrational eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpectrum {
    pub entries: Vec<(Rat, usize)>,
    pub residual_degree: usize,
}

impl RationalSpectrum {
    pub fn multiplicity_of(&self, lambda: &Rat) -> Option<usize> {
        self.entries.iter().find(|(l, _)| l == lambda).map(|(_, m)| *m)
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = &Rat> {
        self.entries.iter().map(|(l, _)| l)
    }
}

/// Computes the rational spectrum from the exact characteristic polynomial.
pub fn rational_spectrum(g: &Graph) -> RationalSpectrum {
    let p = charpoly(&g.adjacency_matrix()).expect("adjacency matrices are square and integral");
    let entries = rational_roots(&p);
    let rational_mass: usize = entries.iter().map(|(_, m)| m).sum();
    RationalSpectrum { entries, residual_degree: g.vertices() - rational_mass }
}

/// Exact orthogonal projector onto a rational eigenspace.
///
/// Invariants, all verified on construction: the projection is symmetric
/// and idempotent, `A * P = lambda * P`, and its rank equals both the
/// nullity of `A - lambda I` and the root multiplicity in the
/// characteristic polynomial (the adjacency matrix is diagonalizable, so a
/// mismatch is a hard internal error).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenProjection {
    pub eigenvalue: Rat,
    pub projection: QMatrix,
    pub eigenbasis: QMatrix,
}

impl EigenProjection {
    pub fn multiplicity(&self) -> usize {
        self.eigenbasis.cols()
    }
}

pub fn eigenprojection(g: &Graph, lambda: &Rat) -> Result<EigenProjection, SpectralError> {
    let spectrum = rational_spectrum(g);
    eigenprojection_with_spectrum(g, lambda, &spectrum)
}

/// Same as [`eigenprojection`] but reuses a precomputed spectrum, avoiding a
/// repeated characteristic-polynomial run per eigenvalue.
pub fn eigenprojection_with_spectrum(
    g: &Graph,
    lambda: &Rat,
    spectrum: &RationalSpectrum,
) -> Result<EigenProjection, SpectralError> {
    let n = g.vertices();
    let a = g.adjacency_matrix();
    let shifted = QMatrix::from_fn(n, n, |i, j| {
        if i == j {
            &a[(i, j)] - lambda
        } else {
            a[(i, j)].clone()
        }
    });
    let kernel = shifted.nullspace_basis();
    if kernel.is_empty() {
        return Err(SpectralError::NotAnEigenvalue(lambda.clone(), g.label.clone()));
    }
    let root_mult = spectrum
        .multiplicity_of(lambda)
        .ok_or_else(|| SpectralError::NotAnEigenvalue(lambda.clone(), g.label.clone()))?;
    assert_eq!(
        kernel.len(),
        root_mult,
        "eigenspace dimension disagrees with charpoly multiplicity"
    );

    let basis = QMatrix::from_cols(&kernel);
    let bt = basis.transpose();
    let gram_inv = bt.mul(&basis).inverse().expect("kernel basis is independent");
    let projection = basis.mul(&gram_inv).mul(&bt);

    debug_assert!(projection.is_symmetric());
    assert_eq!(projection.mul(&projection), projection, "projector must be idempotent");
    assert_eq!(projection.rank(), kernel.len());
    let ap = a.mul(&projection);
    let lp = projection.scale(lambda);
    assert_eq!(ap, lp, "A*P must equal lambda*P");

    Ok(EigenProjection { eigenvalue: lambda.clone(), projection, eigenbasis: basis })
}
