//! Lattice core: construction, shortest vectors, geometric certificates.
//!
//! A lattice is carried by its Gram matrix; similarity-invariant questions
//! (eutaxy, perfection, coherence, identification) never look at ambient
//! coordinates. When the lattice was built from ambient generators the
//! rational basis is kept alongside, with an optional positive `scale_sq`
//! so that frames with irrational normalization sqrt(scale_sq) stay exact:
//! the true Gram is `scale_sq * B^T B`.

mod eutaxy;
mod io;
mod minvec;
mod simplex;

pub use eutaxy::{perfection_check, strong_eutaxy_check, weak_eutaxy_check, EutaxyCertificate};
pub use io::{parse_gram, write_gram, write_minimal_vectors, GramIoError};
pub use minvec::{brute_force_box, brute_force_shortest, enumerate_up_to, shortest_vectors, MinimalVectorSet};

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactq::{hnf_column_basis, ldlt, Int, QMatrix, Rat};
use crate::graphs::Graph;
use crate::spectral::{self, SpectralError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("generating set is empty or all-zero")]
    ZeroGenerators,
    #[error("basis columns are linearly dependent")]
    DependentBasis,
    #[error("gram matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("coherence needs rank >= 2")]
    CoherenceRank,
    #[error("supplied vectors are not minimal vectors")]
    NotMinimalVectors,
    #[error("supplied vectors do not form a basis of the lattice")]
    NotABasis,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Full-rank lattice in a rational subspace.
#[derive(Debug)]
pub struct Lattice {
    basis: Option<QMatrix>,
    scale_sq: Rat,
    gram: QMatrix,
    pub provenance: String,
    minvec: OnceLock<MinimalVectorSet>,
}

impl Clone for Lattice {
    fn clone(&self) -> Self {
        let minvec = OnceLock::new();
        if let Some(mv) = self.minvec.get() {
            let _ = minvec.set(mv.clone());
        }
        Lattice {
            basis: self.basis.clone(),
            scale_sq: self.scale_sq.clone(),
            gram: self.gram.clone(),
            provenance: self.provenance.clone(),
            minvec,
        }
    }
}

impl Lattice {
    /// Lattice spanned over Z by ambient rational generators (columns need
    /// not be independent); the stored basis comes from the column Hermite
    /// normal form.
    pub fn from_generators(
        gens: &[Vec<Rat>],
        provenance: impl Into<String>,
    ) -> Result<Self, LatticeError> {
        Self::from_generators_scaled(gens, Rat::one(), provenance)
    }

    /// As [`Lattice::from_generators`], with true vectors carrying an extra
    /// factor sqrt(scale_sq).
    pub fn from_generators_scaled(
        gens: &[Vec<Rat>],
        scale_sq: Rat,
        provenance: impl Into<String>,
    ) -> Result<Self, LatticeError> {
        if !scale_sq.is_positive() {
            return Err(LatticeError::NonPositiveScale);
        }
        let basis = hnf_column_basis(gens);
        if basis.cols() == 0 {
            return Err(LatticeError::ZeroGenerators);
        }
        let gram = basis.gram().scale(&scale_sq);
        Ok(Lattice {
            basis: Some(basis),
            scale_sq,
            gram,
            provenance: provenance.into(),
            minvec: OnceLock::new(),
        })
    }

    /// Lattice with the given ambient basis (columns must be independent).
    pub fn from_basis(basis: QMatrix, provenance: impl Into<String>) -> Result<Self, LatticeError> {
        let gram = basis.gram();
        if ldlt(&gram).is_err() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Lattice {
            basis: Some(basis),
            scale_sq: Rat::one(),
            gram,
            provenance: provenance.into(),
            minvec: OnceLock::new(),
        })
    }

    /// Coordinate-only lattice given by a symmetric positive definite Gram
    /// matrix; no ambient embedding is attached.
    pub fn from_gram(gram: QMatrix, provenance: impl Into<String>) -> Result<Self, LatticeError> {
        if ldlt(&gram).is_err() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        Ok(Lattice {
            basis: None,
            scale_sq: Rat::one(),
            gram,
            provenance: provenance.into(),
            minvec: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.basis.as_ref().map(QMatrix::rows)
    }

    pub fn basis(&self) -> Option<&QMatrix> {
        self.basis.as_ref()
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn scale_sq(&self) -> &Rat {
        &self.scale_sq
    }

    pub fn det_gram(&self) -> Rat {
        self.gram.det()
    }

    /// Shortest nonzero vectors, computed once and cached.
    pub fn minimal_vectors(&self) -> &MinimalVectorSet {
        self.minvec.get_or_init(|| {
            let (min_norm_sq, coords) = shortest_vectors(&self.gram);
            let ambient = self.basis.as_ref().map(|b| {
                coords
                    .iter()
                    .map(|u| {
                        let ur: Vec<Rat> =
                            u.iter().map(|x| Rat::from_integer(x.clone())).collect();
                        b.mul_vec(&ur)
                    })
                    .collect()
            });
            MinimalVectorSet { min_norm_sq, coords, ambient }
        })
    }

    pub fn min_norm_sq(&self) -> Rat {
        self.minimal_vectors().min_norm_sq.clone()
    }

    pub fn kissing_number(&self) -> usize {
        self.minimal_vectors().kissing_number()
    }

    /// Dual lattice within the same span: basis columns go to the dual
    /// basis, the Gram matrix to its inverse.
    pub fn dual(&self) -> Lattice {
        let gram = self.gram.inverse().expect("gram is positive definite");
        let basis = self.basis.as_ref().map(|b| {
            let btb_inv = b.gram().inverse().expect("independent columns");
            b.mul(&btb_inv)
        });
        let scale_sq = if basis.is_some() { self.scale_sq.recip() } else { Rat::one() };
        Lattice {
            basis,
            scale_sq,
            gram,
            provenance: format!("dual({})", self.provenance),
            minvec: OnceLock::new(),
        }
    }

    /// Tensor product: Kronecker product of bases and Gram matrices.
    pub fn tensor(&self, other: &Lattice) -> Lattice {
        let gram = self.gram.kronecker(&other.gram);
        let basis = match (&self.basis, &other.basis) {
            (Some(a), Some(b)) => Some(a.kronecker(b)),
            _ => None,
        };
        let scale_sq = if basis.is_some() { &self.scale_sq * &other.scale_sq } else { Rat::one() };
        Lattice {
            basis,
            scale_sq,
            gram,
            provenance: format!("tensor({}, {})", self.provenance, other.provenance),
            minvec: OnceLock::new(),
        }
    }

    /// Orthogonal direct sum: block-diagonal Gram; the ambient embedding is
    /// kept when both sides have one and their scales are compatible (equal
    /// up to a rational square), otherwise the sum is coordinate-only.
    pub fn orthogonal_sum(&self, other: &Lattice) -> Lattice {
        let (k1, k2) = (self.rank(), other.rank());
        let gram = QMatrix::from_fn(k1 + k2, k1 + k2, |i, j| match (i < k1, j < k1) {
            (true, true) => self.gram[(i, j)].clone(),
            (false, false) => other.gram[(i - k1, j - k1)].clone(),
            _ => Rat::zero(),
        });
        let basis = match (&self.basis, &other.basis) {
            (Some(a), Some(b)) => {
                let ratio = &other.scale_sq / &self.scale_sq;
                rational_sqrt(&ratio).map(|r| {
                    // rescale the second basis so one common scale works
                    let b = b.scale(&r);
                    let (d1, d2) = (a.rows(), b.rows());
                    QMatrix::from_fn(d1 + d2, k1 + k2, |i, j| match (i < d1, j < k1) {
                        (true, true) => a[(i, j)].clone(),
                        (false, false) => b[(i - d1, j - k1)].clone(),
                        _ => Rat::zero(),
                    })
                })
            }
            _ => None,
        };
        let scale_sq = if basis.is_some() { self.scale_sq.clone() } else { Rat::one() };
        Lattice {
            basis,
            scale_sq,
            gram,
            provenance: format!("sum({}, {})", self.provenance, other.provenance),
            minvec: OnceLock::new(),
        }
    }

    /// Well-rounded: the minimal vectors span the whole lattice span.
    pub fn is_well_rounded(&self) -> bool {
        let mv = self.minimal_vectors();
        let rows: Vec<Vec<Rat>> = mv
            .coords
            .iter()
            .map(|u| u.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        QMatrix::from_rows(&rows).rank() == self.rank()
    }

    /// Squared coherence: max over distinct sign-deduplicated minimal pairs
    /// of <x,y>^2 / (|x|^2 |y|^2), exact.
    pub fn coherence_sq(&self) -> Result<Rat, LatticeError> {
        if self.rank() < 2 {
            return Err(LatticeError::CoherenceRank);
        }
        let mv = self.minimal_vectors();
        let reps = mv.sign_representatives();
        let denom = &mv.min_norm_sq * &mv.min_norm_sq;
        let mut best = Rat::zero();
        for i in 0..reps.len() {
            let gi = self.gram_times(reps[i]);
            for rj in reps.iter().skip(i + 1) {
                let mut ip = Rat::zero();
                for (g, x) in gi.iter().zip(rj.iter()) {
                    if !x.is_zero() {
                        ip += g * Rat::from_integer(x.clone());
                    }
                }
                let c = &ip * &ip / &denom;
                if c > best {
                    best = c;
                }
            }
        }
        Ok(best)
    }

    fn gram_times(&self, u: &[Int]) -> Vec<Rat> {
        let k = self.rank();
        (0..k)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, x) in u.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &self.gram[(i, j)] * Rat::from_integer(x.clone());
                    }
                }
                acc
            })
            .collect()
    }

    /// Sphere-packing density, rendered in floating point from the exact
    /// minimum and determinant.
    pub fn packing_density(&self) -> f64 {
        let n = self.rank();
        let min = rat_to_f64(&self.min_norm_sq());
        let det = rat_to_f64(&self.det_gram());
        unit_ball_volume(n) * min.powf(n as f64 / 2.0) / (2f64.powi(n as i32) * det.sqrt())
    }

    /// Checks the packing-coherence inequality for an ordered basis of
    /// minimal vectors: for each i, the angle nu_i between b_{i+1} and the
    /// span of b_1..b_i must satisfy cos^2(nu_i) <= 1 - det(G)/|L|^(2 rank).
    /// Both sides are exact rationals, so the comparison is exact.
    pub fn coherence_bound_check(&self, minimal_basis: &[Vec<Int>]) -> Result<bool, LatticeError> {
        let k = self.rank();
        if minimal_basis.len() != k {
            return Err(LatticeError::NotABasis);
        }
        let min = self.min_norm_sq();
        for v in minimal_basis {
            let norm = crate::exactq::dot(
                &self.gram_times(v),
                &v.iter().map(|x| Rat::from_integer(x.clone())).collect::<Vec<_>>(),
            );
            if norm != min {
                return Err(LatticeError::NotMinimalVectors);
            }
        }
        let u = QMatrix::from_fn(k, k, |i, j| Rat::from_integer(minimal_basis[j][i].clone()));
        if !u.det().abs().is_one() {
            return Err(LatticeError::NotABasis);
        }
        let gb = u.transpose().mul(&self.gram).mul(&u);
        let det_g = self.det_gram();
        let mut min_pow = Rat::one();
        for _ in 0..k {
            min_pow *= &min;
        }
        let rhs = Rat::one() - det_g / min_pow;
        // cos^2 nu_i = 1 - det(G_{i+1}) / (det(G_i) * |b_{i+1}|^2)
        let mut prev_det = Rat::one();
        for i in 1..=k {
            let lead = QMatrix::from_fn(i, i, |r, c| gb[(r, c)].clone());
            let d = lead.det();
            if i >= 2 {
                let sin_sq = &d / (&prev_det * &gb[(i - 1, i - 1)]);
                let cos_sq = Rat::one() - sin_sq;
                if cos_sq > rhs {
                    return Ok(false);
                }
            }
            prev_det = d;
        }
        Ok(true)
    }

    /// Searches the minimal vectors for an ordered basis of the lattice
    /// (unimodular coordinate matrix). Backtracking with rank pruning.
    pub fn minimal_basis(&self) -> Option<Vec<Vec<Int>>> {
        let k = self.rank();
        let mv = self.minimal_vectors();
        let reps: Vec<Vec<Int>> = mv.sign_representatives().into_iter().cloned().collect();
        let mut chosen: Vec<Vec<Int>> = Vec::with_capacity(k);
        fn search(
            reps: &[Vec<Int>],
            start: usize,
            chosen: &mut Vec<Vec<Int>>,
            k: usize,
        ) -> bool {
            if chosen.len() == k {
                let u = QMatrix::from_fn(k, k, |i, j| Rat::from_integer(chosen[j][i].clone()));
                return u.det().abs().is_one();
            }
            for idx in start..reps.len() {
                chosen.push(reps[idx].clone());
                let rows: Vec<Vec<Rat>> = chosen
                    .iter()
                    .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
                    .collect();
                if QMatrix::from_rows(&rows).rank() == chosen.len()
                    && search(reps, idx + 1, chosen, k)
                {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        search(&reps, 0, &mut chosen, k).then_some(chosen)
    }
}

/// Lattice generated by the columns of the eigenprojection of `g` at
/// eigenvalue `lambda` (the integer-point image of the projector).
pub fn graph_lattice(g: &Graph, lambda: &Rat) -> Result<Lattice, LatticeError> {
    let proj = spectral::eigenprojection(g, lambda)?;
    graph_lattice_from_projection(g, &proj)
}

/// As [`graph_lattice`] with a precomputed projection.
pub fn graph_lattice_from_projection(
    g: &Graph,
    proj: &spectral::EigenProjection,
) -> Result<Lattice, LatticeError> {
    Lattice::from_generators(
        &proj.projection.columns(),
        format!("graph_lattice({}, {})", g.label, proj.eigenvalue),
    )
}

/// Rational square root, if one exists.
fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    (&num * &num == *r.numer() && &den * &den == *r.denom()).then(|| Rat::new(num, den))
}

fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Volume of the unit ball in R^n.
pub fn unit_ball_volume(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => unit_ball_volume(n - 2) * 2.0 * std::f64::consts::PI / n as f64,
    }
}
