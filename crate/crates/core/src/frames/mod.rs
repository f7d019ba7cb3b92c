//! Tight frames with exact rational representatives.
//!
//! A frame stores rational column vectors plus a positive rational
//! `scale_sq`; the true frame vectors are sqrt(scale_sq) times the columns,
//! so irrational normalizations like 1/sqrt(k^2+k) stay exact. Every
//! statement checked here is invariant under that representation.

mod numeric;

pub use numeric::{
    detect_non_discreteness, is_rational_numeric, reconstruct_rational_gram, DiscretenessVerdict,
    NumericOptions,
};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactq::{Int, QMatrix, Rat};
use crate::graphs::PermutationGroup;
use crate::lattices::{Lattice, LatticeError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("frame needs at least one nonzero vector")]
    Empty,
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("orbit exceeded the size cap of {0}")]
    OrbitTooLarge(usize),
    #[error("prefix columns are rank-deficient")]
    SingularPrefix,
    #[error("frame is not tight")]
    NotTight,
    #[error("frame vectors did not generate a lattice basis consistently")]
    InconsistentLattice,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("malformed frame file: {0}")]
    Parse(String),
}

/// Finite vector system in R^ambient with exact rational Gram data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// Columns are the unnormalized rational representatives.
    pub vectors: QMatrix,
    /// True vectors are sqrt(scale_sq) times the columns.
    pub scale_sq: Rat,
}

impl Frame {
    pub fn new(vectors: QMatrix, scale_sq: Rat) -> Result<Self, FrameError> {
        if !scale_sq.is_positive() {
            return Err(FrameError::NonPositiveScale);
        }
        if vectors.cols() == 0 || (0..vectors.cols()).all(|j| vectors.col(j).iter().all(Rat::is_zero))
        {
            return Err(FrameError::Empty);
        }
        Ok(Frame { vectors, scale_sq })
    }

    pub fn from_columns(cols: &[Vec<Rat>]) -> Result<Self, FrameError> {
        Frame::new(QMatrix::from_cols(cols), Rat::one())
    }

    /// Number of frame vectors.
    pub fn len(&self) -> usize {
        self.vectors.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.vectors.rows()
    }

    /// Dimension of the spanned subspace.
    pub fn dim(&self) -> usize {
        self.vectors.rank()
    }

    /// Exact Gram matrix of the true frame vectors.
    pub fn gram(&self) -> QMatrix {
        self.vectors.gram().scale(&self.scale_sq)
    }

    /// Rational frames are rational by representation; this reports it for
    /// interface symmetry with numeric ingestion.
    pub fn is_rational(&self) -> bool {
        true
    }
}

/// Tightness and angle analysis of a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessReport {
    pub is_tight: bool,
    /// Frame constant from the reconstruction identity, when tight.
    pub gamma: Option<Rat>,
    pub is_uniform: bool,
    /// Constant |<f_i, f_j>| over distinct pairs (orthonormal bases count:
    /// the constant is zero).
    pub is_equiangular: bool,
    /// max <f_i,f_j>^2 / (|f_i|^2 |f_j|^2) over distinct pairs; `None` for
    /// single-vector frames.
    pub coherence_sq: Option<Rat>,
    /// Dimension of the span, for reporting alongside tightness.
    pub dim: usize,
}

/// Exact analysis: tight iff the outer Gram V V^T is a scalar multiple of
/// the orthogonal projector onto the span; gamma is read off from the
/// reconstruction identity |v|^2 = gamma * sum <v, f_i>^2 on the span.
pub fn analyze(f: &Frame) -> TightnessReport {
    let v = &f.vectors;
    let outer = v.mul(&v.transpose());
    let k = f.dim();

    // projector onto the span via any independent column subset
    let projector = span_projector(v);
    let c = outer.trace() / crate::exactq::rint(k as i64);
    let is_tight = outer == projector.scale(&c);
    let gamma = is_tight.then(|| (&c * &f.scale_sq).recip());

    let gram = v.gram();
    let n = f.len();
    let first_norm = gram[(0, 0)].clone();
    let is_uniform = (0..n).all(|i| gram[(i, i)] == first_norm);

    let mut coherence_sq: Option<Rat> = None;
    let mut abs_sq: Option<Rat> = None;
    let mut is_equiangular = n > 1;
    for i in 0..n {
        for j in i + 1..n {
            let ip_sq = &gram[(i, j)] * &gram[(i, j)];
            match &abs_sq {
                None => abs_sq = Some(ip_sq.clone()),
                Some(a) if *a != ip_sq => is_equiangular = false,
                _ => {}
            }
            let denom = &gram[(i, i)] * &gram[(j, j)];
            let c = ip_sq / denom;
            if coherence_sq.as_ref().is_none_or(|b| c > *b) {
                coherence_sq = Some(c);
            }
        }
    }

    TightnessReport { is_tight, gamma, is_uniform, is_equiangular, coherence_sq, dim: k }
}

fn span_projector(v: &QMatrix) -> QMatrix {
    // pivot columns of the reduced row echelon form are independent
    let (_, pivots, _) = v.rref();
    let cols: Vec<Vec<Rat>> = pivots.iter().map(|&j| v.col(j)).collect();
    let b = QMatrix::from_cols(&cols);
    let bt = b.transpose();
    let inv = bt.mul(&b).inverse().expect("independent columns");
    b.mul(&inv).mul(&bt)
}

/// The cyclic (k, k+1) equiangular tight frame in the zero-sum hyperplane
/// of R^{k+1}: column j has entry -k in position j and 1 elsewhere, with
/// squared scale 1/(k^2+k).
pub fn simplex_etf(k: usize) -> Frame {
    assert!(k >= 1, "simplex frame needs k >= 1");
    let n = k + 1;
    let vectors = QMatrix::from_fn(n, n, |i, j| {
        if i == j {
            crate::exactq::rint(-(k as i64))
        } else {
            Rat::one()
        }
    });
    let scale_sq = Rat::new(Int::one(), Int::from((k * k + k) as i64));
    Frame { vectors, scale_sq }
}

/// Lattice generated by the integer span of the frame; the Gram carries the
/// frame's squared scale.
pub fn lattice_from_frame(f: &Frame) -> Result<Lattice, FrameError> {
    Ok(Lattice::from_generators_scaled(
        &f.vectors.columns(),
        f.scale_sq.clone(),
        format!("frame lattice ({} vectors in R^{})", f.len(), f.ambient_dim()),
    )?)
}

/// Verifies, bit-exactly, the rationality identity behind tight frames that
/// span lattices: with B the true frame matrix, A a lattice basis of its
/// integer span, Z the integer coordinate matrix (A Z = B), and c the frame
/// operator constant (B B^T = c P on the span, the reciprocal of the
/// reconstruction constant), the identity B^T B = c Z^T (Z Z^T)^{-1} Z must
/// hold. Always true for rational frames; a false return is a bug detector.
pub fn verify_rationality_theorem(f: &Frame) -> Result<bool, FrameError> {
    let report = analyze(f);
    let Some(gamma) = report.gamma else {
        return Err(FrameError::NotTight);
    };
    let operator_constant = gamma.recip();
    let lattice = lattice_from_frame(f)?;
    let basis = lattice.basis().expect("frame lattices carry bases");

    // integer coordinates Z with A Z = V (same Z as for the true vectors)
    let mut z_cols: Vec<Vec<Rat>> = Vec::with_capacity(f.len());
    for j in 0..f.len() {
        let col = f.vectors.col(j);
        let x = basis.solve(&col).ok_or(FrameError::InconsistentLattice)?;
        if !x.iter().all(Rat::is_integer) {
            return Err(FrameError::InconsistentLattice);
        }
        z_cols.push(x);
    }
    let z = QMatrix::from_cols(&z_cols);
    let zt = z.transpose();
    let zzt_inv = z.mul(&zt).inverse().ok_or(FrameError::InconsistentLattice)?;
    let rhs = zt.mul(&zzt_inv).mul(&z).scale(&operator_constant);
    let lhs = f.gram();
    Ok(lhs == rhs)
}

/// Exact solve of B0 X = B1 where B0 is the prefix of `split` columns and
/// B1 the rest; errors when the prefix does not span the frame space.
pub fn b0_inverse_b1(f: &Frame, split: usize) -> Result<QMatrix, FrameError> {
    assert!(split <= f.len(), "split index out of range");
    let b0_cols: Vec<Vec<Rat>> = (0..split).map(|j| f.vectors.col(j)).collect();
    let b0 = QMatrix::from_cols(&b0_cols);
    if b0.rank() < f.dim() {
        return Err(FrameError::SingularPrefix);
    }
    let m = f.len() - split;
    let mut out = QMatrix::zero(split, m);
    for (idx, j) in (split..f.len()).enumerate() {
        let col = f.vectors.col(j);
        let x = b0.solve(&col).ok_or(FrameError::SingularPrefix)?;
        for i in 0..split {
            out[(i, idx)] = x[i].clone();
        }
    }
    Ok(out)
}

/// Orbit of a seed vector under the permutation action of a group, closed
/// under generator application and deduplicated. The orbit is capped.
pub fn orbit_frame(
    group: &PermutationGroup,
    seed: &[Rat],
    cap: usize,
) -> Result<Frame, FrameError> {
    assert_eq!(group.degree, seed.len(), "seed dimension must match group degree");
    if seed.iter().all(Rat::is_zero) {
        return Err(FrameError::Empty);
    }
    let mut orbit: Vec<Vec<Rat>> = vec![seed.to_vec()];
    let mut frontier = vec![seed.to_vec()];
    while let Some(v) = frontier.pop() {
        for sigma in &group.generators {
            let mut w = vec![Rat::zero(); v.len()];
            for (i, x) in v.iter().enumerate() {
                w[sigma[i]] = x.clone();
            }
            if !orbit.contains(&w) {
                if orbit.len() >= cap {
                    return Err(FrameError::OrbitTooLarge(cap));
                }
                orbit.push(w.clone());
                frontier.push(w);
            }
        }
    }
    Frame::from_columns(&orbit)
}

/// Default orbit size cap.
pub const ORBIT_CAP: usize = 10_000;

/// Parses a frame from CSV text: first line `scale_sq <rational>`, then the
/// matrix rows (comma-separated rationals), columns being frame vectors.
pub fn parse_frame_csv(text: &str) -> Result<Frame, FrameError> {
    use std::str::FromStr;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| FrameError::Parse("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let scale_sq = match (parts.next(), parts.next()) {
        (Some("scale_sq"), Some(tok)) => {
            Rat::from_str(tok).map_err(|e| FrameError::Parse(format!("bad scale: {e}")))?
        }
        _ => return Err(FrameError::Parse("first line must be `scale_sq <p/q>`".into())),
    };
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for line in lines {
        let row: Result<Vec<Rat>, _> = line
            .split(',')
            .map(|tok| Rat::from_str(tok.trim()).map_err(|e| format!("bad entry {tok:?}: {e}")))
            .collect();
        rows.push(row.map_err(FrameError::Parse)?);
    }
    if rows.is_empty() {
        return Err(FrameError::Parse("no matrix rows".into()));
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(FrameError::Parse("ragged rows".into()));
    }
    Frame::new(QMatrix::from_rows(&rows), scale_sq)
}

pub fn write_frame_csv(f: &Frame) -> String {
    let mut out = format!("scale_sq {}\n", f.scale_sq);
    for i in 0..f.vectors.rows() {
        let row: Vec<String> =
            (0..f.vectors.cols()).map(|j| f.vectors[(i, j)].to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Frame made of a lattice's minimal vectors (ambient representatives),
/// used to cross-check strong eutaxy against frame tightness.
pub fn minimal_vector_frame(l: &Lattice) -> Option<Frame> {
    let mv = l.minimal_vectors();
    let ambient = mv.ambient.as_ref()?;
    Some(Frame {
        vectors: QMatrix::from_cols(ambient),
        scale_sq: l.scale_sq().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{dot, rat, rint};

    #[test]
    fn simplex_frame_is_equiangular_tight() {
        let f = simplex_etf(3);
        assert_eq!(f.len(), 4);
        assert_eq!(f.dim(), 3);
        let r = analyze(&f);
        assert!(r.is_tight && r.is_uniform && r.is_equiangular);
        assert_eq!(r.coherence_sq, Some(rat(1, 9)));
    }

    #[test]
    fn simplex_gamma_reconstructs_norms() {
        // |v|^2 = gamma * scale * sum <v, c_i>^2 for 20 random rational
        // vectors of the span, per dimension
        let mut state = 0x5eedu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        for k in 2..=6 {
            let f = simplex_etf(k);
            let r = analyze(&f);
            let gamma = r.gamma.expect("tight");
            for _ in 0..20 {
                let probe: Vec<Rat> =
                    (0..=k).map(|_| rat(next(), next().abs().max(1))).collect();
                // project the probe onto the zero-sum hyperplane
                let mean = probe.iter().sum::<Rat>() / rint(k as i64 + 1);
                let v: Vec<Rat> = probe.iter().map(|x| x - &mean).collect();
                let mut sum = Rat::zero();
                for j in 0..f.len() {
                    let ip = dot(&v, &f.vectors.col(j));
                    sum += &ip * &ip;
                }
                assert_eq!(&gamma * &f.scale_sq * sum, dot(&v, &v), "k = {k}");
            }
        }
    }

    #[test]
    fn standard_basis_frame() {
        let f = Frame::new(QMatrix::identity(3), Rat::one()).unwrap();
        let r = analyze(&f);
        assert!(r.is_tight && r.is_uniform);
        assert_eq!(r.gamma, Some(rint(1)));
        // constant zero angles count as equiangular
        assert!(r.is_equiangular);
        assert_eq!(r.coherence_sq, Some(rint(0)));
    }

    #[test]
    fn repeated_column_frame_is_not_tight() {
        let cols = vec![
            vec![rint(1), rint(0)],
            vec![rint(1), rint(0)],
            vec![rint(0), rint(1)],
        ];
        let f = Frame::from_columns(&cols).unwrap();
        let r = analyze(&f);
        assert!(!r.is_tight);
        assert_eq!(r.coherence_sq, Some(rint(1)));
    }

    #[test]
    fn simplex_lattice_has_frame_vectors_minimal() {
        let f = simplex_etf(3);
        let l = lattice_from_frame(&f).unwrap();
        assert_eq!(l.rank(), 3);
        let mv = l.minimal_vectors();
        // the minimal vectors coincide up to sign with the frame columns
        assert_eq!(mv.kissing_number(), 8);
        assert_eq!(l.coherence_sq().unwrap(), rat(1, 9));
    }

    #[test]
    fn rationality_identity_on_simplex_frames() {
        for k in 2..=5 {
            assert!(verify_rationality_theorem(&simplex_etf(k)).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn rationality_identity_on_standard_basis() {
        let f = Frame::new(QMatrix::identity(4), Rat::one()).unwrap();
        assert!(verify_rationality_theorem(&f).unwrap());
    }

    #[test]
    fn prefix_solve() {
        // [I | v]: solving gives v back
        let cols = vec![
            vec![rint(1), rint(0)],
            vec![rint(0), rint(1)],
            vec![rat(2, 3), rat(-1, 3)],
        ];
        let f = Frame::from_columns(&cols).unwrap();
        let x = b0_inverse_b1(&f, 2).unwrap();
        assert_eq!(x[(0, 0)], rat(2, 3));
        assert_eq!(x[(1, 0)], rat(-1, 3));

        let f3 = simplex_etf(3);
        let x = b0_inverse_b1(&f3, 3).unwrap();
        assert_eq!((x.rows(), x.cols()), (3, 1));
        // B0 x = B1 exactly
        let b0 = QMatrix::from_cols(&(0..3).map(|j| f3.vectors.col(j)).collect::<Vec<_>>());
        assert_eq!(b0.mul(&x).col(0), f3.vectors.col(3));
    }

    #[test]
    fn rank_deficient_prefix_is_error() {
        let cols = vec![
            vec![rint(1), rint(0)],
            vec![rint(2), rint(0)],
            vec![rint(0), rint(1)],
        ];
        let f = Frame::from_columns(&cols).unwrap();
        assert_eq!(b0_inverse_b1(&f, 2).unwrap_err(), FrameError::SingularPrefix);
    }

    #[test]
    fn orbit_of_cyclic_shift() {
        let group = PermutationGroup::cyclic(4);
        let seed = vec![rint(1), rint(-1), rint(0), rint(0)];
        let f = orbit_frame(&group, &seed, ORBIT_CAP).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.dim(), 3);
    }

    #[test]
    fn orbit_of_fixed_seed_is_singleton() {
        let group = PermutationGroup::symmetric(3);
        let seed = vec![rint(1), rint(1), rint(1)];
        let f = orbit_frame(&group, &seed, ORBIT_CAP).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn orbit_of_basis_vector_under_symmetric_group() {
        let group = PermutationGroup::symmetric(3);
        let seed = vec![rint(1), rint(0), rint(0)];
        let f = orbit_frame(&group, &seed, ORBIT_CAP).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.dim(), 3);
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let group = PermutationGroup::cyclic(6);
        let seed = vec![rint(1), rint(0), rint(0), rint(0), rint(0), rint(0)];
        assert_eq!(
            orbit_frame(&group, &seed, 3).unwrap_err(),
            FrameError::OrbitTooLarge(3)
        );
    }

    #[test]
    fn frame_csv_round_trip() {
        let f = simplex_etf(2);
        let text = write_frame_csv(&f);
        let g = parse_frame_csv(&text).unwrap();
        assert_eq!(f, g);
        assert!(parse_frame_csv("").is_err());
        assert!(parse_frame_csv("scale_sq 1\n1,2\n3").is_err());
    }
}
