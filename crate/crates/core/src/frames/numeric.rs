//! Numeric frame ingestion (floating point to exact) and the discreteness
//! heuristic.

use crate::exactq::{Int, QMatrix, Rat};

/// Controls for rational reconstruction of numeric input.
#[derive(Clone, Debug)]
pub struct NumericOptions {
    /// Largest denominator a reconstructed rational may use.
    pub max_denominator: u64,
    /// Absolute tolerance for accepting a reconstruction.
    pub tolerance: f64,
}

impl Default for NumericOptions {
    /// The tolerance sits far below 1/max_denominator^2, so a generic
    /// irrational's best convergent under the cap still gets rejected.
    fn default() -> Self {
        NumericOptions { max_denominator: 10_000, tolerance: 1e-10 }
    }
}

/// Best rational approximation with bounded denominator, via continued
/// fractions; `None` when no convergent meets the tolerance.
fn reconstruct_rational(x: f64, opts: &NumericOptions) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0) = (1i128, 0i128);
    let (mut p1, mut q1) = (x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= opts.tolerance {
            return Some(Rat::new(Int::from(p1), Int::from(q1)));
        }
        if frac.abs() < f64::EPSILON {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        let (p2, q2) = (a as i128 * p1 + p0, a as i128 * q1 + q0);
        if q2 > opts.max_denominator as i128 {
            break;
        }
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
    }
    let approx = p1 as f64 / q1 as f64;
    ((approx - x).abs() <= opts.tolerance).then(|| Rat::new(Int::from(p1), Int::from(q1)))
}

/// Attempts to recover the exact rational Gram matrix of a numeric frame,
/// up to a constant multiple: the float Gram is normalized by its largest
/// absolute entry and each ratio reconstructed by continued fractions.
/// Returns the *normalized* Gram; `None` when any entry resists
/// reconstruction. Heuristic by nature.
pub fn reconstruct_rational_gram(columns: &[Vec<f64>], opts: &NumericOptions) -> Option<QMatrix> {
    let n = columns.len();
    if n == 0 {
        return None;
    }
    let mut gram = vec![vec![0f64; n]; n];
    let mut largest = 0f64;
    for i in 0..n {
        for j in 0..n {
            let ip: f64 = columns[i].iter().zip(&columns[j]).map(|(a, b)| a * b).sum();
            gram[i][j] = ip;
            largest = largest.max(ip.abs());
        }
    }
    if largest == 0.0 {
        return None;
    }
    let mut out = QMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let r = reconstruct_rational(gram[i][j] / largest, opts)?;
            out[(i, j)] = r;
        }
    }
    Some(out)
}

/// True when the numeric frame has (up to a constant multiple) a rational
/// Gram matrix that survives reconstruction at the given precision.
pub fn is_rational_numeric(columns: &[Vec<f64>], opts: &NumericOptions) -> bool {
    reconstruct_rational_gram(columns, opts).is_some()
}

/// Verdict of the non-discreteness heuristic. Never a proof: the heuristic
/// greedily shortens integer combinations and watches whether norms keep
/// collapsing toward zero or stabilize at a floor.
#[derive(Clone, Debug, PartialEq)]
pub enum DiscretenessVerdict {
    /// Norms fell below the collapse threshold without reaching zero.
    LikelyNonDiscrete,
    /// No evidence of non-discreteness; norms stabilized at this floor.
    NormsStabilized { floor: f64 },
}

/// Gauss-style greedy pair reduction on floating-point generators: each
/// round subtracts rounded projections and keeps the shortest nonzero
/// vectors. If the shortest norm keeps shrinking below `collapse_eps`
/// (relative to the initial scale) the span is likely non-discrete.
pub fn detect_non_discreteness(columns: &[Vec<f64>], iterations: usize) -> DiscretenessVerdict {
    let mut vecs: Vec<Vec<f64>> = columns.to_vec();
    let norm_sq = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>();
    let initial = vecs.iter().map(|v| norm_sq(v)).fold(0.0f64, f64::max).max(1e-300);
    let collapse_eps = 1e-18 * initial;

    let mut floor = f64::INFINITY;
    for _ in 0..iterations {
        let mut changed = false;
        for i in 0..vecs.len() {
            for j in 0..vecs.len() {
                if i == j {
                    continue;
                }
                let denom = norm_sq(&vecs[j]);
                if denom < collapse_eps {
                    continue;
                }
                let ip: f64 = vecs[i].iter().zip(&vecs[j]).map(|(a, b)| a * b).sum();
                let q = (ip / denom).round();
                if q == 0.0 {
                    continue;
                }
                let mut reduced = vecs[i].clone();
                for (r, b) in reduced.iter_mut().zip(&vecs[j]) {
                    *r -= q * b;
                }
                if norm_sq(&reduced) < norm_sq(&vecs[i]) - 1e-30 {
                    vecs[i] = reduced;
                    changed = true;
                }
            }
        }
        let min_nonzero = vecs
            .iter()
            .map(|v| norm_sq(v))
            .filter(|&n| n > collapse_eps)
            .fold(f64::INFINITY, f64::min);
        if min_nonzero < 1e-12 * initial {
            return DiscretenessVerdict::LikelyNonDiscrete;
        }
        floor = min_nonzero;
        if !changed {
            break;
        }
    }
    DiscretenessVerdict::NormsStabilized { floor: floor.sqrt() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;
    use num_traits::ToPrimitive;

    #[test]
    fn reconstructs_simple_rationals() {
        let opts = NumericOptions::default();
        assert_eq!(reconstruct_rational(0.5, &opts), Some(rat(1, 2)));
        assert_eq!(reconstruct_rational(-2.0 / 3.0, &opts), Some(rat(-2, 3)));
        assert_eq!(reconstruct_rational(3.0, &opts), Some(rat(3, 1)));
    }

    #[test]
    fn rejects_irrational_targets() {
        let opts = NumericOptions { max_denominator: 10_000, tolerance: 1e-12 };
        assert_eq!(reconstruct_rational(std::f64::consts::SQRT_2 / 2.0, &opts), None);
    }

    #[test]
    fn gram_reconstruction_round_trip() {
        // simplex frame rendered to 12 decimal digits
        let f = crate::frames::simplex_etf(3);
        let scale = 12.0f64.sqrt().recip();
        let cols: Vec<Vec<f64>> = (0..f.len())
            .map(|j| {
                f.vectors
                    .col(j)
                    .iter()
                    .map(|r| {
                        let x = r.to_f64().unwrap() * scale;
                        format!("{x:.12}").parse::<f64>().unwrap()
                    })
                    .collect()
            })
            .collect();
        let opts = NumericOptions { max_denominator: 1000, tolerance: 1e-8 };
        let g = reconstruct_rational_gram(&cols, &opts).expect("rational gram");
        // normalized by the largest entry (the diagonal): off-diagonal -1/3
        assert_eq!(g[(0, 0)], rat(1, 1));
        assert_eq!(g[(0, 1)], rat(-1, 3));
        assert!(is_rational_numeric(&cols, &opts));
    }

    #[test]
    fn irrational_gram_fails_reconstruction() {
        let s = std::f64::consts::SQRT_2;
        let cols = vec![vec![1.0, 0.0], vec![s / 2.0, s / 2.0]];
        let opts = NumericOptions { max_denominator: 10_000, tolerance: 1e-12 };
        assert!(!is_rational_numeric(&cols, &opts));
    }

    #[test]
    fn dense_subgroup_of_the_line() {
        let cols = vec![vec![1.0], vec![std::f64::consts::SQRT_2]];
        assert_eq!(detect_non_discreteness(&cols, 200), DiscretenessVerdict::LikelyNonDiscrete);
    }

    #[test]
    fn rational_subgroup_of_the_line_stabilizes() {
        let cols = vec![vec![1.0], vec![3.0 / 7.0]];
        match detect_non_discreteness(&cols, 200) {
            DiscretenessVerdict::NormsStabilized { floor } => {
                assert!((floor - 1.0 / 7.0).abs() < 1e-9, "floor = {floor}");
            }
            other => panic!("expected stabilization, got {other:?}"),
        }
    }

    #[test]
    fn simplex_frame_shows_no_collapse() {
        let f = crate::frames::simplex_etf(3);
        let scale = 12.0f64.sqrt().recip();
        let cols: Vec<Vec<f64>> = (0..f.len())
            .map(|j| f.vectors.col(j).iter().map(|r| r.to_f64().unwrap() * scale).collect())
            .collect();
        let exact_min = crate::frames::lattice_from_frame(&f).unwrap().min_norm_sq();
        match detect_non_discreteness(&cols, 500) {
            DiscretenessVerdict::NormsStabilized { floor } => {
                let expected = exact_min.to_f64().unwrap().sqrt();
                assert!(floor >= expected - 1e-9, "floor {floor} vs |L| {expected}");
            }
            other => panic!("expected stabilization, got {other:?}"),
        }
    }
}
