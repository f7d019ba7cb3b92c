//! Frame analysis, gram identification, and compressed-sensing commands.

use eutaxy::frames::{self, DiscretenessVerdict, NumericOptions};
use eutaxy::identify;
use eutaxy::lattices::{self, Lattice};
use eutaxy::steinercs;

use crate::report::{FrameReport, IdentifiedName, LatticeReport};

pub fn lattice_report(l: &Lattice) -> LatticeReport {
    let mv = l.minimal_vectors();
    LatticeReport {
        rank: l.rank(),
        min_norm_sq: mv.min_norm_sq.to_string(),
        kissing: mv.kissing_number(),
        strongly_eutactic: lattices::strong_eutaxy_check(l).is_strong(),
        perfect: lattices::perfection_check(l),
        coherence_sq: l.coherence_sq().ok().map(|c| c.to_string()),
        well_rounded: l.is_well_rounded(),
        identified: identify::identify(l)
            .into_iter()
            .map(|m| IdentifiedName { name: m.name, certified: m.certified })
            .collect(),
    }
}

/// Analyzes an exact rational frame file.
pub fn frame_report_exact(text: &str) -> Result<FrameReport, frames::FrameError> {
    let frame = frames::parse_frame_csv(text)?;
    let analysis = frames::analyze(&frame);
    let mut notes = Vec::new();
    let lattice = match frames::lattice_from_frame(&frame) {
        Ok(l) => {
            if analysis.is_tight {
                match frames::verify_rationality_theorem(&frame) {
                    Ok(true) => notes.push("tight-frame rationality identity verified".into()),
                    Ok(false) => notes.push("tight-frame rationality identity FAILED".into()),
                    Err(e) => notes.push(format!("rationality identity not checked: {e}")),
                }
            }
            Some(lattice_report(&l))
        }
        Err(e) => {
            notes.push(format!("no lattice: {e}"));
            None
        }
    };
    Ok(FrameReport {
        vectors: frame.len(),
        ambient_dim: frame.ambient_dim(),
        dim: analysis.dim,
        rational: frame.is_rational(),
        tight: Some(analysis.is_tight),
        gamma: analysis.gamma.map(|g| g.to_string()),
        uniform: Some(analysis.is_uniform),
        equiangular: Some(analysis.is_equiangular),
        coherence_sq: analysis.coherence_sq.map(|c| c.to_string()),
        lattice,
        discreteness: None,
        notes,
    })
}

/// Analyzes a numeric frame file: rational-Gram reconstruction plus the
/// non-discreteness heuristic.
pub fn frame_report_numeric(text: &str, opts: &NumericOptions) -> Result<FrameReport, String> {
    let mut columns: Vec<Vec<f64>> = Vec::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<f64>, _> =
            line.split(',').map(|t| t.trim().parse::<f64>()).collect();
        rows.push(row.map_err(|e| format!("bad numeric entry: {e}"))?);
    }
    if rows.is_empty() {
        return Err("no numeric rows".into());
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err("ragged numeric rows".into());
    }
    for j in 0..width {
        columns.push(rows.iter().map(|r| r[j]).collect());
    }

    let rational = frames::is_rational_numeric(&columns, opts);
    let verdict = frames::detect_non_discreteness(&columns, 500);
    let mut notes = Vec::new();
    if !rational {
        notes.push(
            "inner products are not rational at this precision; a tight frame with \
             irrational inner products cannot span a discrete lattice"
                .into(),
        );
    }
    let discreteness = Some(match verdict {
        DiscretenessVerdict::LikelyNonDiscrete => "likely non-discrete".to_string(),
        DiscretenessVerdict::NormsStabilized { floor } => {
            format!("no evidence of non-discreteness; norms stabilized at {floor:.6}")
        }
    });
    Ok(FrameReport {
        vectors: columns.len(),
        ambient_dim: rows.len(),
        dim: 0,
        rational,
        tight: None,
        gamma: None,
        uniform: None,
        equiangular: None,
        coherence_sq: None,
        lattice: None,
        discreteness,
        notes,
    })
}

/// Identifies a lattice given by a Gram matrix in the plain text format.
pub fn identify_gram_report(text: &str) -> Result<LatticeReport, String> {
    let gram = lattices::parse_gram(text).map_err(|e| e.to_string())?;
    let l = Lattice::from_gram(gram, "gram-import").map_err(|e| e.to_string())?;
    Ok(lattice_report(&l))
}

/// Builds the Steiner ETF for order v and runs the recovery experiment.
pub fn run_cs(
    v: usize,
    config: &steinercs::ExperimentConfig,
) -> Result<(steinercs::MeasurementMatrix, steinercs::ExperimentTable), String> {
    let sts = steinercs::steiner_triple_system(v).map_err(|e| e.to_string())?;
    let etf = steinercs::steiner_etf(&sts).map_err(|e| e.to_string())?;
    let table = steinercs::run_experiment(&etf, config);
    Ok((etf, table))
}
