//! The graph-to-identification pipeline.

use std::time::Instant;

use eutaxy::exactq::Rat;
use eutaxy::graphs::{self, Graph};
use eutaxy::identify;
use eutaxy::lattices::{self, Lattice};
use eutaxy::spectral;

use crate::report::{EigenvalueRow, IdentifiedName, PipelineReport};

#[derive(Clone, Debug, Default)]
pub struct PipelineOptions {
    /// Restrict to a single eigenvalue.
    pub eigenvalue: Option<Rat>,
    /// Skip shortest-vector enumeration (and everything built on it) above
    /// this rank; `None` enumerates everything.
    pub max_enumeration_rank: Option<usize>,
}

pub fn lattice_row(l: &Lattice, eigenvalue: &Rat, multiplicity: usize, enumerate: bool) -> EigenvalueRow {
    if !enumerate {
        return EigenvalueRow {
            eigenvalue: eigenvalue.to_string(),
            multiplicity,
            rank: l.rank(),
            min_norm_sq: None,
            kissing: None,
            strongly_eutactic: None,
            perfect: None,
            coherence_sq: None,
            identified: Vec::new(),
        };
    }
    let mv = l.minimal_vectors();
    let identified = identify::identify(l)
        .into_iter()
        .map(|m| IdentifiedName { name: m.name, certified: m.certified })
        .collect();
    EigenvalueRow {
        eigenvalue: eigenvalue.to_string(),
        multiplicity,
        rank: l.rank(),
        min_norm_sq: Some(mv.min_norm_sq.to_string()),
        kissing: Some(mv.kissing_number()),
        strongly_eutactic: Some(lattices::strong_eutaxy_check(l).is_strong()),
        perfect: Some(lattices::perfection_check(l)),
        coherence_sq: l.coherence_sq().ok().map(|c| c.to_string()),
        identified,
    }
}

/// Runs the full pipeline: rational spectrum, one lattice per eigenvalue
/// (or the selected one), geometric certificates, identification.
/// Per-eigenvalue stages run on scoped threads.
pub fn run_pipeline(g: &Graph, opts: &PipelineOptions) -> PipelineReport {
    let start = Instant::now();
    let spectrum = spectral::rational_spectrum(g);
    let selected: Vec<(Rat, usize)> = spectrum
        .entries
        .iter()
        .filter(|(l, _)| opts.eigenvalue.as_ref().is_none_or(|want| want == l))
        .cloned()
        .collect();

    let rows: Vec<EigenvalueRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|(lambda, mult)| {
                let spectrum = &spectrum;
                scope.spawn(move || {
                    let proj = spectral::eigenprojection_with_spectrum(g, lambda, spectrum)
                        .expect("eigenvalue comes from the spectrum");
                    let lattice = lattices::graph_lattice_from_projection(g, &proj)
                        .expect("projector columns are nonzero");
                    let enumerate =
                        opts.max_enumeration_rank.is_none_or(|cap| lattice.rank() <= cap);
                    lattice_row(&lattice, lambda, *mult, enumerate)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("pipeline worker")).collect()
    });

    let distance_regular = graphs::is_distance_regular(g).ok().map(|arr| arr.is_some());

    PipelineReport {
        graph: g.label.clone(),
        vertices: g.vertices(),
        distance_regular,
        irrational_degree: spectrum.residual_degree,
        rows,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
