//! Machine-readable reports. Field order is fixed by the struct layout so
//! parse/serialize round-trips are byte-identical.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifiedName {
    pub name: String,
    pub certified: bool,
}

/// One record per rational eigenvalue. Enumeration-dependent fields are
/// null when shortest-vector enumeration was skipped (rank cap).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueRow {
    pub eigenvalue: String,
    pub multiplicity: usize,
    pub rank: usize,
    pub min_norm_sq: Option<String>,
    pub kissing: Option<usize>,
    pub strongly_eutactic: Option<bool>,
    pub perfect: Option<bool>,
    pub coherence_sq: Option<String>,
    pub identified: Vec<IdentifiedName>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub graph: String,
    pub vertices: usize,
    /// None when the check does not apply (disconnected graph).
    pub distance_regular: Option<bool>,
    pub irrational_degree: usize,
    pub rows: Vec<EigenvalueRow>,
    pub elapsed_ms: u64,
}

impl PipelineReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Aligned text rendering of the per-eigenvalue table.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "graph {} on {} vertices (distance regular: {}, irrational degree {})\n",
            self.graph,
            self.vertices,
            match self.distance_regular {
                Some(true) => "yes",
                Some(false) => "no",
                None => "n/a",
            },
            self.irrational_degree,
        );
        out.push_str(&format!(
            "{:>10} {:>5} {:>5} {:>10} {:>8} {:>8} {:>8} {:>14}  {}\n",
            "eigenvalue", "mult", "rank", "min|x|^2", "kissing", "str.eut", "perfect", "coherence^2",
            "identified"
        ));
        for r in &self.rows {
            let opt = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".into());
            let optb = |o: &Option<bool>| match o {
                Some(true) => "yes".to_string(),
                Some(false) => "no".to_string(),
                None => "-".to_string(),
            };
            let names: Vec<String> = r
                .identified
                .iter()
                .map(|m| {
                    if m.certified {
                        m.name.clone()
                    } else {
                        format!("{}?", m.name)
                    }
                })
                .collect();
            out.push_str(&format!(
                "{:>10} {:>5} {:>5} {:>10} {:>8} {:>8} {:>8} {:>14}  {}\n",
                r.eigenvalue,
                r.multiplicity,
                r.rank,
                opt(&r.min_norm_sq),
                r.kissing.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
                optb(&r.strongly_eutactic),
                optb(&r.perfect),
                opt(&r.coherence_sq),
                if names.is_empty() { "-".to_string() } else { names.join(", ") },
            ));
        }
        out
    }
}

/// Report for `identify-gram` and the lattice part of `frame`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub rank: usize,
    pub min_norm_sq: String,
    pub kissing: usize,
    pub strongly_eutactic: bool,
    pub perfect: bool,
    pub coherence_sq: Option<String>,
    pub well_rounded: bool,
    pub identified: Vec<IdentifiedName>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameReport {
    pub vectors: usize,
    pub ambient_dim: usize,
    pub dim: usize,
    pub rational: bool,
    pub tight: Option<bool>,
    pub gamma: Option<String>,
    pub uniform: Option<bool>,
    pub equiangular: Option<bool>,
    pub coherence_sq: Option<String>,
    /// Only for exact (rational) input.
    pub lattice: Option<LatticeReport>,
    /// Only for numeric input: the non-discreteness heuristic verdict.
    pub discreteness: Option<String>,
    pub notes: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let report = PipelineReport {
            graph: "petersen".into(),
            vertices: 10,
            distance_regular: Some(true),
            irrational_degree: 0,
            rows: vec![EigenvalueRow {
                eigenvalue: "-2".into(),
                multiplicity: 4,
                rank: 4,
                min_norm_sq: Some("2/5".into()),
                kissing: Some(10),
                strongly_eutactic: Some(true),
                perfect: Some(false),
                coherence_sq: Some("1/16".into()),
                identified: vec![IdentifiedName { name: "A4*".into(), certified: true }],
            }],
            elapsed_ms: 12,
        };
        let text = report.to_json();
        let parsed: PipelineReport = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
        assert_eq!(parsed, report);
    }
}
