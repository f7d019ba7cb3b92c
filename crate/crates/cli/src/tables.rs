//! Survey tables of graph-derived lattices, regenerated and diffed against
//! their expected identifications.

use eutaxy::exactq::{rint, Rat};
use eutaxy::graphs;
use eutaxy::identify;
use eutaxy::lattices;
use eutaxy::spectral;
use serde::{Deserialize, Serialize};

/// Expected row of the main survey table. The generic families are pinned
/// to concrete instances (disconnected graph at n = 4; complete graph at
/// n = 3, the largest n where the projection lattice matches the stated
/// root-lattice name exactly).
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub graph_expr: &'static str,
    pub distance_transitive: bool,
    pub vertices: usize,
    pub eigenvalue: i64,
    pub multiplicity: usize,
    pub expected: &'static str,
}

pub fn table1_rows() -> Vec<Table1Row> {
    let row = |graph_expr, distance_transitive, vertices, eigenvalue, multiplicity, expected| {
        Table1Row { graph_expr, distance_transitive, vertices, eigenvalue, multiplicity, expected }
    };
    vec![
        row("empty(4)", false, 4, 0, 4, "Z4"),
        row("complete(3)", true, 3, -1, 2, "A2"),
        row("hamming(2,3)", true, 9, 1, 4, "A2xA2"),
        row("petersen", true, 10, -2, 4, "A4*"),
        row("petersen", true, 10, 1, 5, "A5^2"),
        row("line_graph(petersen)", true, 15, -1, 4, "A4*"),
        row("line_graph(petersen)", true, 15, -2, 5, "A5^3"),
        row("clebsch", true, 16, -3, 5, "D5*"),
        row("complement(clebsch)", true, 16, 2, 5, "D5*"),
        row("shrikhande", false, 16, 2, 6, "D6+"),
        row("complement(shrikhande)", false, 16, -3, 6, "D6+"),
        row("schlafli", true, 27, 4, 6, "E6*"),
        row("complement(schlafli)", true, 27, -5, 6, "E6*"),
        row("gosset", true, 56, 9, 7, "E7*"),
    ]
}

/// Result of regenerating one table row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRowResult {
    pub graph: String,
    pub eigenvalue: String,
    pub multiplicity: usize,
    pub rank: usize,
    pub expected: String,
    pub identified: Vec<String>,
    pub strongly_eutactic: Option<bool>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<TableRowResult>,
    pub all_ok: bool,
}

impl TableReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:<28} {:>10} {:>5} {:>5} {:>9} {:>8}  {}\n",
            "graph", "eigenvalue", "mult", "rank", "str.eut", "expected", "identified"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<28} {:>10} {:>5} {:>5} {:>9} {:>8}  {} [{}]\n",
                r.graph,
                r.eigenvalue,
                r.multiplicity,
                r.rank,
                match r.strongly_eutactic {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                },
                r.expected,
                r.identified.join(", "),
                if r.ok { "ok" } else { "MISMATCH" },
            ));
        }
        out.push_str(if self.all_ok { "all rows match\n" } else { "MISMATCHES PRESENT\n" });
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}

fn check_row(
    g: &graphs::Graph,
    lambda: &Rat,
    expected_mult: usize,
    expected_name: Option<&str>,
    verify_eutaxy: bool,
) -> TableRowResult {
    let spectrum = spectral::rational_spectrum(g);
    let mult = spectrum.multiplicity_of(lambda).unwrap_or(0);
    let proj = spectral::eigenprojection_with_spectrum(g, lambda, &spectrum)
        .expect("table eigenvalues exist");
    let lattice =
        lattices::graph_lattice_from_projection(g, &proj).expect("projection is nonzero");
    let (identified, strongly_eutactic) = if verify_eutaxy {
        let names: Vec<String> = identify::identify(&lattice)
            .into_iter()
            .filter(|m| m.certified)
            .map(|m| m.name)
            .collect();
        let strong = lattices::strong_eutaxy_check(&lattice).is_strong();
        (names, Some(strong))
    } else {
        (Vec::new(), None)
    };
    let name_ok = match expected_name {
        Some(name) => identified.iter().any(|n| n == name),
        None => true,
    };
    let eutaxy_ok = !verify_eutaxy || strongly_eutactic == Some(true);
    let ok = mult == expected_mult && name_ok && eutaxy_ok;
    TableRowResult {
        graph: g.label.clone(),
        eigenvalue: lambda.to_string(),
        multiplicity: mult,
        rank: lattice.rank(),
        expected: expected_name.unwrap_or("-").to_string(),
        identified,
        strongly_eutactic,
        ok,
    }
}

/// Regenerates the 14-row survey table and diffs each row against its
/// expected lattice name, multiplicity, and strong eutaxy.
pub fn run_table1() -> TableReport {
    let mut rows = Vec::new();
    for fixture in table1_rows() {
        let g = crate::dsl::parse_graph(fixture.graph_expr).expect("fixture expressions parse");
        assert_eq!(g.vertices(), fixture.vertices, "{}", fixture.graph_expr);
        let mut r = check_row(
            &g,
            &rint(fixture.eigenvalue),
            fixture.multiplicity,
            Some(fixture.expected),
            true,
        );
        // the distance-transitivity column is verified through its
        // necessary combinatorial condition where it applies
        if fixture.distance_transitive {
            let dr = graphs::is_distance_regular(&g)
                .map(|a| a.is_some())
                .unwrap_or(false);
            r.ok &= dr;
        }
        rows.push(r);
    }
    let all_ok = rows.iter().all(|r| r.ok);
    TableReport { rows, all_ok }
}

/// Expected identifications for the Johnson J(n,2) family at eigenvalue
/// n-4; eigenvalue -2 rows carry a name only for n = 4, 5.
fn johnson_name(n: usize) -> Option<&'static str> {
    match n {
        4 => Some("Z3"),
        5 => Some("A4*"),
        6 => Some("A5^3"),
        7 => Some("A6*"),
        8 => Some("E7*"),
        9 => Some("A8*"),
        10 => Some("A9^5"),
        _ => None,
    }
}

fn johnson_minus_two_name(n: usize) -> Option<&'static str> {
    match n {
        4 => Some("A2"),
        5 => Some("A5^2"),
        _ => None,
    }
}

/// Ranks at and below which the -2 rows get full certificates; beyond it
/// only the rank is reported.
pub const TABLE2_ENUMERATION_RANK_CAP: usize = 14;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TableError {
    #[error("table2 supports n_max in 4..=10, got {0}")]
    Range(usize),
}

/// Regenerates the Johnson J(n,2) table for n = 4..=n_max. Both eigenvalue
/// rows are emitted per n; the -2 rows above the rank cap report rank only.
pub fn run_table2(n_max: usize) -> Result<TableReport, TableError> {
    if !(4..=10).contains(&n_max) {
        return Err(TableError::Range(n_max));
    }
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let g = graphs::johnson(n, 2).expect("valid parameters");
        let lambda1 = rint(n as i64 - 4);
        rows.push(check_row(&g, &lambda1, n - 1, johnson_name(n), true));

        let lambda2 = rint(-2);
        let mult2 = n * (n - 3) / 2;
        let verify = mult2 <= TABLE2_ENUMERATION_RANK_CAP;
        rows.push(check_row(&g, &lambda2, mult2, johnson_minus_two_name(n), verify));
    }
    let all_ok = rows.iter().all(|r| r.ok);
    Ok(TableReport { rows, all_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table2_small() {
        let report = run_table2(5).unwrap();
        assert!(report.all_ok, "{}", report.to_text());
        assert_eq!(report.rows.len(), 4);
        assert!(run_table2(12).is_err());
        assert!(run_table2(3).is_err());
    }

    #[test]
    fn table1_spot_row() {
        // full table runs in the acceptance suite; spot-check one row here
        let g = crate::dsl::parse_graph("petersen").unwrap();
        let r = check_row(&g, &rint(-2), 4, Some("A4*"), true);
        assert!(r.ok, "{r:?}");
    }
}
