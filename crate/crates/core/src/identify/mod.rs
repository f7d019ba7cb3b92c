//! Catalog identification of lattices via similarity-invariant
//! fingerprints plus explicit isometry search.

mod catalog;
mod similar;

pub use catalog::{catalog_build, CatalogError, CatalogId};
pub use similar::{is_similar, SimilarityWitness};

use std::sync::OnceLock;

use crate::exactq::Rat;
use crate::lattices::{enumerate_up_to, Lattice};

/// Isometry search is attempted only up to this kissing number; beyond it,
/// identification reports fingerprint-only matches with `certified: false`.
pub const ISOMETRY_KISSING_LIMIT: usize = 256;

/// Similarity-invariant signature: every field is unchanged under scaling
/// and isometry (norm levels are stored relative to the minimum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFingerprint {
    pub rank: usize,
    pub kissing_number: usize,
    /// det(gram) / |L|^(2 rank), exact.
    pub normalized_det: Rat,
    /// First three norm levels as (level / |L|^2, vector count).
    pub shell_histogram: Vec<(Rat, usize)>,
}

/// Computes the fingerprint; the histogram enumerates shells with a growing
/// radius until three norm levels are seen.
pub fn fingerprint(l: &Lattice) -> LatticeFingerprint {
    let rank = l.rank();
    let mv = l.minimal_vectors();
    let min = mv.min_norm_sq.clone();
    let mut min_pow = Rat::from_integer(1.into());
    for _ in 0..rank {
        min_pow *= &min;
    }
    let normalized_det = l.det_gram() / min_pow;

    let mut factor = Rat::from_integer(3.into());
    let shell_histogram = loop {
        let bound = &min * &factor;
        let shells = enumerate_up_to(l.gram(), &bound);
        let mut histogram: Vec<(Rat, usize)> = Vec::new();
        for (_, norm) in &shells {
            let rel = norm / &min;
            match histogram.last_mut() {
                Some((level, count)) if *level == rel => *count += 1,
                _ => histogram.push((rel, 1)),
            }
        }
        if histogram.len() >= 3 {
            histogram.truncate(3);
            break histogram;
        }
        factor *= Rat::from_integer(2.into());
    };

    LatticeFingerprint {
        rank,
        kissing_number: mv.kissing_number(),
        normalized_det,
        shell_histogram,
    }
}

/// A confirmed catalog identification. `certified` is true when an explicit
/// similarity witness was found; fingerprint-only matches (kissing number
/// beyond the isometry search limit) report false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentifyMatch {
    pub name: String,
    pub certified: bool,
}

fn standard_catalog() -> &'static Vec<(String, Lattice)> {
    static CATALOG: OnceLock<Vec<(String, Lattice)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut ids: Vec<CatalogId> = Vec::new();
        for n in 1..=10 {
            ids.push(CatalogId::Z(n));
        }
        for n in 2..=9 {
            ids.push(CatalogId::A(n));
            ids.push(CatalogId::ADual(n));
            for r in 2..=n {
                if (n + 1) % r == 0 {
                    ids.push(CatalogId::AR(n, r));
                }
            }
        }
        for n in 4..=9 {
            ids.push(CatalogId::D(n));
            ids.push(CatalogId::DDual(n));
        }
        ids.push(CatalogId::DPlus(6));
        ids.push(CatalogId::DPlus(8));
        ids.extend([
            CatalogId::E6,
            CatalogId::E6Dual,
            CatalogId::E7,
            CatalogId::E7Dual,
            CatalogId::E8,
        ]);
        let mut entries: Vec<(String, Lattice)> = ids
            .iter()
            .map(|id| (id.name(), catalog_build(id).expect("standard catalog parameters")))
            .collect();
        // tensor composite used by the Hamming-graph examples
        let a2 = catalog_build(&CatalogId::A(2)).expect("A2");
        entries.push(("A2xA2".into(), a2.tensor(&a2)));
        entries
    })
}

/// Names of lattices in the identification catalog, in registry order.
pub fn catalog_names() -> Vec<String> {
    standard_catalog().iter().map(|(n, _)| n.clone()).collect()
}

/// Builds a registered catalog lattice by display name (e.g. "A5^2").
pub fn catalog_lattice_by_name(name: &str) -> Option<&'static Lattice> {
    standard_catalog().iter().find(|(n, _)| n == name).map(|(_, l)| l)
}

/// Identifies `l` against the standard catalog: rank, kissing number,
/// normalized determinant and shell histogram filter the candidates, then
/// an explicit similarity search confirms each survivor.
pub fn identify(l: &Lattice) -> Vec<IdentifyMatch> {
    let rank = l.rank();
    let mut out = Vec::new();
    let mut fp: Option<LatticeFingerprint> = None;
    for (name, entry) in standard_catalog() {
        if entry.rank() != rank {
            continue;
        }
        if entry.kissing_number() != l.kissing_number() {
            continue;
        }
        let fp = fp.get_or_insert_with(|| fingerprint(l));
        let entry_fp = fingerprint(entry);
        if *fp != entry_fp {
            continue;
        }
        if fp.kissing_number > ISOMETRY_KISSING_LIMIT {
            out.push(IdentifyMatch { name: name.clone(), certified: false });
        } else if is_similar(l, entry).is_some() {
            out.push(IdentifyMatch { name: name.clone(), certified: true });
        }
    }
    out
}

/// Convenience: certified catalog names only.
pub fn identified_names(l: &Lattice) -> Vec<String> {
    identify(l).into_iter().filter(|m| m.certified).map(|m| m.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, rint, QMatrix};
    use crate::graphs;
    use crate::lattices::graph_lattice;

    #[test]
    fn fingerprint_of_cubic() {
        let z2 = catalog_build(&CatalogId::Z(2)).unwrap();
        let fp = fingerprint(&z2);
        assert_eq!(fp.rank, 2);
        assert_eq!(fp.kissing_number, 4);
        assert_eq!(fp.normalized_det, rint(1));
        assert_eq!(
            fp.shell_histogram,
            vec![(rint(1), 4), (rint(2), 4), (rint(4), 4)]
        );
    }

    #[test]
    fn fingerprints_are_scale_invariant() {
        let a2 = catalog_build(&CatalogId::A(2)).unwrap();
        let scaled = Lattice::from_gram(a2.gram().scale(&rat(7, 5)), "scaled").unwrap();
        assert_eq!(fingerprint(&a2), fingerprint(&scaled));
    }

    #[test]
    fn identify_cubic_lattice() {
        let z3 = catalog_build(&CatalogId::Z(3)).unwrap();
        let names: Vec<String> = identify(&z3).into_iter().map(|m| m.name).collect();
        assert!(names.contains(&"Z3".to_string()), "got {names:?}");
    }

    #[test]
    fn identify_petersen_lattices() {
        let l = graph_lattice(&graphs::petersen(), &rint(-2)).unwrap();
        let names = identified_names(&l);
        assert!(names.contains(&"A4*".to_string()), "got {names:?}");

        let l = graph_lattice(&graphs::petersen(), &rint(1)).unwrap();
        let names = identified_names(&l);
        assert!(names.contains(&"A5^2".to_string()), "got {names:?}");
    }

    #[test]
    fn identify_rejects_wrong_rank() {
        let z2 = catalog_build(&CatalogId::Z(2)).unwrap();
        let a3 = catalog_build(&CatalogId::A(3)).unwrap();
        assert!(is_similar(&z2, &a3).is_none());
    }

    #[test]
    fn complete_graph_lattice_is_dual_root() {
        // columns of I - J/n span the dual of A_{n-1} (projection of the
        // integer lattice onto the hyperplane)
        let l = graph_lattice(&graphs::complete(4).unwrap(), &rint(-1)).unwrap();
        let names = identified_names(&l);
        assert!(names.contains(&"A3*".to_string()), "got {names:?}");
        assert!(!names.contains(&"A3".to_string()), "got {names:?}");
    }

    #[test]
    fn identity_gram_identifies() {
        let l = Lattice::from_gram(QMatrix::identity(4), "gram-import").unwrap();
        let names = identified_names(&l);
        assert!(names.contains(&"Z4".to_string()));
    }
}
