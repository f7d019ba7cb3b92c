//! Property tests for the module invariants.

use eutaxy::exactq::{charpoly, hnf_column_basis, ldlt, rational_roots, rint, QMatrix, Rat};
use eutaxy::graphs;
use eutaxy::identify::{catalog_build, fingerprint, CatalogId};
use eutaxy::lattices::{strong_eutaxy_check, Lattice};
use eutaxy::spectral::rational_spectrum;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rat(), r * c).prop_map(move |data| {
            let mut idx = 0;
            QMatrix::from_fn(r, c, |_, _| {
                let v = data[idx].clone();
                idx += 1;
                v
            })
        })
    })
}

/// Random unimodular matrix: a short word of elementary operations.
fn unimodular(k: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec((0..k, 0..k, -2i64..=2, prop::bool::ANY), 0..12).prop_map(
        move |ops| {
            let mut u = QMatrix::identity(k);
            for (i, j, c, swap) in ops {
                if i == j {
                    continue;
                }
                if swap {
                    // swap columns i and j, negating one to keep det = ±1
                    let m = QMatrix::from_fn(k, k, |r, s| {
                        if s == i && r == j {
                            rint(1)
                        } else if s == j && r == i {
                            rint(-1)
                        } else if s != i && s != j && r == s {
                            rint(1)
                        } else {
                            rint(0)
                        }
                    });
                    u = u.mul(&m);
                } else if c != 0 {
                    // column shear: col_j += c * col_i
                    let mut m = QMatrix::identity(k);
                    m[(i, j)] = rint(c);
                    u = u.mul(&m);
                }
            }
            u
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(5)) {
        let (r, pivots, rank) = m.rref();
        let (rr, pivots2, rank2) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
        prop_assert_eq!(rank, rank2);
    }

    #[test]
    fn hnf_basis_spans_the_generators(gens in proptest::collection::vec(
        proptest::collection::vec(small_rat(), 3), 1..6)) {
        let basis = hnf_column_basis(&gens);
        // every generator has integer coordinates in the basis
        for g in &gens {
            if basis.cols() == 0 {
                prop_assert!(g.iter().all(Rat::is_zero));
                continue;
            }
            let x = basis.solve(g).expect("generator must lie in the span");
            prop_assert!(x.iter().all(Rat::is_integer));
        }
        // and appending basis columns to the generators changes nothing
        let mut extended = gens.clone();
        for j in 0..basis.cols() {
            extended.push(basis.col(j));
        }
        prop_assert_eq!(hnf_column_basis(&extended), basis);
    }

    #[test]
    fn charpoly_vanishes_at_every_rational_root(entries in
        proptest::collection::vec(-4i64..=4, 16)) {
        let m = QMatrix::from_fn(4, 4, |i, j| rint(entries[i * 4 + j]));
        let p = charpoly(&m).unwrap();
        let roots = rational_roots(&p);
        let mut total = 0usize;
        for (r, mult) in &roots {
            prop_assert!(p.eval(r).is_zero());
            total += mult;
        }
        prop_assert!(total <= p.degree());
    }

    #[test]
    fn ldlt_reconstructs_exactly(m in small_matrix(4)) {
        // build a positive definite Gram as A^T A + I
        let k = m.cols();
        let mut g = m.gram();
        for i in 0..k {
            let v = &g[(i, i)] + Rat::one();
            g[(i, i)] = v;
        }
        let (l, d) = ldlt(&g).expect("positive definite by construction");
        let dm = QMatrix::from_fn(k, k, |i, j| if i == j { d[i].clone() } else { Rat::zero() });
        prop_assert_eq!(l.mul(&dm).mul(&l.transpose()), g);
        prop_assert!(d.iter().all(|x| x > &Rat::zero()));
    }

    #[test]
    fn complement_is_an_involution(n in 1usize..10, edges in
        proptest::collection::vec((0usize..10, 0usize..10), 0..20)) {
        let edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u < n && v < n && u != v)
            .collect();
        let g = graphs::Graph::from_edges(n, &edges, "random").unwrap();
        prop_assert_eq!(graphs::complement(&graphs::complement(&g)), g);
    }

    #[test]
    fn fingerprints_are_similarity_invariant(
        ops in proptest::collection::vec((0usize..6, 0usize..6, -2i64..=2, prop::bool::ANY), 0..12),
        scale in (1i64..=9, 1i64..=9),
        which in 0usize..4,
    ) {
        // one reference lattice per rank 2..6
        let reference = match which {
            0 => catalog_build(&CatalogId::A(2)).unwrap(),
            1 => catalog_build(&CatalogId::A(3)).unwrap(),
            2 => catalog_build(&CatalogId::D(4)).unwrap(),
            _ => catalog_build(&CatalogId::ADual(5)).unwrap(),
        };
        let k = reference.rank();
        let mut u = QMatrix::identity(k);
        for (i, j, c, swap) in ops {
            let (i, j) = (i % k, j % k);
            if i == j {
                continue;
            }
            let mut m = QMatrix::identity(k);
            if swap {
                m[(i, i)] = rint(0);
                m[(j, j)] = rint(0);
                m[(j, i)] = rint(1);
                m[(i, j)] = rint(-1);
            } else {
                m[(i, j)] = rint(c);
            }
            u = u.mul(&m);
        }
        let s = Rat::new(scale.0.into(), scale.1.into());
        let transformed = u.transpose().mul(reference.gram()).mul(&u).scale(&s);
        let l = Lattice::from_gram(transformed, "transformed").unwrap();
        prop_assert_eq!(fingerprint(&l), fingerprint(&reference));
    }

    #[test]
    fn strong_eutaxy_is_basis_and_scale_invariant(u in unimodular(3), scale in (1i64..=9, 1i64..=9)) {
        let s = Rat::new(scale.0.into(), scale.1.into());
        for id in [CatalogId::Z(3), CatalogId::A(3)] {
            let l = catalog_build(&id).unwrap();
            let transformed = u.transpose().mul(l.gram()).mul(&u).scale(&s);
            let t = Lattice::from_gram(transformed, "transformed").unwrap();
            prop_assert_eq!(
                strong_eutaxy_check(&t).is_strong(),
                strong_eutaxy_check(&l).is_strong()
            );
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Spectrum comparison helper: merges closed-form (eigenvalue, multiplicity)
/// pairs and compares with the computed rational spectrum.
fn assert_spectrum_matches(g: &graphs::Graph, closed: &[(i64, usize)]) {
    let mut merged: Vec<(i64, usize)> = Vec::new();
    for &(l, m) in closed {
        if m == 0 {
            continue;
        }
        match merged.iter_mut().find(|(x, _)| *x == l) {
            Some((_, acc)) => *acc += m,
            None => merged.push((l, m)),
        }
    }
    merged.sort_by(|a, b| b.0.cmp(&a.0));
    let expected: Vec<(Rat, usize)> = merged.into_iter().map(|(l, m)| (rint(l), m)).collect();
    let s = rational_spectrum(g);
    assert_eq!(s.entries, expected, "{}", g.label);
    assert_eq!(s.residual_degree, 0, "{}", g.label);
}

#[test]
fn hamming_spectra_match_closed_form() {
    for q in 1..=7usize {
        for d in 1..=6usize {
            let Some(n) = q.checked_pow(d as u32) else { continue };
            if n > 60 {
                continue;
            }
            let g = graphs::hamming(d, q).unwrap();
            let closed: Vec<(i64, usize)> = (0..=d)
                .map(|i| {
                    (
                        ((q - 1) * d) as i64 - (q * i) as i64,
                        binomial(d, i) * (q - 1).pow(i as u32),
                    )
                })
                .collect();
            assert_spectrum_matches(&g, &closed);
        }
    }
}

#[test]
fn kneser_spectra_match_closed_form() {
    for n in 2..=12usize {
        for k in 1..=n / 2 {
            if binomial(n, k) > 60 {
                continue;
            }
            let g = graphs::kneser(n, k).unwrap();
            let closed: Vec<(i64, usize)> = (0..=k)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let value = sign * binomial(n - k - j, k - j) as i64;
                    let mult = binomial(n, j) - if j == 0 { 0 } else { binomial(n, j - 1) };
                    (value, mult)
                })
                .collect();
            assert_spectrum_matches(&g, &closed);
        }
    }
}

#[test]
fn johnson_spectra_match_closed_form() {
    for n in 2..=12usize {
        for k in 1..n {
            if binomial(n, k) > 60 {
                continue;
            }
            let g = graphs::johnson(n, k).unwrap();
            let jmax = k.min(n - k);
            let closed: Vec<(i64, usize)> = (0..=jmax)
                .map(|j| {
                    let value = ((k - j) * (n - k - j)) as i64 - j as i64;
                    let mult = binomial(n, j) - if j == 0 { 0 } else { binomial(n, j - 1) };
                    (value, mult)
                })
                .collect();
            assert_spectrum_matches(&g, &closed);
        }
    }
}

#[test]
fn product_spectra_follow_the_eigenvalue_maps() {
    let factors: Vec<graphs::Graph> = vec![
        graphs::complete(2).unwrap(),
        graphs::complete(3).unwrap(),
        graphs::cycle(4).unwrap(),
        graphs::cycle(5).unwrap(),
        graphs::petersen(),
    ];
    type Map = fn(&Rat, &Rat) -> Rat;
    let cartesian_map: Map = |a, b| a + b;
    let direct_map: Map = |a, b| a * b;
    let strong_map: Map = |a, b| (a + Rat::one()) * (b + Rat::one()) - Rat::one();
    let products: [(&str, fn(&graphs::Graph, &graphs::Graph) -> graphs::Graph, Map); 3] = [
        ("cartesian", graphs::cartesian, cartesian_map),
        ("direct", graphs::direct, direct_map),
        ("strong", graphs::strong, strong_map),
    ];
    for g1 in &factors {
        let s1 = rational_spectrum(g1);
        for g2 in &factors {
            let s2 = rational_spectrum(g2);
            for (name, build, f) in &products {
                let p = build(g1, g2);
                let sp = rational_spectrum(&p);
                // image of the rational eigenvalue pairs with multiplied
                // multiplicities
                let mut image: Vec<(Rat, usize)> = Vec::new();
                for (l1, m1) in &s1.entries {
                    for (l2, m2) in &s2.entries {
                        let v = f(l1, l2);
                        match image.iter_mut().find(|(x, _)| *x == v) {
                            Some((_, acc)) => *acc += m1 * m2,
                            None => image.push((v, m1 * m2)),
                        }
                    }
                }
                image.sort_by(|a, b| b.0.cmp(&a.0));
                if s1.residual_degree == 0 && s2.residual_degree == 0 {
                    assert_eq!(
                        sp.entries, image,
                        "{name}({}, {})",
                        g1.label, g2.label
                    );
                } else {
                    // irrational factor pairs may contribute extra rational
                    // products, so the image embeds with multiplicity
                    for (v, m) in &image {
                        let found = sp.multiplicity_of(v).unwrap_or(0);
                        assert!(
                            found >= *m,
                            "{name}({}, {}): eigenvalue {v} has {found} < {m}",
                            g1.label,
                            g2.label
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn named_graphs_are_regular_and_distance_regular_where_stated() {
    // (graph, expect distance-regular)
    let rows: Vec<(graphs::Graph, bool)> = vec![
        (graphs::complete(3).unwrap(), true),
        (graphs::hamming(2, 3).unwrap(), true),
        (graphs::petersen(), true),
        (graphs::line_graph(&graphs::petersen()).unwrap(), true),
        (graphs::clebsch(), true),
        (graphs::complement(&graphs::clebsch()), true),
        (graphs::shrikhande(), true), // strongly regular, hence DR; not distance transitive
        (graphs::complement(&graphs::shrikhande()), true),
        (graphs::schlafli(), true),
        (graphs::complement(&graphs::schlafli()), true),
        (graphs::gosset(), true),
    ];
    for (g, expect_dr) in rows {
        assert!(graphs::is_regular(&g).is_some(), "{} must be regular", g.label);
        if expect_dr {
            assert!(
                graphs::is_distance_regular(&g).unwrap().is_some(),
                "{} must be distance regular",
                g.label
            );
        }
    }
    // the disconnected table row is regular too
    assert!(graphs::is_regular(&graphs::empty_graph(4).unwrap()).is_some());
}

#[test]
fn is_similar_is_an_equivalence_on_catalog_triples() {
    use eutaxy::identify::is_similar;
    let l1 = catalog_build(&CatalogId::A(3)).unwrap();
    let l2 = {
        // A3 in a rotated, scaled disguise
        let u = QMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[1, 1, 1]]);
        Lattice::from_gram(
            u.transpose().mul(l1.gram()).mul(&u).scale(&Rat::new(4.into(), 9.into())),
            "disguised A3",
        )
        .unwrap()
    };
    let l3 = catalog_build(&CatalogId::D(3)).unwrap();
    // reflexive
    for l in [&l1, &l2, &l3] {
        assert!(is_similar(l, l).is_some());
    }
    // symmetric
    assert!(is_similar(&l1, &l2).is_some());
    assert!(is_similar(&l2, &l1).is_some());
    // transitive
    assert!(is_similar(&l2, &l3).is_some());
    assert!(is_similar(&l1, &l3).is_some());
    // and a non-example stays non-similar in both directions
    let z3 = catalog_build(&CatalogId::Z(3)).unwrap();
    assert!(is_similar(&z3, &l1).is_none());
    assert!(is_similar(&l1, &z3).is_none());
}
