//! Similarity testing by backtracking over short vectors.

use num_traits::{One, Signed, Zero};

use crate::exactq::{Int, QMatrix, Rat};
use crate::lattices::{enumerate_up_to, Lattice};

/// Witness of similarity L1 = alpha * U * L2: the exact squared scale and a
/// unimodular coordinate map M with Gram1 = scale_sq * M^T Gram2 M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityWitness {
    pub scale_sq: Rat,
    pub map: QMatrix,
}

impl SimilarityWitness {
    pub fn verify(&self, l1: &Lattice, l2: &Lattice) -> bool {
        if !self.map.is_integer() || !self.map.det().abs().is_one() {
            return false;
        }
        let mapped = self.map.transpose().mul(l2.gram()).mul(&self.map).scale(&self.scale_sq);
        mapped == *l1.gram()
    }
}

/// Decides similarity (equality up to scale and isometry) and returns a
/// witness. The search is complete: the source frame is a maximal
/// independent set of minimal vectors (or the basis itself when the minimal
/// vectors do not span), candidate images are enumerated by exact norm, and
/// every inner-product-consistent assignment is tested for extending to a
/// unimodular map between the lattices.
pub fn is_similar(l1: &Lattice, l2: &Lattice) -> Option<SimilarityWitness> {
    let k = l1.rank();
    if k != l2.rank() {
        return None;
    }
    let scale_sq = l1.min_norm_sq() / l2.min_norm_sq();
    if l1.kissing_number() != l2.kissing_number() {
        return None;
    }

    // Source frame in l1 coordinates with exact Gram targets.
    let source = source_frame(l1);
    let g1 = l1.gram();
    let target = QMatrix::from_fn(k, k, |i, j| form(g1, &source[i], &source[j]));

    // Candidate images in l2, matched by norm against the rescaled Gram.
    let g2s = l2.gram().scale(&scale_sq);
    let max_norm = (0..k).map(|i| target[(i, i)].clone()).max().expect("k >= 1");
    let shells = enumerate_up_to(&g2s, &max_norm);
    let candidates: Vec<Vec<Vec<Int>>> = (0..k)
        .map(|i| {
            shells
                .iter()
                .filter(|(_, n)| *n == target[(i, i)])
                .map(|(v, _)| v.clone())
                .collect()
        })
        .collect();

    let v = QMatrix::from_fn(k, k, |i, j| Rat::from_integer(source[j][i].clone()));
    let v_inv = v.inverse()?;
    let mut images: Vec<Vec<Int>> = Vec::with_capacity(k);
    search(&g2s, &target, &candidates, &mut images, &v_inv, l1, l2, &scale_sq)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g2s: &QMatrix,
    target: &QMatrix,
    candidates: &[Vec<Vec<Int>>],
    images: &mut Vec<Vec<Int>>,
    v_inv: &QMatrix,
    l1: &Lattice,
    l2: &Lattice,
    scale_sq: &Rat,
) -> Option<SimilarityWitness> {
    let pos = images.len();
    if pos == candidates.len() {
        let k = candidates.len();
        let w = QMatrix::from_fn(k, k, |i, j| Rat::from_integer(images[j][i].clone()));
        let m = w.mul(v_inv);
        if m.is_integer() && m.det().abs().is_one() {
            let witness = SimilarityWitness { scale_sq: scale_sq.clone(), map: m };
            if witness.verify(l1, l2) {
                return Some(witness);
            }
        }
        return None;
    }
    'cand: for c in &candidates[pos] {
        for (j, w) in images.iter().enumerate() {
            if form(g2s, c, w) != target[(pos, j)] {
                continue 'cand;
            }
        }
        images.push(c.clone());
        if let Some(w) = search(g2s, target, candidates, images, v_inv, l1, l2, scale_sq) {
            return Some(w);
        }
        images.pop();
    }
    None
}

/// Maximal linearly independent subset of minimal-vector representatives;
/// falls back to the standard basis when the minimal vectors do not span.
fn source_frame(l: &Lattice) -> Vec<Vec<Int>> {
    let k = l.rank();
    let mv = l.minimal_vectors();
    let mut chosen: Vec<Vec<Int>> = Vec::with_capacity(k);
    for v in mv.sign_representatives() {
        if chosen.len() == k {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(v.clone());
        let rows: Vec<Vec<Rat>> = trial
            .iter()
            .map(|u| u.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        if QMatrix::from_rows(&rows).rank() == trial.len() {
            chosen = trial;
        }
    }
    if chosen.len() < k {
        chosen = (0..k)
            .map(|i| (0..k).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect();
    }
    chosen
}

fn form(g: &QMatrix, a: &[Int], b: &[Int]) -> Rat {
    let mut acc = Rat::zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc += &g[(i, j)] * Rat::from_integer(x * y);
            }
        }
    }
    acc
}
