//! Exact shortest-vector enumeration.
//!
//! The Gram matrix is cleared to integers, pairwise size-reduced (a
//! unimodular preconditioning step that leaves the lattice unchanged), and
//! enumerated over its exact LDL^T factorization. Candidate coordinates are
//! visited zig-zag around the real center of each level, so membership
//! decisions are exact rational comparisons with no radicals and no floats.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactq::{denominator_lcm, ldlt, IMatrix, Int, QMatrix, Rat};

/// All shortest nonzero vectors of a lattice, in ± pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalVectorSet {
    /// Squared minimal norm |L|^2.
    pub min_norm_sq: Rat,
    /// Integer coordinates in the lattice basis; both signs included.
    pub coords: Vec<Vec<Int>>,
    /// Ambient rational representatives, when the lattice has an ambient
    /// basis. True vectors carry an extra sqrt(scale) factor.
    pub ambient: Option<Vec<Vec<Rat>>>,
}

impl MinimalVectorSet {
    /// Kissing number |S(L)|.
    pub fn kissing_number(&self) -> usize {
        self.coords.len()
    }

    /// One representative per ± pair: first nonzero coordinate positive.
    pub fn sign_representatives(&self) -> Vec<&Vec<Int>> {
        self.coords
            .iter()
            .filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_positive))
            .collect()
    }
}

/// Clears denominators: returns (integer gram, scale) with scale * gram
/// integral.
fn cleared_gram(gram: &QMatrix) -> (IMatrix, Int) {
    let k = gram.rows();
    let scale = denominator_lcm((0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|ij| &gram[ij]));
    let m = IMatrix::from_fn(k, k, |i, j| {
        let r = &gram[(i, j)];
        r.numer() * (&scale / r.denom())
    });
    (m, scale)
}

/// Pairwise size reduction in Gram coordinates. Returns the reduced Gram
/// and the unimodular column transform T with `G_red = T^T G T`; vectors of
/// the reduced basis map back to original coordinates via `x_orig = T x`.
fn greedy_reduce(g: &IMatrix) -> (IMatrix, IMatrix) {
    let k = g.rows();
    let mut g = g.clone();
    let mut t = IMatrix::identity(k);
    for _pass in 0..64 {
        let mut changed = false;
        for i in 0..k {
            for j in 0..k {
                if i == j || g[(j, j)].is_zero() {
                    continue;
                }
                // nearest-integer quotient of g_ij / g_jj
                let two_gij: Int = &g[(i, j)] * 2;
                let numer: Int = &two_gij + &g[(j, j)];
                let denom: Int = &g[(j, j)] * 2;
                let q = numer.div_floor(&denom);
                if q.is_zero() {
                    continue;
                }
                let old_diag = g[(i, i)].clone();
                let new_diag =
                    &old_diag - &q * &two_gij + &q * &q * &g[(j, j)];
                if new_diag >= old_diag {
                    continue;
                }
                // b_i <- b_i - q * b_j
                for l in 0..k {
                    let sub = &q * &g[(j, l)];
                    g[(i, l)] -= sub;
                }
                for l in 0..k {
                    let sub = &q * &g[(l, j)];
                    g[(l, i)] -= sub;
                }
                for l in 0..k {
                    let sub = &q * &t[(l, j)];
                    t[(l, i)] -= sub;
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (g, t)
}

struct Enumerator {
    l: QMatrix,
    d: Vec<Rat>,
    bound: Rat,
    shrink: bool,
    /// (coords in reduced basis, scaled squared norm)
    found: Vec<(Vec<Int>, Rat)>,
    coords: Vec<Int>,
}

impl Enumerator {
    /// Depth-first over levels k-1 .. 0; `acc` is the cost of the levels
    /// above `level`.
    fn descend(&mut self, level: usize, acc: Rat) {
        let k = self.d.len();
        // offset_i = sum_{j > i} L[j][i] * x_j
        let mut offset = Rat::zero();
        for j in level + 1..k {
            if !self.l[(j, level)].is_zero() {
                offset += &self.l[(j, level)] * Rat::from_integer(self.coords[j].clone());
            }
        }
        let center = -&offset;
        // nearest integer to center: floor(center + 1/2)
        let start = {
            let shifted = &center + Rat::new(Int::one(), Int::from(2));
            shifted.floor().to_integer()
        };
        for direction in [Int::one(), -Int::one()] {
            let mut x = if direction.is_positive() { start.clone() } else { &start - 1 };
            loop {
                let dist = Rat::from_integer(x.clone()) + &offset;
                let cost = &acc + &self.d[level] * &dist * &dist;
                if cost > self.bound {
                    break;
                }
                self.coords[level] = x.clone();
                if level == 0 {
                    self.record(cost);
                } else {
                    self.descend(level - 1, cost);
                }
                x += &direction;
            }
        }
        self.coords[level] = Int::zero();
    }

    fn record(&mut self, cost: Rat) {
        if self.coords.iter().all(Zero::is_zero) {
            return;
        }
        if self.shrink && cost < self.bound {
            self.bound = cost.clone();
        }
        self.found.push((self.coords.clone(), cost));
    }
}

fn run_enumeration(
    gram: &QMatrix,
    bound: Option<&Rat>,
    shrink: bool,
) -> (Vec<(Vec<Int>, Rat)>, Rat, IMatrix, Int) {
    let k = gram.rows();
    assert!(k >= 1, "enumeration needs rank >= 1");
    let (gi, scale) = cleared_gram(gram);
    let (gr, t) = greedy_reduce(&gi);
    let scaled_bound = match bound {
        Some(b) => b * Rat::from_integer(scale.clone()),
        // any basis vector bounds the minimum from above
        None => Rat::from_integer((0..k).map(|i| gr[(i, i)].clone()).min().expect("rank >= 1")),
    };
    let (l, d) = ldlt(&gr.to_qmatrix()).expect("lattice Gram must be positive definite");
    let mut e = Enumerator {
        l,
        d,
        bound: scaled_bound,
        shrink,
        found: Vec::new(),
        coords: vec![Int::zero(); k],
    };
    e.descend(k - 1, Rat::zero());
    (e.found, e.bound, t, scale)
}

/// All shortest nonzero vectors of the positive definite `gram`, as
/// coordinates in the lattice basis together with the exact minimum.
pub fn shortest_vectors(gram: &QMatrix) -> (Rat, Vec<Vec<Int>>) {
    let (found, min_scaled, t, scale) = run_enumeration(gram, None, true);
    let mut coords: Vec<Vec<Int>> = found
        .into_iter()
        .filter(|(_, n)| *n == min_scaled)
        .map(|(x, _)| apply_transform(&t, &x))
        .collect();
    coords.sort();
    coords.dedup();
    (min_scaled / Rat::from_integer(scale), coords)
}

/// All nonzero vectors with squared norm <= `bound` (inclusive), as
/// (coords, exact squared norm), sorted by norm then coords.
pub fn enumerate_up_to(gram: &QMatrix, bound: &Rat) -> Vec<(Vec<Int>, Rat)> {
    let (found, _, t, scale) = run_enumeration(gram, Some(bound), false);
    let scale = Rat::from_integer(scale);
    let mut out: Vec<(Vec<Int>, Rat)> = found
        .into_iter()
        .map(|(x, n)| (apply_transform(&t, &x), n / &scale))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

fn apply_transform(t: &IMatrix, x: &[Int]) -> Vec<Int> {
    let k = t.rows();
    (0..k)
        .map(|i| {
            let mut acc = Int::zero();
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    acc += &t[(i, j)] * xj;
                }
            }
            acc
        })
        .collect()
}

/// Box bounds for the exhaustive oracle: any vector of squared norm at most
/// the best diagonal satisfies |x_i|^2 <= bound * (G^{-1})_{ii}.
pub fn brute_force_box(gram: &QMatrix) -> Vec<i64> {
    let k = gram.rows();
    let inv = gram.inverse().expect("positive definite");
    let best: Rat = (0..k).map(|i| gram[(i, i)].clone()).min().unwrap();
    (0..k)
        .map(|i| {
            let r = &best * &inv[(i, i)];
            crate::exactq::floor_sqrt(&r).to_i64().expect("small box") + 1
        })
        .collect()
}

/// Exhaustive box-search oracle for tests: enumerates every integer
/// coordinate vector in the box given by the inverse-Gram bound and returns
/// the exact minimum and all attaining vectors. Works on the cleared
/// integer Gram in machine integers, so the box must stay modest (small
/// ranks, bounded entries); exactness is preserved because all norms are
/// integers times a common scale.
pub fn brute_force_shortest(gram: &QMatrix) -> (Rat, Vec<Vec<Int>>) {
    let k = gram.rows();
    let (gi, scale) = cleared_gram(gram);
    let g: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| gi[(i, j)].to_i128().expect("entries fit")).collect())
        .collect();
    let limits = brute_force_box(gram);
    let mut best: i128 = (0..k).map(|i| g[i][i]).min().unwrap();
    let mut vecs: Vec<Vec<i64>> = Vec::new();
    let mut x = vec![0i64; k];
    fn walk(
        i: usize,
        x: &mut Vec<i64>,
        limits: &[i64],
        g: &[Vec<i128>],
        best: &mut i128,
        vecs: &mut Vec<Vec<i64>>,
    ) {
        if i == x.len() {
            if x.iter().all(|&v| v == 0) {
                return;
            }
            let mut norm: i128 = 0;
            for (r, row) in g.iter().enumerate() {
                if x[r] == 0 {
                    continue;
                }
                for (c, entry) in row.iter().enumerate() {
                    norm += x[r] as i128 * x[c] as i128 * entry;
                }
            }
            if norm < *best {
                *best = norm;
                vecs.clear();
                vecs.push(x.clone());
            } else if norm == *best {
                vecs.push(x.clone());
            }
            return;
        }
        for v in -limits[i]..=limits[i] {
            x[i] = v;
            walk(i + 1, x, limits, g, best, vecs);
        }
        x[i] = 0;
    }
    walk(0, &mut x, &limits, &g, &mut best, &mut vecs);
    vecs.sort();
    let vecs = vecs
        .into_iter()
        .map(|v| v.into_iter().map(Int::from).collect())
        .collect();
    (Rat::new(Int::from(best), scale), vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, rint};

    #[test]
    fn cubic_lattice() {
        let (min, vecs) = shortest_vectors(&QMatrix::identity(3));
        assert_eq!(min, rint(1));
        assert_eq!(vecs.len(), 6);
    }

    #[test]
    fn hexagonal_lattice() {
        let g = QMatrix::from_i64(&[&[2, 1], &[1, 2]]);
        let (min, vecs) = shortest_vectors(&g);
        assert_eq!(min, rint(2));
        assert_eq!(vecs.len(), 6);
    }

    #[test]
    fn anisotropic_diagonal() {
        let g = QMatrix::from_i64(&[&[1, 0], &[0, 4]]);
        let (min, vecs) = shortest_vectors(&g);
        assert_eq!(min, rint(1));
        assert_eq!(vecs.len(), 2);
    }

    #[test]
    fn rational_gram() {
        let g = QMatrix::from_fn(2, 2, |i, j| if i == j { rat(3, 4) } else { rat(-1, 4) });
        let (min, _) = shortest_vectors(&g);
        assert_eq!(min, rat(3, 4));
    }

    #[test]
    fn shells_of_square_lattice() {
        let shells = enumerate_up_to(&QMatrix::identity(2), &rint(4));
        let count_at = |n: i64| shells.iter().filter(|(_, q)| *q == rint(n)).count();
        assert_eq!(count_at(1), 4);
        assert_eq!(count_at(2), 4);
        assert_eq!(count_at(4), 4);
        assert_eq!(shells.len(), 12);
    }

    #[test]
    fn skewed_basis_is_handled() {
        // severely skewed basis of Z^2: b1 = (1, 0), b2 = (100, 1)
        let g = QMatrix::from_i64(&[&[1, 100], &[100, 10001]]);
        let (min, vecs) = shortest_vectors(&g);
        assert_eq!(min, rint(1));
        assert_eq!(vecs.len(), 4);
    }

    #[test]
    fn matches_brute_force_oracle() {
        let g = QMatrix::from_i64(&[&[5, 1, 2], &[1, 3, 1], &[2, 1, 4]]);
        let (m1, v1) = shortest_vectors(&g);
        let (m2, v2) = brute_force_shortest(&g);
        assert_eq!(m1, m2);
        assert_eq!(v1, v2);
    }
}
