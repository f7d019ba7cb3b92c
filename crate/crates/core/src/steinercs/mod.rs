//! Steiner equiangular tight frames and integer sparse recovery.
//!
//! This module is floating point by design; the constructions themselves
//! (triple systems, Hadamard matrices) are integer-exact and verified
//! combinatorially before any float leaves the builder.

mod etf;
mod experiment;
mod recovery;

pub use etf::{steiner_etf, MeasurementMatrix, SteinerEtfError};
pub use experiment::{run_experiment, ExperimentConfig, ExperimentRow, ExperimentTable};
pub use recovery::{solve_ht, solve_ls, solve_omp, solve_promp, RecoveryResult};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SteinerError {
    #[error("Steiner triple systems need v = 1 or 3 (mod 6), v >= 7; got {0}")]
    InvalidOrder(usize),
    #[error("no Hadamard matrix of order {0} is reachable (Sylvester/Paley composition)")]
    HadamardOrder(usize),
}

/// Steiner triple system: every unordered point pair lies in exactly one
/// block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub points: usize,
    pub blocks: Vec<[usize; 3]>,
}

impl SteinerSystem {
    /// Replication number r = (v-1)/2: blocks through each point.
    pub fn replication(&self) -> usize {
        (self.points - 1) / 2
    }

    /// Blocks through each point, in block order.
    pub fn point_stars(&self) -> Vec<Vec<usize>> {
        let mut stars = vec![Vec::new(); self.points];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                stars[p].push(b);
            }
        }
        stars
    }

    fn verify(&self) -> bool {
        let v = self.points;
        if self.blocks.len() != v * (v - 1) / 6 {
            return false;
        }
        let mut seen = vec![false; v * v];
        for block in &self.blocks {
            let [a, b, c] = *block;
            if a == b || a == c || b == c || a >= v || b >= v || c >= v {
                return false;
            }
            for (x, y) in [(a, b), (a, c), (b, c)] {
                let idx = x.min(y) * v + x.max(y);
                if seen[idx] {
                    return false;
                }
                seen[idx] = true;
            }
        }
        (0..v).all(|x| (x + 1..v).all(|y| seen[x * v + y]))
    }
}

/// Builds the Steiner triple system of order v by the Bose construction
/// (v = 3 mod 6) or the Skolem construction (v = 1 mod 6). The pair-cover
/// invariant is verified exhaustively before returning.
pub fn steiner_triple_system(v: usize) -> Result<SteinerSystem, SteinerError> {
    if v < 7 || (v % 6 != 1 && v % 6 != 3) {
        return Err(SteinerError::InvalidOrder(v));
    }
    let sts = if v % 6 == 3 { bose(v) } else { skolem(v) };
    assert!(sts.verify(), "triple system invariant failed for v = {v}");
    Ok(sts)
}

/// Bose construction for v = 6t+3: points Z_{2t+1} x {0,1,2} with the
/// idempotent commutative quasigroup i*j = (i+j)(t+1) mod 2t+1.
fn bose(v: usize) -> SteinerSystem {
    let t = (v - 3) / 6;
    let m = 2 * t + 1;
    let point = |i: usize, k: usize| i * 3 + k;
    let mut blocks = Vec::new();
    for i in 0..m {
        blocks.push([point(i, 0), point(i, 1), point(i, 2)]);
    }
    let q = |i: usize, j: usize| ((i + j) * (t + 1)) % m;
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..3 {
                blocks.push([point(i, k), point(j, k), point(q(i, j), (k + 1) % 3)]);
            }
        }
    }
    SteinerSystem { points: v, blocks }
}

/// Skolem construction for v = 6t+1: points (Z_{2t} x {0,1,2}) plus a point
/// at infinity, with a half-idempotent commutative quasigroup on Z_{2t}.
fn skolem(v: usize) -> SteinerSystem {
    let t = (v - 1) / 6;
    let m = 2 * t;
    let inf = v - 1;
    let point = |i: usize, k: usize| i * 3 + k;
    // half-idempotent quasigroup: pi(2m) = m, pi(2m+1) = m + t
    let pi = |x: usize| if x % 2 == 0 { x / 2 } else { x / 2 + t };
    let q = |i: usize, j: usize| pi((i + j) % m);
    let mut blocks = Vec::new();
    for i in 0..t {
        blocks.push([point(i, 0), point(i, 1), point(i, 2)]);
    }
    for i in 0..t {
        blocks.push([inf, point(t + i, 0), point(i, 1)]);
        blocks.push([inf, point(t + i, 1), point(i, 2)]);
        blocks.push([inf, point(t + i, 2), point(i, 0)]);
    }
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..3 {
                blocks.push([point(i, k), point(j, k), point(q(i, j), (k + 1) % 3)]);
            }
        }
    }
    SteinerSystem { points: v, blocks }
}

/// Hadamard matrix of the given order, built from Sylvester doubling and
/// Paley's construction over prime fields q = 3 (mod 4), normalized so the
/// first row is all ones. `H H^T = order * I` is asserted in integer
/// arithmetic.
pub fn hadamard(order: usize) -> Result<Vec<Vec<i64>>, SteinerError> {
    let h = build_hadamard(order).ok_or(SteinerError::HadamardOrder(order))?;
    // normalize columns so the first row is +1
    let mut h = h;
    let n = h.len();
    for c in 0..n {
        if h[0][c] < 0 {
            for row in h.iter_mut() {
                row[c] = -row[c];
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ip: i64 = (0..n).map(|k| h[i][k] * h[j][k]).sum();
            assert_eq!(ip, if i == j { n as i64 } else { 0 }, "Hadamard check failed");
        }
    }
    Ok(h)
}

fn build_hadamard(order: usize) -> Option<Vec<Vec<i64>>> {
    match order {
        0 => None,
        1 => Some(vec![vec![1]]),
        2 => Some(vec![vec![1, 1], vec![1, -1]]),
        n if n % 4 != 0 => None,
        n => {
            if n % 2 == 0 {
                if let Some(half) = build_hadamard(n / 2) {
                    return Some(sylvester_double(&half));
                }
            }
            if n >= 4 && is_prime(n - 1) && (n - 1) % 4 == 3 {
                return Some(paley(n - 1));
            }
            None
        }
    }
}

fn sylvester_double(h: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = h.len();
    let mut out = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = h[i][j];
            out[i][j + n] = h[i][j];
            out[i + n][j] = h[i][j];
            out[i + n][j + n] = -h[i][j];
        }
    }
    out
}

/// Paley construction I for prime q = 3 (mod 4): H = I + S with S the
/// skew conference matrix of the quadratic-residue character, order q+1.
fn paley(q: usize) -> Vec<Vec<i64>> {
    let chi = |x: i64| -> i64 {
        let x = x.rem_euclid(q as i64);
        if x == 0 {
            return 0;
        }
        let mut is_square = false;
        for y in 1..q as i64 {
            if (y * y) % q as i64 == x {
                is_square = true;
                break;
            }
        }
        if is_square {
            1
        } else {
            -1
        }
    };
    let n = q + 1;
    let mut h = vec![vec![1i64; n]; n];
    // index 0 is the point at infinity
    for i in 1..n {
        h[i][0] = -1;
    }
    for i in 1..n {
        for j in 1..n {
            if i == j {
                h[i][j] = 1;
            } else {
                h[i][j] = chi(i as i64 - j as i64);
            }
        }
    }
    h
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_plane() {
        let sts = steiner_triple_system(7).unwrap();
        assert_eq!(sts.blocks.len(), 7);
        assert_eq!(sts.replication(), 3);
        assert!(sts.point_stars().iter().all(|s| s.len() == 3));
    }

    #[test]
    fn affine_plane_of_order_three() {
        let sts = steiner_triple_system(9).unwrap();
        assert_eq!(sts.blocks.len(), 12);
        assert_eq!(sts.replication(), 4);
    }

    #[test]
    fn skolem_and_bose_orders() {
        for v in [7, 9, 13, 15, 19, 21, 25, 27] {
            let sts = steiner_triple_system(v).unwrap();
            assert_eq!(sts.blocks.len(), v * (v - 1) / 6, "v = {v}");
        }
    }

    #[test]
    fn invalid_orders() {
        for v in [5, 6, 8, 11, 12] {
            assert_eq!(steiner_triple_system(v).unwrap_err(), SteinerError::InvalidOrder(v));
        }
    }

    #[test]
    fn hadamard_small_orders() {
        assert_eq!(hadamard(2).unwrap(), vec![vec![1, 1], vec![1, -1]]);
        for order in [1, 2, 4, 8, 12, 16, 20, 24] {
            let h = hadamard(order).unwrap();
            assert_eq!(h.len(), order);
            assert!(h[0].iter().all(|&x| x == 1), "first row normalized");
        }
        assert_eq!(hadamard(6).unwrap_err(), SteinerError::HadamardOrder(6));
        assert_eq!(hadamard(5).unwrap_err(), SteinerError::HadamardOrder(5));
    }
}
