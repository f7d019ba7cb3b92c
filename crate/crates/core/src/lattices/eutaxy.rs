//! Eutaxy certificates and perfection.

use num_traits::{One, Signed, Zero};

use super::simplex::{simplex_maximize, SimplexOutcome};
use super::Lattice;
use crate::exactq::{QMatrix, Rat};

/// Certificate produced by the eutaxy checks.
///
/// Strong: the minimal vectors satisfy the eutaxy identity with one common
/// coefficient. Weak: positive (not necessarily equal) coefficients exist;
/// the witness lists one coefficient per minimal vector, aligned with
/// `minimal_vectors().coords` (so each ± pair carries the same value).
/// None: no positive coefficients exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EutaxyCertificate {
    Strong { coefficient: Rat },
    Weak { coefficients: Vec<Rat> },
    None,
}

impl EutaxyCertificate {
    pub fn is_strong(&self) -> bool {
        matches!(self, EutaxyCertificate::Strong { .. })
    }

    pub fn is_eutactic(&self) -> bool {
        !matches!(self, EutaxyCertificate::None)
    }
}

/// Sum over minimal vectors of the rank-one forms u u^T, in basis
/// coordinates (u are integer coordinate vectors).
fn outer_sum(coords: &[Vec<crate::exactq::Int>], k: usize) -> QMatrix {
    let mut s = QMatrix::zero(k, k);
    for u in coords {
        for i in 0..k {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..k {
                if !u[j].is_zero() {
                    s[(i, j)] += Rat::from_integer(&u[i] * &u[j]);
                }
            }
        }
    }
    s
}

/// Strong eutaxy: sum_{x in S(L)} x x^T equals c^{-1} times the identity on
/// the lattice span. In basis coordinates this reads (sum u u^T) G = c' I
/// with c' = |S| |L|^2 / rank; the reported eutaxy coefficient is its
/// reciprocal, rank / (|S| |L|^2).
pub fn strong_eutaxy_check(l: &Lattice) -> EutaxyCertificate {
    let k = l.rank();
    let mv = l.minimal_vectors();
    let m = outer_sum(&mv.coords, k).mul(l.gram());
    let count = Rat::from_integer(crate::exactq::Int::from(mv.coords.len()));
    let c = &count * &mv.min_norm_sq / crate::exactq::rint(k as i64);
    let target = QMatrix::identity(k).scale(&c);
    if m == target {
        EutaxyCertificate::Strong { coefficient: c.recip() }
    } else {
        EutaxyCertificate::None
    }
}

/// Weak eutaxy via exact linear programming: do positive coefficients c_i
/// with sum c_i x_i x_i^T = identity-on-span exist? Solved by maximizing t
/// subject to c_i >= t >= 0 with an exact simplex; eutactic iff the optimum
/// is strictly positive.
pub fn weak_eutaxy_check(l: &Lattice) -> EutaxyCertificate {
    let k = l.rank();
    let mv = l.minimal_vectors();
    let reps = mv.sign_representatives();
    let p = reps.len();
    let target = l.gram().inverse().expect("gram is positive definite");

    // Equations indexed by the upper triangle of the symmetric space.
    let rows = k * (k + 1) / 2;
    let pair_forms: Vec<QMatrix> = reps.iter().map(|u| outer_sum(&[(*u).clone()], k)).collect();
    // variables: t, s_1..s_p with c_i = t + s_i
    let mut a = QMatrix::zero(rows, p + 1);
    let mut b = vec![Rat::zero(); rows];
    let mut r = 0;
    for i in 0..k {
        for j in i..k {
            for (idx, form) in pair_forms.iter().enumerate() {
                a[(r, idx + 1)] = form[(i, j)].clone();
                a[(r, 0)] += &form[(i, j)];
            }
            b[r] = target[(i, j)].clone();
            r += 1;
        }
    }
    let mut objective = vec![Rat::zero(); p + 1];
    objective[0] = Rat::one();

    match simplex_maximize(&a, &b, &objective) {
        SimplexOutcome::Optimal { x, value } if value.is_positive() => {
            // per-pair coefficient t + s_i; halve to spread over both signs
            let half = Rat::new(crate::exactq::Int::one(), crate::exactq::Int::from(2));
            let per_pair: Vec<Rat> = (0..p).map(|i| (&x[0] + &x[i + 1]) * &half).collect();
            let coefficients = mv
                .coords
                .iter()
                .map(|u| {
                    let idx = reps
                        .iter()
                        .position(|r| *r == u || pair_negated(r, u))
                        .expect("every vector has a sign representative");
                    per_pair[idx].clone()
                })
                .collect();
            EutaxyCertificate::Weak { coefficients }
        }
        _ => EutaxyCertificate::None,
    }
}

fn pair_negated(a: &[crate::exactq::Int], b: &[crate::exactq::Int]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| *x == -y)
}

/// Perfection: the rank-one forms of the minimal vectors span the whole
/// space of symmetric k x k matrices (dimension k(k+1)/2), checked by exact
/// rank computation in basis coordinates.
pub fn perfection_check(l: &Lattice) -> bool {
    let k = l.rank();
    let mv = l.minimal_vectors();
    let reps = mv.sign_representatives();
    let dim = k * (k + 1) / 2;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(reps.len());
    for u in reps {
        let mut row = Vec::with_capacity(dim);
        for i in 0..k {
            for j in i..k {
                row.push(Rat::from_integer(&u[i] * &u[j]));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return false;
    }
    QMatrix::from_rows(&rows).rank() == dim
}
