//! Exact rational simplex with Bland's rule (two-phase).

use num_traits::{One, Signed, Zero};

use crate::exactq::{QMatrix, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal { x: Vec<Rat>, value: Rat },
    Infeasible,
    Unbounded,
}

/// Maximizes `c^T x` subject to `A x = b`, `x >= 0`, exactly over Q.
/// Bland's rule guarantees termination.
pub fn simplex_maximize(a: &QMatrix, b: &[Rat], c: &[Rat]) -> SimplexOutcome {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);

    // Tableau with artificial variables: columns 0..n original, n..n+m
    // artificial, last column RHS. Row signs normalized so b >= 0.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if flip { -a[(i, j)].clone() } else { a[(i, j)].clone() });
        }
        for j in 0..m {
            row.push(if j == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: minimize the sum of artificials, i.e. maximize -sum.
    let mut obj1 = vec![Rat::zero(); width];
    for j in n..n + m {
        obj1[j] = -Rat::one();
    }
    let val1 = run_phase(&mut t, &mut basis, &mut obj1, n + m);
    if val1.is_none() || !price_out(&t, &basis, &obj1).is_zero() {
        return SimplexOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis where possible.
    let mut drop_rows = Vec::new();
    for i in 0..t.len() {
        if basis[i] < n {
            continue;
        }
        if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
            pivot(&mut t, &mut basis, i, j);
        } else {
            drop_rows.push(i);
        }
    }
    for &i in drop_rows.iter().rev() {
        t.remove(i);
        basis.remove(i);
    }

    // Phase 2 on the original objective, artificial columns barred.
    let mut obj2 = vec![Rat::zero(); width];
    obj2[..n].clone_from_slice(c);
    match run_phase(&mut t, &mut basis, &mut obj2, n) {
        None => SimplexOutcome::Unbounded,
        Some(()) => {
            let mut x = vec![Rat::zero(); n];
            for (i, &bi) in basis.iter().enumerate() {
                if bi < n {
                    x[bi] = t[i].last().unwrap().clone();
                }
            }
            let value = crate::exactq::dot(c, &x);
            SimplexOutcome::Optimal { x, value }
        }
    }
}

/// Objective value of the current basic solution.
fn price_out(t: &[Vec<Rat>], basis: &[usize], obj: &[Rat]) -> Rat {
    let mut v = Rat::zero();
    for (i, &bi) in basis.iter().enumerate() {
        v += &obj[bi] * t[i].last().unwrap();
    }
    v
}

/// Runs simplex iterations until optimal (`Some(())`) or unbounded (`None`).
/// Only columns `< active_cols` may enter the basis.
fn run_phase(
    t: &mut [Vec<Rat>],
    basis: &mut [usize],
    obj: &mut [Rat],
    active_cols: usize,
) -> Option<()> {
    loop {
        // reduced costs: obj[j] - sum_i obj[basis[i]] * t[i][j]
        let mut entering = None;
        for j in 0..active_cols {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = obj[j].clone();
            for (i, &bi) in basis.iter().enumerate() {
                if !obj[bi].is_zero() {
                    rc -= &obj[bi] * &t[i][j];
                }
            }
            if rc.is_positive() {
                entering = Some(j);
                break; // Bland: lowest index
            }
        }
        let Some(e) = entering else { return Some(()) };
        // ratio test, ties broken by lowest basis index
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..t.len() {
            if !t[i][e].is_positive() {
                continue;
            }
            let ratio = t[i].last().unwrap() / &t[i][e];
            match &leave {
                None => leave = Some((i, ratio)),
                Some((li, lr)) => {
                    if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                        leave = Some((i, ratio));
                    }
                }
            }
        }
        let Some((l, _)) = leave else { return None };
        pivot(t, basis, l, e);
    }
}

fn pivot(t: &mut [Vec<Rat>], basis: &mut [usize], row: usize, col: usize) {
    let inv = t[row][col].recip();
    for v in t[row].iter_mut() {
        *v *= &inv;
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let factor = t[i][col].clone();
        for j in 0..t[i].len() {
            let sub = &factor * &t[row][j];
            t[i][j] -= sub;
        }
    }
    basis[row] = col;
}
