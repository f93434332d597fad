//! Exact cone membership by phase-one simplex over the scalar field.

use crate::coxeter::{Scalar, ScalarField, Sign};
use crate::roots::{Root, RootSpace};

/// Whether `target` is a nonnegative combination of `generators`.
///
/// Solves `sum lambda_i g_i = target, lambda >= 0` with artificial variables
/// and Bland's rule, so pivoting cannot cycle.
pub fn cone_membership(space: &RootSpace, target: &Root, generators: &[Root]) -> bool {
    let f = space.field();
    let rows = space.rank();
    let cols = generators.len();
    if target.is_zero() {
        return true;
    }
    if cols == 0 {
        return false;
    }

    // Tableau rows: [A | I | b] with b >= 0.
    let width = cols + rows + 1;
    let mut t: Vec<Vec<Scalar>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row: Vec<Scalar> = generators.iter().map(|g| g.coefficients()[r].clone()).collect();
        row.extend((0..rows).map(|k| if k == r { f.one() } else { f.zero() }));
        row.push(target.coefficients()[r].clone());
        if f.sign(&row[width - 1]) == Sign::Negative {
            for (j, x) in row.iter_mut().enumerate() {
                if j < cols || j == width - 1 {
                    *x = -&*x;
                }
            }
        }
        t.push(row);
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // Objective row for minimizing the artificial sum, in reduced-cost form.
    let mut z: Vec<Scalar> =
        (0..width)
            .map(|j| {
                if j >= cols && j < cols + rows {
                    f.zero()
                } else {
                    t.iter().fold(f.zero(), |acc, row| &acc - &row[j])
                }
            })
            .collect();

    while let Some(enter) = (0..cols + rows).find(|&j| f.sign(&z[j]) == Sign::Negative) {
        let mut leave: Option<(usize, Scalar)> = None;
        for (r, row) in t.iter().enumerate() {
            if f.sign(&row[enter]) != Sign::Positive {
                continue;
            }
            let ratio = f.div(&row[width - 1], &row[enter]).expect("positive pivot");
            leave = match leave {
                None => Some((r, ratio)),
                Some((best, best_ratio)) => match f.cmp(&ratio, &best_ratio) {
                    std::cmp::Ordering::Less => Some((r, ratio)),
                    std::cmp::Ordering::Equal if basis[r] < basis[best] => Some((r, ratio)),
                    _ => Some((best, best_ratio)),
                },
            };
        }
        // Phase one is bounded below by zero.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(f, &mut t, &mut z, pr, enter);
        basis[pr] = enter;
    }
    f.sign(&z[width - 1]) == Sign::Zero
}

fn pivot(f: &ScalarField, t: &mut [Vec<Scalar>], z: &mut [Scalar], pr: usize, pc: usize) {
    let inv = f.inv(&t[pr][pc]).expect("nonzero pivot");
    for x in t[pr].iter_mut() {
        *x = f.mul(x, &inv);
    }
    let prow = t[pr].clone();
    let eliminate = |row: &mut [Scalar]| {
        let factor = row[pc].clone();
        if factor.is_zero() {
            return;
        }
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = &*x - &f.mul(&factor, p);
            }
        }
    };
    for (r, row) in t.iter_mut().enumerate() {
        if r != pr {
            eliminate(row);
        }
    }
    eliminate(z);
}
