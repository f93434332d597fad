//! Bounded checks of dominance and of rank-two subsystems.
//!
//! Neither check is a decision procedure: both explore a finite part of an
//! infinite object and report what they saw.

use std::collections::HashSet;

use super::{Positivity, Root, RootSpace};
use crate::coxeter::{Gen, Scalar, Sign};
use crate::error::{Error, Result};

/// Positive roots reachable from the simple roots by at most `depth_cap`
/// depth-increasing simple reflections, in breadth-first order.
pub fn positive_roots_to_depth(space: &RootSpace, depth_cap: usize) -> Vec<Root> {
    let f = space.field();
    let mut out: Vec<Root> = space.matrix().generators().map(|s| space.simple(s)).collect();
    let mut seen: HashSet<Root> = out.iter().cloned().collect();
    let mut frontier = 0..out.len();
    for _ in 0..depth_cap {
        let start = out.len();
        for i in frontier.clone() {
            for s in space.matrix().generators() {
                let b = space.bilinear_simple(s, &out[i]);
                if f.sign(&b) == Sign::Negative {
                    let image = space.reflect_with(s, &out[i], &b);
                    if seen.insert(image.clone()) {
                        out.push(image);
                    }
                }
            }
        }
        if out.len() == start {
            break;
        }
        frontier = start..out.len();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    /// No element up to the length cap separates the two roots.
    Unfalsified,
    /// `w` sends the dominating candidate negative and the other one positive.
    Counterexample(Vec<Gen>),
}

/// Searches for `w` with `w(beta)` negative and `w(alpha)` positive, over all
/// words of length at most `length_cap` without immediate repetitions.
///
/// A counterexample shows that `beta` does not dominate `alpha`.
pub fn dominance_falsifier(space: &RootSpace, alpha: &Root, beta: &Root, length_cap: usize) -> Dominance {
    fn search(space: &RootSpace, word: &mut Vec<Gen>, a: &Root, b: &Root, remaining: usize) -> Option<Vec<Gen>> {
        let b_neg = space.classify(b) == Ok(Positivity::Negative);
        let a_pos = space.classify(a) == Ok(Positivity::Positive);
        if b_neg && a_pos {
            // Letters were pushed in application order; the product reads backwards.
            return Some(word.iter().rev().copied().collect());
        }
        if remaining == 0 {
            return None;
        }
        for s in space.matrix().generators() {
            if word.last() == Some(&s) {
                continue;
            }
            word.push(s);
            let found = search(space, word, &space.reflect_simple(s, a), &space.reflect_simple(s, b), remaining - 1);
            word.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    // Iterative deepening keeps witnesses as short as possible.
    for cap in 0..=length_cap {
        if let Some(w) = search(space, &mut Vec::new(), alpha, beta, cap) {
            return Dominance::Counterexample(w);
        }
    }
    Dominance::Unfalsified
}

/// Coordinates `(x, y)` with `v = x a + y b`, if `v` lies in the plane.
fn plane_coordinates(space: &RootSpace, a: &Root, b: &Root, v: &Root) -> Result<Option<(Scalar, Scalar)>> {
    let f = space.field();
    let n = space.rank();
    // A nonzero 2x2 minor picks two coordinates that determine (x, y).
    let mut pivot = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let det =
                &f.mul(&a.coefficients()[i], &b.coefficients()[j]) - &f.mul(&a.coefficients()[j], &b.coefficients()[i]);
            if !det.is_zero() {
                pivot = Some((i, j, det));
                break 'outer;
            }
        }
    }
    let (i, j, det) = pivot.ok_or(Error::DegeneratePlane)?;
    let (ai, aj) = (&a.coefficients()[i], &a.coefficients()[j]);
    let (bi, bj) = (&b.coefficients()[i], &b.coefficients()[j]);
    let (vi, vj) = (&v.coefficients()[i], &v.coefficients()[j]);
    let x = f.div(&(&f.mul(vi, bj) - &f.mul(vj, bi)), &det)?;
    let y = f.div(&(&f.mul(ai, vj) - &f.mul(aj, vi)), &det)?;
    let fits = (0..n).all(|k| {
        let rebuilt = &f.mul(&x, &a.coefficients()[k]) + &f.mul(&y, &b.coefficients()[k]);
        rebuilt == v.coefficients()[k]
    });
    Ok(fits.then_some((x, y)))
}

/// The two extreme rays of the cone spanned by the positive roots lying in
/// the plane of `alpha` and `beta`, among roots of depth at most `depth_cap`.
///
/// The first returned root is the one met first when turning from `alpha`
/// away from `beta`; the answer is exact once the cap reaches the simple
/// system of the rank-two subsystem.
pub fn maximal_dihedral_simples(
    space: &RootSpace,
    alpha: &Root,
    beta: &Root,
    depth_cap: usize,
) -> Result<(Root, Root)> {
    maximal_dihedral_simples_in(space, alpha, beta, &positive_roots_to_depth(space, depth_cap))
}

/// As [`maximal_dihedral_simples`], over a precomputed set of positive roots.
pub fn maximal_dihedral_simples_in(
    space: &RootSpace,
    alpha: &Root,
    beta: &Root,
    universe: &[Root],
) -> Result<(Root, Root)> {
    let f = space.field();
    let mut in_plane: Vec<(Root, Scalar, Scalar)> = Vec::new();
    for v in universe.iter().chain([alpha, beta]) {
        if let Some((x, y)) = plane_coordinates(space, alpha, beta, v)? {
            in_plane.push((v.clone(), x, y));
        }
    }
    let cross =
        |p: &(Root, Scalar, Scalar), q: &(Root, Scalar, Scalar)| f.sign(&(&f.mul(&p.1, &q.2) - &f.mul(&p.2, &q.1)));
    let mut first = 0;
    let mut last = 0;
    for k in 1..in_plane.len() {
        if cross(&in_plane[k], &in_plane[first]) == Sign::Positive {
            first = k;
        }
        if cross(&in_plane[last], &in_plane[k]) == Sign::Positive {
            last = k;
        }
    }
    Ok((in_plane[first].0.clone(), in_plane[last].0.clone()))
}
