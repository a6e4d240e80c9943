//! Double description: from half-space constraints to generators.
//!
//! [`polar_generators`] computes a generator description (lineality basis
//! plus extreme rays) of `{x : c . x >= 0 for all c}`. Constraints are
//! inserted one at a time in a canonical lexicographic order; adjacency of
//! rays is decided by an exact rank test on the constraints tight at both,
//! so no general-position assumption is needed. Everything is exact.

use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

use crate::linalg::{self, QVec};
use crate::rat::Rat;

/// Generator description of a half-space intersection.
#[derive(Debug, Clone)]
pub struct DdOutput {
    /// Basis of the lineality space (the common kernel of the constraints).
    pub lineality: Vec<QVec>,
    /// Extreme rays modulo the lineality space.
    pub rays: Vec<QVec>,
}

/// Computes generators of `{x in Q^n : c . x >= 0 for every c in constraints}`.
pub fn polar_generators(constraints: &[QVec], n: usize) -> DdOutput {
    // Canonical insertion order: primitive, deduplicated, lexicographic.
    let mut cs: Vec<QVec> = constraints
        .iter()
        .filter(|c| !linalg::is_zero_vec(c))
        .map(|c| linalg::primitive(c))
        .collect();
    cs.sort_by(|a, b| linalg::lex_cmp(a, b));
    cs.dedup();

    // Start from the whole space: lineality = standard basis, no rays.
    let mut lineality: Vec<QVec> = (0..n).map(|i| linalg::unit(n, i)).collect();
    let mut rays: Vec<QVec> = Vec::new();
    let mut processed: Vec<QVec> = Vec::new();

    for c in cs {
        let lin_vals: Vec<Rat> = lineality.iter().map(|l| linalg::dot(&c, l)).collect();
        if let Some(j0) = lin_vals.iter().position(|v| !v.is_zero()) {
            // The constraint cuts the lineality space: one basis vector
            // becomes a ray on the positive side, the rest are projected
            // into the hyperplane, and every existing ray is projected too.
            let mut l0 = lineality.remove(j0);
            let mut v0 = lin_vals[j0].clone();
            if v0 < Rat::zero() {
                l0 = linalg::neg(&l0);
                v0 = -v0;
            }
            for l in lineality.iter_mut() {
                let t = -linalg::dot(&c, l) / &v0;
                *l = linalg::add_scaled(l, &t, &l0);
            }
            for r in rays.iter_mut() {
                let t = -linalg::dot(&c, r) / &v0;
                *r = linalg::primitive(&linalg::add_scaled(r, &t, &l0));
            }
            rays.push(linalg::primitive(&l0));
        } else {
            // Partition rays by the sign of the new constraint.
            let mut pos: Vec<usize> = Vec::new();
            let mut neg: Vec<usize> = Vec::new();
            let vals: Vec<Rat> = rays.iter().map(|r| linalg::dot(&c, r)).collect();
            for (i, v) in vals.iter().enumerate() {
                if v > &Rat::zero() {
                    pos.push(i);
                } else if v < &Rat::zero() {
                    neg.push(i);
                }
            }
            if !neg.is_empty() {
                let target_rank = n as isize - lineality.len() as isize - 2;
                let mut next: Vec<QVec> = Vec::new();
                for (i, r) in rays.iter().enumerate() {
                    if !vals[i].is_negative() {
                        next.push(r.clone());
                    }
                }
                for &p in &pos {
                    for &m in &neg {
                        if adjacent(&processed, &rays[p], &rays[m], target_rank) {
                            // Positive combination vanishing on c.
                            let w = linalg::sub(
                                &linalg::scale(&vals[p], &rays[m]),
                                &linalg::scale(&vals[m], &rays[p]),
                            );
                            next.push(linalg::primitive(&w));
                        }
                    }
                }
                let mut seen = BTreeSet::new();
                rays = next.into_iter().filter(|r| seen.insert(r.clone())).collect();
            }
        }
        processed.push(c);
    }

    DdOutput { lineality, rays }
}

/// Rank-based adjacency: rays `p` and `q` of the current intersection span a
/// two-dimensional face (mod lineality) exactly when the constraints tight at
/// both have rank `n - lineality_dim - 2`.
fn adjacent(processed: &[QVec], p: &[Rat], q: &[Rat], target_rank: isize) -> bool {
    if target_rank < 0 {
        // Fewer than two pointed dimensions: any positive/negative pair of
        // extreme rays is adjacent (this happens only in trivial situations).
        return true;
    }
    let tight: Vec<QVec> = processed
        .iter()
        .filter(|c| linalg::dot(c, p).is_zero() && linalg::dot(c, q).is_zero())
        .cloned()
        .collect();
    linalg::rank(&tight) as isize == target_rank
}
