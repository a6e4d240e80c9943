//! Hilbert bases of pointed rational cones with respect to a lattice.
//!
//! The algorithm is the classical one: triangulate the cone into simplicial
//! subcones on its extreme rays, enumerate the lattice points of each
//! fundamental zonotope `{sum t_i v_i : 0 <= t_i <= 1}`, pool the candidates
//! and discard every reducible one. What remains is the unique minimal
//! generating set of the monoid `cone ∩ lattice`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use super::{Cone, ConeError, LatticeBasis};
use crate::linalg::{self, QVec};
use crate::rat::Rat;

/// Ambient-dimension guard: the zonotope enumeration is exponential in the
/// dimension, so anything past this is refused rather than attempted.
pub const DEFAULT_HILBERT_DIM_BOUND: usize = 6;

/// Hilbert basis of `c ∩ lattice` with the default dimension guard.
pub fn hilbert_basis(c: &Cone, lattice: &LatticeBasis) -> Result<Vec<QVec>, ConeError> {
    hilbert_basis_bounded(c, lattice, DEFAULT_HILBERT_DIM_BOUND)
}

/// Hilbert basis of `c ∩ lattice`, refusing ambient dimensions above
/// `max_dim`. The cone must be strictly convex.
pub fn hilbert_basis_bounded(
    c: &Cone,
    lattice: &LatticeBasis,
    max_dim: usize,
) -> Result<Vec<QVec>, ConeError> {
    let n = c.ambient_dim();
    if lattice.ambient_dim() != n {
        return Err(ConeError::DimensionMismatch { expected: n, found: lattice.ambient_dim() });
    }
    if n > max_dim {
        return Err(ConeError::DimensionBound { dim: n, max: max_dim });
    }
    if !c.is_strictly_convex() {
        return Err(ConeError::Lineality { operation: "Hilbert basis computation" });
    }
    if c.dim() == 0 {
        return Ok(Vec::new());
    }

    // Work in lattice coordinates, where the lattice is Z^n.
    let gens: Vec<QVec> = c
        .rays()
        .iter()
        .map(|r| linalg::primitive(&lattice.coords(r)))
        .collect();
    let local = Cone::from_generators(n, &gens).expect("cone in lattice coordinates");

    let mut candidates: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for simplex in triangulate(&local) {
        enumerate_zonotope(&simplex, &mut candidates);
    }
    for r in local.rays() {
        candidates.insert(to_int(r));
    }
    candidates.remove(&vec![BigInt::zero(); n]);

    // A candidate h is reducible when h = g + (h - g) splits it into two
    // nonzero monoid elements; testing g over the candidate pool suffices
    // because the pool generates the monoid.
    let pool: Vec<Vec<BigInt>> = candidates.iter().cloned().collect();
    let mut basis: Vec<QVec> = Vec::new();
    for h in &pool {
        let hq: QVec = h.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let reducible = pool.iter().any(|g| {
            if g == h {
                return false;
            }
            let diff: Vec<BigInt> = h.iter().zip(g).map(|(a, b)| a - b).collect();
            if diff.iter().all(|x| x.is_zero()) {
                return false;
            }
            let dq: QVec = diff.iter().map(|x| Rat::from_integer(x.clone())).collect();
            local.contains(&dq)
        });
        if !reducible {
            basis.push(lattice.from_coords(&hq));
        }
    }
    basis.sort_by(|a, b| linalg::lex_cmp(a, b));
    Ok(basis)
}

fn to_int(v: &[Rat]) -> Vec<BigInt> {
    v.iter().map(|x| x.numer().clone()).collect()
}

/// Splits a pointed cone into simplicial subcones spanned by its own extreme
/// rays (a pulling triangulation: join the first ray with the triangulated
/// facets that do not contain it).
fn triangulate(c: &Cone) -> Vec<Vec<QVec>> {
    let rays = c.rays().to_vec();
    if rays.len() == c.dim() {
        return vec![rays];
    }
    let apex = rays[0].clone();
    let mut simplices = Vec::new();
    for f in c.facet_functionals() {
        if linalg::dot(f, &apex).is_zero() {
            continue; // facet contains the apex
        }
        let facet_rays: Vec<QVec> = rays
            .iter()
            .filter(|r| linalg::dot(f, r).is_zero())
            .cloned()
            .collect();
        let facet = Cone::from_generators(c.ambient_dim(), &facet_rays).expect("facet cone");
        for mut simplex in triangulate(&facet) {
            simplex.push(apex.clone());
            simplices.push(simplex);
        }
    }
    simplices
}

/// Collects the integer points of `{sum t_i v_i : 0 <= t_i <= 1}` for an
/// independent family of integer vectors, by scanning the bounding box and
/// solving for the coefficients exactly.
fn enumerate_zonotope(simplex: &[QVec], out: &mut BTreeSet<Vec<BigInt>>) {
    let n = simplex.first().map_or(0, |v| v.len());
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for v in simplex {
        for j in 0..n {
            let x = v[j].numer();
            if x.is_negative() {
                lo[j] += x;
            } else {
                hi[j] += x;
            }
        }
    }
    let lo: Vec<i64> = lo.iter().map(|x| x.to_i64().expect("box bound")).collect();
    let hi: Vec<i64> = hi.iter().map(|x| x.to_i64().expect("box bound")).collect();

    let mut point = vec![0i64; n];
    scan(simplex, &lo, &hi, 0, &mut point, out);
}

fn scan(
    simplex: &[QVec],
    lo: &[i64],
    hi: &[i64],
    j: usize,
    point: &mut Vec<i64>,
    out: &mut BTreeSet<Vec<BigInt>>,
) {
    if j == lo.len() {
        let x: QVec = point.iter().map(|&v| crate::rat::rat(v)).collect();
        if let Some(t) = linalg::solve_columns(simplex, &x) {
            let one = Rat::from_integer(1.into());
            if t.iter().all(|ti| !ti.is_negative() && *ti <= one) {
                out.insert(point.iter().map(|&v| BigInt::from(v)).collect());
            }
        }
        return;
    }
    for v in lo[j]..=hi[j] {
        point[j] = v;
        scan(simplex, lo, hi, j + 1, point, out);
    }
}
