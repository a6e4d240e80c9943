//! Exact rational polyhedral cones.
//!
//! A [`Cone`] carries both of its descriptions at once: canonical generators
//! (primitive integer extreme rays, reduced modulo the lineality space and
//! sorted lexicographically, plus a canonical lineality basis) and canonical
//! facet data (inequality functionals plus the equations cutting out the
//! span). Construction from an arbitrary generating set normalizes to this
//! form, so `==` decides equality of cones as point sets.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod dd;
mod hilbert;
mod lattice;

pub use hilbert::{hilbert_basis, hilbert_basis_bounded, DEFAULT_HILBERT_DIM_BOUND};
pub use lattice::LatticeBasis;

use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::linalg::{self, QVec};
use crate::lp::{self, Constraint};
use crate::rat::Rat;

/// Errors from cone construction and cone queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("expected vectors of length {expected}, found length {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{operation} requires a strictly convex cone, but the input has nonzero lineality")]
    Lineality { operation: &'static str },
    #[error("ambient dimension {dim} exceeds the supported bound {max} for this operation")]
    DimensionBound { dim: usize, max: usize },
    #[error("lattice basis is singular")]
    SingularLattice,
}

/// A rational polyhedral cone in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    ambient: usize,
    /// Extreme rays: primitive integer vectors, reduced modulo lineality,
    /// sorted lexicographically.
    rays: Vec<QVec>,
    /// Canonical (echelonized, primitive, sorted) basis of the lineality space.
    lineality: Vec<QVec>,
    /// Facet inequality functionals: the extreme rays of the dual cone.
    facets: Vec<QVec>,
    /// Equations cutting out the linear span of the cone.
    span_equations: Vec<QVec>,
    dim: usize,
}

impl Cone {
    /// The cone generated by `gens` in `Q^ambient`. Zero generators are
    /// ignored; vectors of the wrong length are an error.
    pub fn from_generators(ambient: usize, gens: &[QVec]) -> Result<Cone, ConeError> {
        for g in gens {
            if g.len() != ambient {
                return Err(ConeError::DimensionMismatch { expected: ambient, found: g.len() });
            }
        }
        let gens: Vec<QVec> = gens
            .iter()
            .filter(|g| !linalg::is_zero_vec(g))
            .map(|g| linalg::primitive(g))
            .collect();

        // Facet data = generator description of the dual cone.
        let dual = dd::polar_generators(&gens, ambient);
        let mut span_equations: Vec<QVec> = dual.lineality.clone();
        linalg::rref(&mut span_equations);
        let mut span_equations: Vec<QVec> =
            span_equations.iter().map(|r| linalg::primitive_line(r)).collect();
        span_equations.sort_by(|a, b| linalg::lex_cmp(a, b));
        let mut facets = dual.rays;
        facets.sort_by(|a, b| linalg::lex_cmp(a, b));
        facets.dedup();

        let dim = ambient - span_equations.len();

        // Lineality of the cone itself: common kernel of all facet data.
        let mut all_rows = facets.clone();
        all_rows.extend(span_equations.iter().cloned());
        let mut lineality = linalg::kernel_basis(&all_rows, ambient);
        lineality.sort_by(|a, b| linalg::lex_cmp(a, b));
        let lin_dim = lineality.len();

        // Echelon basis of the lineality space, used to reduce ray
        // representatives to a canonical form modulo lineality.
        let mut lin_echelon = lineality.clone();
        let lin_pivots = linalg::rref(&mut lin_echelon);

        // Extreme rays: generators whose tight facet set has full corank.
        let target = ambient as isize - lin_dim as isize - 1;
        let mut rays: Vec<QVec> = Vec::new();
        let mut seen = BTreeSet::new();
        for g in &gens {
            let mut tight: Vec<QVec> = span_equations.clone();
            tight.extend(facets.iter().filter(|f| linalg::dot(f, g).is_zero()).cloned());
            if linalg::rank(&tight) as isize != target {
                continue;
            }
            let mut r = g.clone();
            for (row, &p) in lin_echelon.iter().zip(&lin_pivots) {
                if !r[p].is_zero() {
                    let t = -(&r[p] / &row[p]);
                    r = linalg::add_scaled(&r, &t, row);
                }
            }
            let r = linalg::primitive(&r);
            if !linalg::is_zero_vec(&r) && seen.insert(r.clone()) {
                rays.push(r);
            }
        }
        rays.sort_by(|a, b| linalg::lex_cmp(a, b));

        Ok(Cone { ambient, rays, lineality, facets, span_equations, dim })
    }

    /// The cone `{v : row . v >= 0 for every row}`. Rows of the wrong
    /// length are an error.
    pub fn from_inequalities(ambient: usize, rows: &[QVec]) -> Result<Cone, ConeError> {
        for r in rows {
            if r.len() != ambient {
                return Err(ConeError::DimensionMismatch { expected: ambient, found: r.len() });
            }
        }
        let sol = dd::polar_generators(rows, ambient);
        let mut gens = sol.rays;
        for b in &sol.lineality {
            gens.push(b.clone());
            gens.push(linalg::neg(b));
        }
        Cone::from_generators(ambient, &gens)
    }

    /// The zero cone `{0}`.
    pub fn zero(ambient: usize) -> Cone {
        Cone::from_generators(ambient, &[]).expect("zero cone")
    }

    /// The whole space `Q^ambient` as a cone.
    pub fn full_space(ambient: usize) -> Cone {
        let gens: Vec<QVec> = (0..ambient)
            .flat_map(|i| {
                let e = linalg::unit(ambient, i);
                [linalg::neg(&e), e]
            })
            .collect();
        Cone::from_generators(ambient, &gens).expect("full space")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Contains no line?
    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Canonical extreme rays (modulo lineality).
    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    /// Canonical basis of the lineality space.
    pub fn lineality_basis(&self) -> &[QVec] {
        &self.lineality
    }

    /// Facet inequality functionals (extreme rays of the dual cone).
    pub fn facet_functionals(&self) -> &[QVec] {
        &self.facets
    }

    /// Equations vanishing on the cone (they cut out its span).
    pub fn span_equations(&self) -> &[QVec] {
        &self.span_equations
    }

    /// A full generating set: extreme rays plus both signs of the lineality
    /// basis, sorted. Positive combinations of these sweep out the cone, and
    /// strictly positive combinations sweep out its relative interior.
    pub fn generators(&self) -> Vec<QVec> {
        let mut gens = self.rays.clone();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(linalg::neg(l));
        }
        gens.sort_by(|a, b| linalg::lex_cmp(a, b));
        gens
    }

    /// Exact membership test.
    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.ambient
            && self.facets.iter().all(|f| !linalg::dot(f, x).is_negative())
            && self.span_equations.iter().all(|e| linalg::dot(e, x).is_zero())
    }

    /// The dual cone `{y : y . x >= 0 for all x in self}`.
    pub fn dual(&self) -> Cone {
        let mut gens = self.facets.clone();
        for e in &self.span_equations {
            gens.push(e.clone());
            gens.push(linalg::neg(e));
        }
        Cone::from_generators(self.ambient, &gens).expect("dual cone")
    }

    /// Intersection of two cones in the same ambient space.
    pub fn intersect(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.ambient != other.ambient {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let mut constraints = self.facets.clone();
        constraints.extend(other.facets.iter().cloned());
        for e in self.span_equations.iter().chain(&other.span_equations) {
            constraints.push(e.clone());
            constraints.push(linalg::neg(e));
        }
        let out = dd::polar_generators(&constraints, self.ambient);
        let mut gens = out.rays;
        for l in &out.lineality {
            gens.push(l.clone());
            gens.push(linalg::neg(l));
        }
        Cone::from_generators(self.ambient, &gens)
    }

    /// Minkowski sum: the cone generated by both generator sets together.
    pub fn minkowski_sum(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.ambient != other.ambient {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let mut gens = self.generators();
        gens.extend(other.generators());
        Cone::from_generators(self.ambient, &gens)
    }

    /// All faces of a strictly convex cone, from `{0}` up to the cone itself,
    /// sorted by dimension and then by generators.
    pub fn faces(&self) -> Result<Vec<Cone>, ConeError> {
        if !self.is_strictly_convex() {
            return Err(ConeError::Lineality { operation: "face enumeration" });
        }
        // Faces of a pointed cone are exactly the intersections of facet ray
        // sets; close the seed family under pairwise intersection.
        let full: BTreeSet<usize> = (0..self.rays.len()).collect();
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| {
                (0..self.rays.len())
                    .filter(|&i| linalg::dot(f, &self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut known: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        known.insert(full.clone());
        let mut queue: Vec<BTreeSet<usize>> = vec![full];
        while let Some(current) = queue.pop() {
            for fs in &facet_sets {
                let next: BTreeSet<usize> = current.intersection(fs).cloned().collect();
                if known.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut faces: Vec<Cone> = known
            .into_iter()
            .map(|set| {
                let gens: Vec<QVec> = set.iter().map(|&i| self.rays[i].clone()).collect();
                Cone::from_generators(self.ambient, &gens).expect("face cone")
            })
            .collect();
        faces.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.rays.len().cmp(&b.rays.len()))
                .then_with(|| {
                    for (x, y) in a.rays.iter().zip(&b.rays) {
                        match linalg::lex_cmp(x, y) {
                            std::cmp::Ordering::Equal => continue,
                            other => return other,
                        }
                    }
                    std::cmp::Ordering::Equal
                })
        });
        Ok(faces)
    }

    /// Is this cone a face of `other`? (Both must live in the same space.)
    /// A face here means: a subset of `other` on which some valid inequality
    /// of `other` is tight; used for containment-style queries in reports.
    pub fn is_subset_of(&self, other: &Cone) -> bool {
        self.ambient == other.ambient && self.generators().iter().all(|g| other.contains(g))
    }

    /// Does the relative interior of `self` meet `other`?
    ///
    /// Decided by exact feasibility: a point of the relative interior is a
    /// combination of all generators with coefficients >= 1 (scale freedom
    /// makes ">= 1" equivalent to "> 0").
    pub fn relint_meets(&self, other: &Cone) -> bool {
        self.relint_point_in(other).is_some()
    }

    /// A rational point of `relint(self) ∩ other`, if one exists: the sum of
    /// the generators weighted by a feasible coefficient vector.
    pub fn relint_point_in(&self, other: &Cone) -> Option<QVec> {
        if self.ambient != other.ambient {
            return None;
        }
        let gens = self.generators();
        let k = gens.len();
        let mut constraints: Vec<Constraint> = Vec::new();
        for i in 0..k {
            constraints.push(Constraint::ge(linalg::unit(k, i), Rat::one()));
        }
        for f in &other.facets {
            let row: QVec = gens.iter().map(|g| linalg::dot(f, g)).collect();
            constraints.push(Constraint::ge(row, Rat::zero()));
        }
        for e in &other.span_equations {
            let row: QVec = gens.iter().map(|g| linalg::dot(e, g)).collect();
            constraints.push(Constraint::eq(row, Rat::zero()));
        }
        match lp::feasibility(k, &constraints) {
            lp::Feasibility::Feasible(lambda) => {
                let mut point = linalg::zeros(self.ambient);
                for (c, g) in lambda.iter().zip(&gens) {
                    point = linalg::add_scaled(&point, c, g);
                }
                debug_assert!(other.contains(&point));
                Some(point)
            }
            lp::Feasibility::Infeasible(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_i64;

    fn cone2(gens: &[&[i64]]) -> Cone {
        let v: Vec<QVec> = gens.iter().map(|g| vec_i64(g)).collect();
        Cone::from_generators(gens.first().map_or(2, |g| g.len()), &v).unwrap()
    }

    #[test]
    fn canonical_form_prunes_and_sorts() {
        // (2,2) is redundant between (1,0) and (0,1); (3,3) duplicates it.
        let c = cone2(&[&[1, 0], &[2, 2], &[0, 1], &[3, 3]]);
        assert_eq!(c.rays(), &[vec_i64(&[0, 1]), vec_i64(&[1, 0])]);
        assert!(c.is_strictly_convex());
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn equality_is_presentation_independent() {
        let a = cone2(&[&[1, 0], &[1, 2]]);
        let b = cone2(&[&[2, 0], &[1, 1], &[1, 2]]);
        assert_eq!(a, b);
        let c = cone2(&[&[1, 0], &[1, 3]]);
        assert_ne!(a, c);
    }

    #[test]
    fn dual_of_first_quadrant_examples() {
        // Worked examples: quadrant is self-dual; a ray dualizes to a
        // half-plane; a wedge dualizes to a wedge.
        let quadrant = cone2(&[&[1, 0], &[0, 1]]);
        assert_eq!(quadrant.dual(), quadrant);

        let ray = cone2(&[&[1, 0]]);
        let half = ray.dual();
        assert_eq!(half.rays(), &[vec_i64(&[1, 0])]);
        assert_eq!(half.lineality_dim(), 1);
        assert_eq!(half.dim(), 2);
        let gens = half.generators();
        assert_eq!(gens, vec![vec_i64(&[0, -1]), vec_i64(&[0, 1]), vec_i64(&[1, 0])]);

        let wedge = cone2(&[&[-1, -1], &[1, 0]]);
        let dual = wedge.dual();
        assert_eq!(dual.rays(), &[vec_i64(&[0, -1]), vec_i64(&[1, -1])]);
    }

    #[test]
    fn double_dual_is_identity() {
        for gens in [
            vec![vec_i64(&[1, 0, 0]), vec_i64(&[1, 1, 0]), vec_i64(&[1, 1, 1])],
            vec![vec_i64(&[1, 0, 0]), vec_i64(&[-1, 0, 0]), vec_i64(&[0, 1, 2])],
            vec![],
        ] {
            let c = Cone::from_generators(3, &gens).unwrap();
            assert_eq!(c.dual().dual(), c);
        }
    }

    #[test]
    fn strict_convexity_detection() {
        assert!(cone2(&[&[1, 0], &[0, 1]]).is_strictly_convex());
        assert!(Cone::zero(3).is_strictly_convex());
        assert!(!cone2(&[&[0, 1], &[0, -1], &[1, 0]]).is_strictly_convex());
        assert!(!cone2(&[&[1, 1], &[-1, -1]]).is_strictly_convex());
    }

    #[test]
    fn face_counts() {
        // Quadrant: {0}, two edges, itself.
        assert_eq!(cone2(&[&[1, 0], &[0, 1]]).faces().unwrap().len(), 4);
        // A single ray: {0} and itself.
        assert_eq!(cone2(&[&[1, 0]]).faces().unwrap().len(), 2);
        // Zero cone: just itself.
        assert_eq!(Cone::zero(2).faces().unwrap().len(), 1);
        // Simplicial 3-cone: 8 faces.
        let c = Cone::from_generators(
            3,
            &[vec_i64(&[1, 0, 0]), vec_i64(&[0, 1, 0]), vec_i64(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(c.faces().unwrap().len(), 8);
        // Square-based 4-ray cone: {0} + 4 edges + 4 facets + itself = 10.
        let c = Cone::from_generators(
            3,
            &[
                vec_i64(&[1, 1, 1]),
                vec_i64(&[-1, 1, 1]),
                vec_i64(&[-1, -1, 1]),
                vec_i64(&[1, -1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(c.faces().unwrap().len(), 10);
    }

    #[test]
    fn faces_need_strict_convexity() {
        let line = cone2(&[&[1, 1], &[-1, -1]]);
        assert!(matches!(line.faces(), Err(ConeError::Lineality { .. })));
    }

    #[test]
    fn relint_queries() {
        let left = Cone::from_generators(2, &[vec_i64(&[-1, 0])]).unwrap().dual(); // {x <= 0}... dual of ray(-1,0) = {y : -y1 >= 0}
        assert_eq!(left.rays(), &[vec_i64(&[-1, 0])]);
        // relint of a ray inside the half-plane it bounds: meets.
        let edge = cone2(&[&[0, 1]]);
        assert!(edge.relint_meets(&left));
        // Worked example: relint(cone((1,0))) misses {v1 <= 0}.
        let right = cone2(&[&[1, 0]]);
        assert!(!right.relint_meets(&left));
        // Worked example: relint(cone((-1,-1),(0,-1))) meets it, e.g. (-1,-2).
        let wedge = cone2(&[&[-1, -1], &[0, -1]]);
        let witness = wedge.relint_point_in(&left).unwrap();
        assert!(left.contains(&witness));
        assert!(witness[0].is_negative());
        // The zero cone's relative interior is {0}, which lies in every cone.
        assert!(Cone::zero(2).relint_meets(&left));
    }

    #[test]
    fn minkowski_and_intersection() {
        let a = cone2(&[&[1, 0]]);
        let b = cone2(&[&[0, 1]]);
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum, cone2(&[&[1, 0], &[0, 1]]));

        let wedge = cone2(&[&[-1, -1], &[1, 0]]);
        let lower = cone2(&[&[-1, 0], &[0, -1]]);
        let both = wedge.intersect(&lower).unwrap();
        assert_eq!(both.rays(), &[vec_i64(&[-1, -1]), vec_i64(&[0, -1])]);
    }

    #[test]
    fn membership_matches_facets() {
        let c = cone2(&[&[-1, -1], &[1, 0]]);
        assert!(c.contains(&vec_i64(&[0, -5])));
        assert!(c.contains(&vec_i64(&[3, -1])));
        assert!(!c.contains(&vec_i64(&[0, 1])));
        // Low-dimensional cone: span equations must hold.
        let ray = cone2(&[&[1, 2]]);
        assert!(ray.contains(&vec_i64(&[2, 4])));
        assert!(!ray.contains(&vec_i64(&[2, 5])));
        assert!(!ray.contains(&vec_i64(&[-1, -2])));
    }

    #[test]
    fn full_space_and_zero() {
        let f = Cone::full_space(2);
        assert_eq!(f.dim(), 2);
        assert_eq!(f.lineality_dim(), 2);
        assert!(f.rays().is_empty());
        let z = Cone::zero(2);
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&vec_i64(&[0, 0])));
        assert!(!z.contains(&vec_i64(&[1, 0])));
        assert_eq!(f.dual(), z);
        assert_eq!(z.dual(), f);
    }
}
