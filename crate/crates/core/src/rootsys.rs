//! Root data for connected reductive groups.
//!
//! A group is described by its simple factors (Dynkin types), the rank of the
//! central torus, and optionally a cocharacter lattice. The cocharacter space
//! is modelled as `Q^n` with `n = l + z`: coordinate `i < l` of a cocharacter
//! `v` is its pairing with the `i`-th fundamental weight (so the simple
//! coroots are the first `l` standard basis vectors), and the last `z`
//! coordinates span the central directions. Characters live in the dual copy
//! of `Q^n` with the dot-product pairing; a character is dominant exactly
//! when its first `l` coordinates are nonnegative.
//!
//! In these coordinates the `j`-th simple root acts on cocharacters as the
//! `j`-th row of the Cartan matrix (extended by zeros on the central block),
//! simple reflections become explicit integer matrices, and the valuation
//! cone - the antidominant chamber times the central block - is cut out by
//! the inequalities `(Cartan row j) . v <= 0`.

use std::collections::HashSet;

use crate::cones::{Cone, LatticeBasis};
use crate::linalg::{self, QMat, QVec};
use crate::rat::Rat;

/// Default ceiling on the Weyl group order for explicit enumeration.
pub const DEFAULT_WEYL_BOUND: u64 = 1_000_000;

/// Dynkin series letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub fn from_letter(s: &str) -> Option<DynkinType> {
        match s {
            "A" => Some(DynkinType::A),
            "B" => Some(DynkinType::B),
            "C" => Some(DynkinType::C),
            "D" => Some(DynkinType::D),
            "E" => Some(DynkinType::E),
            "F" => Some(DynkinType::F),
            "G" => Some(DynkinType::G),
            _ => None,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            DynkinType::A => "A",
            DynkinType::B => "B",
            DynkinType::C => "C",
            DynkinType::D => "D",
            DynkinType::E => "E",
            DynkinType::F => "F",
            DynkinType::G => "G",
        }
    }
}

/// One simple factor, e.g. `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimpleFactor {
    pub letter: DynkinType,
    pub rank: usize,
}

impl std::fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.letter.letter(), self.rank)
    }
}

/// Input description of a reductive group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSpec {
    pub factors: Vec<SimpleFactor>,
    pub central_rank: usize,
    /// Optional cocharacter lattice basis (rows); defaults to `Z^n`, the
    /// lattice of the simply connected semisimple part times a split torus.
    pub lattice: Option<QMat>,
}

/// Errors from group construction and Weyl computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("factor {letter}{rank} is not a valid Dynkin type: {reason}")]
    BadRank { letter: &'static str, rank: usize, reason: &'static str },
    #[error("the group is empty: no simple factors and no central torus")]
    EmptyGroup,
    #[error("lattice basis must be a {expected}x{expected} matrix, found {found} rows/entries")]
    LatticeShape { expected: usize, found: usize },
    #[error("lattice basis is singular")]
    SingularLattice,
    #[error("coroot {index} is not a point of the given cocharacter lattice")]
    LatticeMissingCoroot { index: usize },
    #[error("vector has length {found}, expected the ambient dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("Weyl group enumeration needs {required} elements, above the bound {bound}; raise the bound to proceed")]
    WeylBoundExceeded { required: u128, bound: u64 },
}

/// A fully built group model: root data plus the coordinate machinery.
#[derive(Debug, Clone)]
pub struct GroupModel {
    factors: Vec<SimpleFactor>,
    l: usize,
    z: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    weyl_order: u128,
    lattice: LatticeBasis,
    valuation: Cone,
}

impl GroupModel {
    /// Validates a [`GroupSpec`] and assembles the model.
    pub fn build(spec: &GroupSpec) -> Result<GroupModel, GroupError> {
        let l: usize = spec.factors.iter().map(|f| f.rank).sum();
        let z = spec.central_rank;
        let n = l + z;
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        for f in &spec.factors {
            check_rank(f)?;
        }

        let cartan = block_cartan(&spec.factors, l);
        let positive_roots = positive_roots_by_closure(&cartan);
        let expected: usize = spec.factors.iter().map(positive_root_count).sum();
        assert_eq!(
            positive_roots.len(),
            expected,
            "positive root closure disagrees with the classical count"
        );
        let weyl_order = spec
            .factors
            .iter()
            .map(weyl_order_of)
            .fold(1u128, |acc, w| acc.saturating_mul(w));

        let lattice = match &spec.lattice {
            None => LatticeBasis::standard(n),
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    let found = if rows.len() != n {
                        rows.len()
                    } else {
                        rows.iter().map(|r| r.len()).find(|&c| c != n).unwrap_or(n)
                    };
                    return Err(GroupError::LatticeShape { expected: n, found });
                }
                let basis =
                    LatticeBasis::new(rows.clone()).map_err(|_| GroupError::SingularLattice)?;
                for i in 0..l {
                    if !basis.contains_unit(i) {
                        return Err(GroupError::LatticeMissingCoroot { index: i + 1 });
                    }
                }
                basis
            }
        };

        // Valuation cone: (Cartan row j extended by zeros) . v <= 0 for all j.
        let constraints: Vec<QVec> = (0..l)
            .map(|j| {
                let mut row = linalg::zeros(n);
                for b in 0..l {
                    row[b] = crate::rat::rat(-cartan[j][b]);
                }
                row
            })
            .collect();
        let valuation = Cone::from_inequalities(n, &constraints).expect("valuation cone");

        Ok(GroupModel {
            factors: spec.factors.clone(),
            l,
            z,
            cartan,
            positive_roots,
            weyl_order,
            lattice,
            valuation,
        })
    }

    /// Semisimple rank: number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.l
    }

    /// Rank of the central torus.
    pub fn central_rank(&self) -> usize {
        self.z
    }

    /// Ambient dimension of the cocharacter space, `l + z`.
    pub fn ambient_dim(&self) -> usize {
        self.l + self.z
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    /// Block-diagonal Cartan matrix of the semisimple part.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots as coefficient vectors over the simple roots.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Number of positive roots whose support lies within the given set of
    /// simple-root indices (0-based).
    pub fn positive_roots_supported_on(&self, allowed: &std::collections::BTreeSet<usize>) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(j, &c)| c == 0 || allowed.contains(&j)))
            .count()
    }

    /// Dimension of the group: rank plus the number of roots.
    pub fn group_dim(&self) -> usize {
        self.ambient_dim() + 2 * self.positive_roots.len()
    }

    /// Order of the Weyl group (product over factors; saturates at `u128::MAX`).
    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    /// The valuation cone: antidominant chamber times the central block.
    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation
    }

    /// Color rays: the simple coroots, i.e. the first `l` basis vectors.
    pub fn colors(&self) -> Vec<QVec> {
        (0..self.l).map(|i| linalg::unit(self.ambient_dim(), i)).collect()
    }

    /// The color ray for 0-based index `i`.
    pub fn color(&self, i: usize) -> QVec {
        linalg::unit(self.ambient_dim(), i)
    }

    /// Simple reflection matrices on the full cocharacter space. Each is an
    /// involution fixing the central block.
    pub fn reflection_matrices(&self) -> Vec<QMat> {
        let n = self.ambient_dim();
        (0..self.l)
            .map(|i| {
                let mut m: QMat = (0..n).map(|a| linalg::unit(n, a)).collect();
                for b in 0..self.l {
                    m[i][b] -= crate::rat::rat(self.cartan[i][b]);
                }
                m
            })
            .collect()
    }

    /// Enumerates the Weyl group as integer matrices on the semisimple block,
    /// refusing when the group order exceeds `bound`.
    pub fn weyl_elements(&self, bound: u64) -> Result<Vec<Vec<i64>>, GroupError> {
        if self.weyl_order > bound as u128 {
            return Err(GroupError::WeylBoundExceeded { required: self.weyl_order, bound });
        }
        let l = self.l;
        let identity: Vec<i64> = flat_identity(l);
        let gens: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut m = flat_identity(l);
                for b in 0..l {
                    m[i * l + b] -= self.cartan[i][b];
                }
                m
            })
            .collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut out = Vec::new();
        while let Some(w) = queue.pop() {
            out.push(w.clone());
            for g in &gens {
                let prod = flat_mul(&w, g, l);
                if seen.insert(prod.clone()) {
                    queue.push(prod);
                }
            }
        }
        assert_eq!(out.len() as u128, self.weyl_order, "Weyl closure disagrees with the order formula");
        Ok(out)
    }

    /// Sum of the Weyl orbit of `v`: semisimple coordinates are averaged to
    /// zero by symmetry, the central block is multiplied by the group order.
    pub fn w_average(&self, v: &[Rat], bound: u64) -> Result<QVec, GroupError> {
        let n = self.ambient_dim();
        if v.len() != n {
            return Err(GroupError::AmbientMismatch { expected: n, found: v.len() });
        }
        let elements = self.weyl_elements(bound)?;
        let l = self.l;
        let mut total = linalg::zeros(n);
        for w in &elements {
            for a in 0..l {
                for b in 0..l {
                    let c = w[a * l + b];
                    if c != 0 {
                        let term = crate::rat::rat(c) * &v[b];
                        total[a] += term;
                    }
                }
            }
        }
        let order = Rat::from_integer(num_bigint::BigInt::from(self.weyl_order));
        for k in l..n {
            total[k] = &order * &v[k];
        }
        Ok(total)
    }
}

fn flat_identity(l: usize) -> Vec<i64> {
    let mut m = vec![0i64; l * l];
    for i in 0..l {
        m[i * l + i] = 1;
    }
    m
}

fn flat_mul(a: &[i64], b: &[i64], l: usize) -> Vec<i64> {
    let mut out = vec![0i64; l * l];
    for i in 0..l {
        for k in 0..l {
            let aik = a[i * l + k];
            if aik != 0 {
                for j in 0..l {
                    out[i * l + j] += aik * b[k * l + j];
                }
            }
        }
    }
    out
}

fn check_rank(f: &SimpleFactor) -> Result<(), GroupError> {
    let letter = f.letter.letter();
    let r = f.rank;
    let bad = |reason| Err(GroupError::BadRank { letter, rank: r, reason });
    match f.letter {
        DynkinType::A | DynkinType::B | DynkinType::C => {
            if r < 1 {
                return bad("rank must be at least 1");
            }
        }
        DynkinType::D => {
            if r < 2 {
                return bad("rank must be at least 2");
            }
        }
        DynkinType::E => {
            if !(6..=8).contains(&r) {
                return bad("rank must be 6, 7 or 8");
            }
        }
        DynkinType::F => {
            if r != 4 {
                return bad("rank must be 4");
            }
        }
        DynkinType::G => {
            if r != 2 {
                return bad("rank must be 2");
            }
        }
    }
    Ok(())
}

/// Cartan matrix of one simple factor, Bourbaki numbering. Entry `(i, j)` is
/// the pairing of simple root `i` with simple coroot `j`.
fn factor_cartan(f: &SimpleFactor) -> Vec<Vec<i64>> {
    let r = f.rank;
    let mut c = vec![vec![0i64; r]; r];
    for i in 0..r {
        c[i][i] = 2;
    }
    let chain = |edges: &[(usize, usize)], c: &mut Vec<Vec<i64>>| {
        for &(a, b) in edges {
            c[a][b] = -1;
            c[b][a] = -1;
        }
    };
    match f.letter {
        DynkinType::A => {
            let edges: Vec<_> = (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
        }
        DynkinType::B => {
            let edges: Vec<_> = (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
            if r >= 2 {
                c[r - 2][r - 1] = -2; // short last root
            }
        }
        DynkinType::C => {
            let edges: Vec<_> = (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
            if r >= 2 {
                c[r - 1][r - 2] = -2; // long last root
            }
        }
        DynkinType::D => {
            if r >= 3 {
                let mut edges: Vec<_> = (0..r - 2).map(|i| (i, i + 1)).collect();
                edges.push((r - 3, r - 1));
                chain(&edges, &mut c);
            }
            // r == 2 is the disconnected A1 x A1 diagram: no edges.
        }
        DynkinType::E => {
            let mut edges = vec![(0, 2), (2, 3), (1, 3)];
            for i in 3..r - 1 {
                edges.push((i, i + 1));
            }
            chain(&edges, &mut c);
        }
        DynkinType::F => {
            chain(&[(0, 1), (1, 2), (2, 3)], &mut c);
            c[1][2] = -2;
        }
        DynkinType::G => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

fn block_cartan(factors: &[SimpleFactor], l: usize) -> Vec<Vec<i64>> {
    let mut cartan = vec![vec![0i64; l]; l];
    let mut offset = 0;
    for f in factors {
        let c = factor_cartan(f);
        for i in 0..f.rank {
            for j in 0..f.rank {
                cartan[offset + i][offset + j] = c[i][j];
            }
        }
        offset += f.rank;
    }
    cartan
}

fn positive_root_count(f: &SimpleFactor) -> usize {
    let r = f.rank;
    match f.letter {
        DynkinType::A => r * (r + 1) / 2,
        DynkinType::B | DynkinType::C => r * r,
        DynkinType::D => r * (r - 1),
        DynkinType::E => match r {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        DynkinType::F => 24,
        DynkinType::G => 6,
    }
}

fn weyl_order_of(f: &SimpleFactor) -> u128 {
    fn fact(k: u128) -> u128 {
        (1..=k).fold(1u128, |a, b| a.saturating_mul(b))
    }
    let r = f.rank as u128;
    match f.letter {
        DynkinType::A => fact(r + 1),
        DynkinType::B | DynkinType::C => (1u128 << r).saturating_mul(fact(r)),
        DynkinType::D => (1u128 << (r - 1)).saturating_mul(fact(r)),
        DynkinType::E => match f.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        DynkinType::F => 1_152,
        DynkinType::G => 12,
    }
}

/// All positive roots from the simple ones: close under simple reflections,
/// keeping the vectors with nonnegative coefficients, until a fixed point.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..l {
        let mut e = vec![0i64; l];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(r) = queue.pop() {
        for i in 0..l {
            // Pairing of the root (as a coefficient vector) with coroot i.
            let p: i64 = (0..l).map(|j| r[j] * cartan[j][i]).sum();
            let mut image = r.clone();
            image[i] -= p;
            if image.iter().all(|&x| x >= 0) && seen.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_i64;
    use crate::rat::{rat, ratio};

    fn model(factors: &[(DynkinType, usize)], z: usize) -> GroupModel {
        let spec = GroupSpec {
            factors: factors.iter().map(|&(letter, rank)| SimpleFactor { letter, rank }).collect(),
            central_rank: z,
            lattice: None,
        };
        GroupModel::build(&spec).unwrap()
    }

    #[test]
    fn positive_root_counts_match_the_classical_table() {
        let cases: Vec<((DynkinType, usize), usize)> = vec![
            ((DynkinType::A, 1), 1),
            ((DynkinType::A, 3), 6),
            ((DynkinType::B, 2), 4),
            ((DynkinType::B, 3), 9),
            ((DynkinType::C, 3), 9),
            ((DynkinType::D, 4), 12),
            ((DynkinType::G, 2), 6),
            ((DynkinType::F, 4), 24),
            ((DynkinType::E, 6), 36),
            ((DynkinType::E, 7), 63),
            ((DynkinType::E, 8), 120),
        ];
        for ((letter, rank), count) in cases {
            let m = model(&[(letter, rank)], 0);
            assert_eq!(m.positive_roots().len(), count, "{}{}", letter.letter(), rank);
        }
        // Degenerate low ranks collapse to the expected small systems.
        assert_eq!(model(&[(DynkinType::B, 1)], 0).positive_roots().len(), 1);
        assert_eq!(model(&[(DynkinType::D, 2)], 0).positive_roots().len(), 2);
        assert_eq!(model(&[(DynkinType::D, 3)], 0).positive_roots().len(), 6);
    }

    #[test]
    fn product_groups_concatenate() {
        let m = model(&[(DynkinType::A, 1), (DynkinType::B, 2)], 2);
        assert_eq!(m.semisimple_rank(), 3);
        assert_eq!(m.ambient_dim(), 5);
        assert_eq!(m.positive_roots().len(), 5);
        assert_eq!(m.weyl_order(), 2 * 8);
        assert_eq!(m.group_dim(), 5 + 2 * 5);
    }

    #[test]
    fn reflections_are_involutions_fixing_the_center() {
        for m in [
            model(&[(DynkinType::A, 2)], 1),
            model(&[(DynkinType::B, 2)], 2),
            model(&[(DynkinType::G, 2)], 1),
        ] {
            let n = m.ambient_dim();
            for s in m.reflection_matrices() {
                // s * s = identity, checked column by column.
                for j in 0..n {
                    let e = linalg::unit(n, j);
                    let twice = linalg::mat_vec(&s, &linalg::mat_vec(&s, &e));
                    assert_eq!(twice, e);
                }
                // Central basis vectors are fixed.
                for k in m.semisimple_rank()..n {
                    assert_eq!(linalg::mat_vec(&s, &linalg::unit(n, k)), linalg::unit(n, k));
                }
            }
        }
    }

    #[test]
    fn weyl_enumeration_matches_order() {
        for (factors, order) in [
            (vec![(DynkinType::A, 2)], 6u128),
            (vec![(DynkinType::B, 2)], 8),
            (vec![(DynkinType::G, 2)], 12),
            (vec![(DynkinType::A, 1), (DynkinType::A, 1)], 4),
        ] {
            let m = model(&factors, 0);
            assert_eq!(m.weyl_elements(DEFAULT_WEYL_BOUND).unwrap().len() as u128, order);
        }
    }

    #[test]
    fn weyl_bound_is_enforced() {
        let m = model(&[(DynkinType::E, 8)], 0);
        let err = m.weyl_elements(DEFAULT_WEYL_BOUND).unwrap_err();
        assert_eq!(
            err,
            GroupError::WeylBoundExceeded { required: 696_729_600, bound: DEFAULT_WEYL_BOUND }
        );
    }

    #[test]
    fn valuation_cone_of_sl2_times_torus() {
        // Worked example: single A1 factor, one central direction; the
        // valuation cone is the left half-plane.
        let m = model(&[(DynkinType::A, 1)], 1);
        let v = m.valuation_cone();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.lineality_dim(), 1);
        assert_eq!(v.rays(), &[vec_i64(&[-1, 0])]);
        assert!(v.contains(&vec_i64(&[-3, 5])));
        assert!(!v.contains(&vec_i64(&[1, 0])));
    }

    #[test]
    fn valuation_cone_of_semisimple_product() {
        // Worked example: A1 x A1 with no center gives the negative quadrant.
        let m = model(&[(DynkinType::A, 1), (DynkinType::A, 1)], 0);
        let v = m.valuation_cone();
        assert!(v.is_strictly_convex());
        assert_eq!(v.rays(), &[vec_i64(&[-1, 0]), vec_i64(&[0, -1])]);
    }

    #[test]
    fn valuation_cone_of_pure_torus() {
        let m = model(&[], 2);
        let v = m.valuation_cone();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.lineality_dim(), 2);
    }

    #[test]
    fn valuation_cone_is_full_dimensional_with_central_lineality() {
        for m in [
            model(&[(DynkinType::A, 2)], 1),
            model(&[(DynkinType::B, 2)], 2),
            model(&[(DynkinType::A, 1), (DynkinType::A, 1)], 1),
        ] {
            let n = m.ambient_dim();
            let l = m.semisimple_rank();
            let v = m.valuation_cone();
            assert_eq!(v.dim(), n);
            assert_eq!(v.lineality_dim(), m.central_rank());
            // The lineality space is exactly the central block.
            for b in v.lineality_basis() {
                for i in 0..l {
                    assert!(b[i] == rat(0));
                }
            }
        }
    }

    #[test]
    fn w_average_examples() {
        let m = model(&[(DynkinType::A, 1)], 1);
        let avg = |v: &[Rat]| m.w_average(v, DEFAULT_WEYL_BOUND).unwrap();
        assert_eq!(avg(&vec_i64(&[-1, 1])), vec_i64(&[0, 2]));
        assert_eq!(avg(&vec_i64(&[0, 1])), vec_i64(&[0, 2]));
        assert_eq!(avg(&vec_i64(&[-1, 0])), vec_i64(&[0, 0]));
        // Rational input stays exact.
        assert_eq!(avg(&[ratio(1, 3), ratio(1, 2)]), vec![rat(0), ratio(1, 1)]);
    }

    #[test]
    fn w_average_is_weyl_invariant() {
        let m = model(&[(DynkinType::B, 2)], 1);
        let v = vec![rat(2), ratio(-3, 2), rat(5)];
        let avg = m.w_average(&v, DEFAULT_WEYL_BOUND).unwrap();
        // Invariant under every simple reflection; semisimple block vanishes.
        for s in m.reflection_matrices() {
            assert_eq!(linalg::mat_vec(&s, &avg), avg);
        }
        assert_eq!(avg[0], rat(0));
        assert_eq!(avg[1], rat(0));
        assert_eq!(avg[2], rat(8 * 5));
    }

    #[test]
    fn bad_specs_are_rejected() {
        let build = |factors: Vec<SimpleFactor>, z| {
            GroupModel::build(&GroupSpec { factors, central_rank: z, lattice: None })
        };
        assert_eq!(build(vec![], 0).unwrap_err(), GroupError::EmptyGroup);
        assert!(matches!(
            build(vec![SimpleFactor { letter: DynkinType::E, rank: 5 }], 0).unwrap_err(),
            GroupError::BadRank { .. }
        ));
        assert!(matches!(
            build(vec![SimpleFactor { letter: DynkinType::D, rank: 1 }], 0).unwrap_err(),
            GroupError::BadRank { .. }
        ));
        assert!(matches!(
            build(vec![SimpleFactor { letter: DynkinType::F, rank: 3 }], 0).unwrap_err(),
            GroupError::BadRank { .. }
        ));

        // Lattice must be square, invertible, and contain the coroots.
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter: DynkinType::A, rank: 1 }],
            central_rank: 1,
            lattice: Some(vec![vec_i64(&[1, 0])]),
        };
        assert!(matches!(GroupModel::build(&spec).unwrap_err(), GroupError::LatticeShape { .. }));
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter: DynkinType::A, rank: 1 }],
            central_rank: 1,
            lattice: Some(vec![vec_i64(&[1, 1]), vec_i64(&[2, 2])]),
        };
        assert_eq!(GroupModel::build(&spec).unwrap_err(), GroupError::SingularLattice);
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter: DynkinType::A, rank: 1 }],
            central_rank: 1,
            lattice: Some(vec![vec_i64(&[2, 0]), vec_i64(&[0, 1])]),
        };
        assert_eq!(
            GroupModel::build(&spec).unwrap_err(),
            GroupError::LatticeMissingCoroot { index: 1 }
        );
    }

    #[test]
    fn lattice_extension_is_accepted() {
        // The Gl2-style lattice containing (1/2, 1/2).
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter: DynkinType::A, rank: 1 }],
            central_rank: 1,
            lattice: Some(vec![vec_i64(&[1, 0]), vec![ratio(1, 2), ratio(1, 2)]]),
        };
        let m = GroupModel::build(&spec).unwrap();
        assert!(m.lattice().contains(&[ratio(1, 2), ratio(1, 2)]));
    }
}
