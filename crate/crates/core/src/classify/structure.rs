//! Structure theory derived from a colored cone: weight monoid,
//! quasi-direct product decomposition, decoloration, central quotients and
//! the Weyl-averaged central witness.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::classify::{ClassifyError, ColoredCone};
use crate::cones::{hilbert_basis, Cone, LatticeBasis};
use crate::linalg::{self, QVec};
use crate::rat::Rat;
use crate::rootsys::{GroupModel, GroupSpec};

/// Dominant lattice characters of the coordinate ring up to a height bound,
/// indexing its simple-bimodule decomposition in characteristic zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedWeights {
    /// The requested bound on the sup-norm of the characters.
    pub height: i64,
    /// All dominant lattice characters of the dual cone with sup-norm at
    /// most `height`, in lexicographic order.
    pub weights: Vec<QVec>,
}

/// The weight monoid of the embedding: dominant lattice characters that are
/// non-negative on the cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMonoidData {
    /// The dual cone of the colored cone, in character coordinates.
    pub dual_cone: Cone,
    /// `dual_cone` intersected with the dominant chamber.
    pub dominant_part: Cone,
    /// Hilbert basis of the dominant part with respect to the character
    /// lattice (the dual of the cocharacter lattice).
    pub hilbert_basis: Vec<QVec>,
    /// Whether the dual cone already consists of dominant characters.
    pub all_dominant: bool,
    /// Height-bounded listing of the weight monoid, if requested.
    pub bounded: Option<BoundedWeights>,
}

/// The dominant chamber `{chi : chi(coroot_i) >= 0}` in character space.
fn dominant_chamber(model: &GroupModel) -> Cone {
    let n = model.ambient_dim();
    let rows: Vec<QVec> = (0..model.semisimple_rank()).map(|i| linalg::unit(n, i)).collect();
    Cone::from_inequalities(n, &rows).expect("coordinate half-spaces form a cone")
}

fn enumerate_bounded(
    dominant_part: &Cone,
    lattice: &LatticeBasis,
    height: i64,
) -> Vec<QVec> {
    let n = lattice.ambient_dim();
    if n == 0 {
        return if height >= 0 { vec![QVec::new()] } else { Vec::new() };
    }
    let h = Rat::from_integer(height.into());
    let inv = linalg::inverse(lattice.basis_rows()).expect("lattice bases are nonsingular");
    // A character chi with |chi_j| <= h has lattice coordinates c = chi . B^{-1}
    // bounded coordinate-wise by h times the column sums of |B^{-1}|.
    let bounds: Vec<i64> = (0..n)
        .map(|i| {
            let col_sum: Rat = (0..n).map(|j| inv[j][i].abs()).sum();
            let b = &h * &col_sum;
            b.ceil().to_integer().try_into().unwrap_or(i64::MAX)
        })
        .collect();
    let mut out = Vec::new();
    let mut c: Vec<i64> = bounds.iter().map(|b| -b).collect();
    'outer: loop {
        let coords: QVec = c.iter().map(|&x| Rat::from_integer(x.into())).collect();
        let chi = lattice.from_coords(&coords);
        if chi.iter().all(|x| x.abs() <= h) && dominant_part.contains(&chi) {
            out.push(chi);
        }
        for i in 0..n {
            if c[i] < bounds[i] {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = -bounds[i];
        }
        break;
    }
    out.sort_by(|a, b| linalg::lex_cmp(a, b));
    out
}

/// Computes the weight monoid of the embedding: the dual cone of `cc`
/// intersected with the dominant chamber, described by its Hilbert basis
/// with respect to the character lattice. When `height` is given, also
/// lists every member character of sup-norm at most `height`.
pub fn weight_monoid(
    model: &GroupModel,
    cc: &ColoredCone,
    height: Option<i64>,
) -> Result<WeightMonoidData, ClassifyError> {
    let dual_cone = cc.cone().dual();
    let chamber = dominant_chamber(model);
    let dominant_part = dual_cone.intersect(&chamber)?;
    let character_lattice = model.lattice().dual();
    let hb = hilbert_basis(&dominant_part, &character_lattice)?;
    let all_dominant = dual_cone.is_subset_of(&chamber);
    let bounded = height.map(|h| BoundedWeights {
        height: h,
        weights: enumerate_bounded(&dominant_part, &character_lattice, h),
    });
    Ok(WeightMonoidData { dual_cone, dominant_part, hilbert_basis: hb, all_dominant, bounded })
}

/// The quasi-direct product data `S ~ (G1 x S0) / Gamma`: the span of the
/// cone carries the monoid-with-kernel factor `S0`, the remaining simple
/// factors stay a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Basis of the linear span of the cone; the chosen colors come first,
    /// so color `i` of `s0` is row `i` of this basis.
    pub g2_span: Vec<QVec>,
    /// Colors of the group factor `G1` (0-based): those outside `F`.
    pub g1_color_indices: BTreeSet<usize>,
    /// Colors of the factor carrying the cone (0-based): exactly `F`.
    pub g2_color_indices: BTreeSet<usize>,
    /// The colored cone of `S0`, written in coordinates of `g2_span`.
    pub s0_colored_cone: ColoredCone,
}

/// Splits the monoid along the span of its cone. Every chosen color must
/// lie in the span and every omitted color outside it; otherwise the data
/// does not decompose and `SpanMismatch` reports the offending color
/// (1-based).
pub fn quasi_direct_decompose(
    model: &GroupModel,
    cc: &ColoredCone,
) -> Result<Decomposition, ClassifyError> {
    let l = model.semisimple_rank();
    let gens = cc.cone().generators();
    let mut echelon = gens.clone();
    linalg::rref(&mut echelon);
    echelon.retain(|r| !linalg::is_zero_vec(r));
    for i in 0..l {
        let inside = linalg::in_span(&echelon, &model.color(i));
        let chosen = cc.colors().contains(&i);
        if chosen != inside {
            return Err(ClassifyError::SpanMismatch { index: i + 1 });
        }
    }
    // Basis of the span with the chosen color rays first.
    let mut basis: Vec<QVec> = cc.colors().iter().map(|&i| model.color(i)).collect();
    for v in &echelon {
        if linalg::rank(&{
            let mut rows = basis.clone();
            rows.push(v.clone());
            rows
        }) > basis.len()
        {
            basis.push(v.clone());
        }
    }
    debug_assert_eq!(basis.len(), cc.cone().dim());
    let coords_of = |v: &QVec| -> QVec {
        linalg::solve_columns(&basis, v).expect("cone generators lie in the span basis")
    };
    let s0_cone = Cone::from_generators(basis.len(), &gens.iter().map(coords_of).collect::<Vec<_>>())?;
    let s0_colors: BTreeSet<usize> = (0..cc.colors().len()).collect();
    Ok(Decomposition {
        g2_span: basis,
        g1_color_indices: (0..l).filter(|i| !cc.colors().contains(i)).collect(),
        g2_color_indices: cc.colors().clone(),
        s0_colored_cone: ColoredCone::new_unchecked(s0_cone, s0_colors),
    })
}

/// The decoloration: the cone cut down to the valuation cone, with no
/// colors. It indexes the minimal embedding dominating this one with the
/// same invariant valuations.
pub fn decoloration(model: &GroupModel, cc: &ColoredCone) -> Cone {
    cc.cone()
        .intersect(model.valuation_cone())
        .expect("the cone and the valuation cone share an ambient space")
}

/// Replaces the cocharacter lattice by a finer one (a central quotient of
/// the group). The colored-cone data is unchanged; weight monoids change
/// with the dual lattice.
pub fn central_quotient(
    model: &GroupModel,
    new_lattice: &LatticeBasis,
) -> Result<GroupModel, ClassifyError> {
    let n = model.ambient_dim();
    if new_lattice.ambient_dim() != n {
        return Err(ClassifyError::AmbientMismatch {
            expected: n,
            found: new_lattice.ambient_dim(),
        });
    }
    for i in 0..model.semisimple_rank() {
        if !new_lattice.contains_unit(i) {
            return Err(ClassifyError::MissingCoroots { index: i + 1 });
        }
    }
    if !new_lattice.contains_lattice(model.lattice()) {
        return Err(ClassifyError::NotCommensurable);
    }
    let spec = GroupSpec {
        factors: model.factors().to_vec(),
        central_rank: model.central_rank(),
        lattice: Some(new_lattice.basis_rows().clone()),
    };
    Ok(GroupModel::build(&spec)?)
}

/// The Weyl-averaged central witness: a point of the relative interior of
/// the cone inside the valuation cone, averaged over the Weyl group. For a
/// valid colored cone of positive dimension the result is a nonzero vector
/// supported on the central coordinates, witnessing that the closure of the
/// connected center meets every orbit.
pub fn central_witness(
    model: &GroupModel,
    cc: &ColoredCone,
    weyl_bound: u64,
) -> Result<QVec, ClassifyError> {
    if cc.cone().dim() == 0 {
        return Err(ClassifyError::TrivialCone { operation: "the central witness" });
    }
    let lambda = cc
        .cone()
        .relint_point_in(model.valuation_cone())
        .expect("valid colored cones have an interior valuation");
    let mu = model.w_average(&lambda, weyl_bound)?;
    debug_assert!((0..model.semisimple_rank()).all(|i| mu[i].is_zero()));
    if mu.iter().all(Zero::is_zero) {
        return Err(ClassifyError::WitnessZero);
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::tests::{a1z1, model};
    use crate::classify::validate_colored_cone;
    use crate::linalg::vec_i64;
    use crate::rat::{rat, ratio};
    use crate::rootsys::{DynkinType, SimpleFactor};

    fn cone(ambient: usize, gens: &[&[i64]]) -> Cone {
        let v: Vec<QVec> = gens.iter().map(|g| vec_i64(g)).collect();
        Cone::from_generators(ambient, &v).unwrap()
    }

    fn cc_of(m: &GroupModel, c: &Cone, colors: &[usize]) -> ColoredCone {
        validate_colored_cone(m, c, &colors.iter().copied().collect()).unwrap()
    }

    fn zero_monoid(m: &GroupModel) -> ColoredCone {
        cc_of(m, &cone(2, &[&[-1, -1], &[1, 0]]), &[0])
    }

    #[test]
    fn weight_monoid_of_the_zero_monoid() {
        let m = a1z1();
        let w = weight_monoid(&m, &zero_monoid(&m), None).unwrap();
        assert_eq!(w.dual_cone, cone(2, &[&[0, -1], &[1, -1]]));
        assert_eq!(w.hilbert_basis, vec![vec_i64(&[0, -1]), vec_i64(&[1, -1])]);
        assert!(w.all_dominant);
        assert!(w.bounded.is_none());
    }

    #[test]
    fn weight_monoid_of_the_affine_line_torus() {
        let m = model(&[], 1);
        let cc = cc_of(&m, &cone(1, &[&[1]]), &[]);
        let w = weight_monoid(&m, &cc, Some(3)).unwrap();
        assert_eq!(w.hilbert_basis, vec![vec_i64(&[1])]);
        assert!(w.all_dominant);
        let b = w.bounded.unwrap();
        assert_eq!(
            b.weights,
            vec![vec_i64(&[0]), vec_i64(&[1]), vec_i64(&[2]), vec_i64(&[3])]
        );
    }

    #[test]
    fn weight_monoid_over_the_finer_lattice() {
        let spec = GroupSpec {
            factors: vec![SimpleFactor { letter: DynkinType::A, rank: 1 }],
            central_rank: 1,
            lattice: Some(vec![
                vec![rat(1), rat(0)],
                vec![ratio(1, 2), ratio(1, 2)],
            ]),
        };
        let m = GroupModel::build(&spec).unwrap();
        let w = weight_monoid(&m, &zero_monoid(&m), Some(2)).unwrap();
        assert_eq!(w.hilbert_basis, vec![vec_i64(&[0, -2]), vec_i64(&[1, -1])]);
        let b = w.bounded.unwrap();
        assert_eq!(
            b.weights,
            vec![
                vec_i64(&[0, -2]),
                vec_i64(&[0, 0]),
                vec_i64(&[1, -1]),
                vec_i64(&[2, -2]),
            ]
        );
    }

    #[test]
    fn bounded_weights_respect_the_height() {
        let m = a1z1();
        let w = weight_monoid(&m, &zero_monoid(&m), Some(2)).unwrap();
        let b = w.bounded.unwrap();
        assert_eq!(
            b.weights,
            vec![
                vec_i64(&[0, -2]),
                vec_i64(&[0, -1]),
                vec_i64(&[0, 0]),
                vec_i64(&[1, -2]),
                vec_i64(&[1, -1]),
                vec_i64(&[2, -2]),
            ]
        );
    }

    #[test]
    fn decompose_the_block_product() {
        let m = model(&[(DynkinType::A, 1), (DynkinType::A, 1)], 2);
        let c = cone(4, &[&[0, -1, 0, -1], &[0, 1, 0, 0]]);
        let cc = cc_of(&m, &c, &[1]);
        let d = quasi_direct_decompose(&m, &cc).unwrap();
        assert_eq!(d.g2_span, vec![vec_i64(&[0, 1, 0, 0]), vec_i64(&[0, 0, 0, 1])]);
        assert_eq!(d.g1_color_indices, [0usize].into_iter().collect());
        assert_eq!(d.g2_color_indices, [1usize].into_iter().collect());
        assert_eq!(d.s0_colored_cone.cone(), &cone(2, &[&[-1, -1], &[1, 0]]));
        assert_eq!(d.s0_colored_cone.colors(), &[0usize].into_iter().collect());
    }

    #[test]
    fn decompose_a_monoid_with_zero_keeps_everything() {
        let m = a1z1();
        let cc = zero_monoid(&m);
        let d = quasi_direct_decompose(&m, &cc).unwrap();
        assert!(d.g1_color_indices.is_empty());
        assert_eq!(d.g2_color_indices, [0usize].into_iter().collect());
        assert_eq!(d.s0_colored_cone.cone().dim(), 2);
        assert_eq!(d.g2_span[0], vec_i64(&[1, 0]));
    }

    #[test]
    fn decompose_the_group_itself() {
        let m = a1z1();
        let cc = cc_of(&m, &Cone::zero(2), &[]);
        let d = quasi_direct_decompose(&m, &cc).unwrap();
        assert!(d.g2_span.is_empty());
        assert_eq!(d.g1_color_indices, [0usize].into_iter().collect());
        assert!(d.g2_color_indices.is_empty());
        assert_eq!(d.s0_colored_cone.cone().dim(), 0);
    }

    #[test]
    fn decompose_rejects_a_span_crossing_omitted_colors() {
        let m = a1z1();
        let cc = cc_of(&m, &cone(2, &[&[-1, -1], &[0, -1]]), &[]);
        assert_eq!(
            quasi_direct_decompose(&m, &cc).unwrap_err(),
            ClassifyError::SpanMismatch { index: 1 }
        );
    }

    #[test]
    fn decoloration_of_the_zero_monoid() {
        let m = a1z1();
        assert_eq!(decoloration(&m, &zero_monoid(&m)), cone(2, &[&[-1, -1], &[0, -1]]));
    }

    #[test]
    fn decoloration_fixes_cones_already_inside_the_valuation_cone() {
        let m = a1z1();
        let c = cone(2, &[&[0, 1]]);
        let cc = cc_of(&m, &c, &[]);
        assert_eq!(decoloration(&m, &cc), c);
    }

    #[test]
    fn central_quotient_identity_is_a_no_op() {
        let m = a1z1();
        let q = central_quotient(&m, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(q.lattice().basis_rows(), m.lattice().basis_rows());
        assert_eq!(q.cartan(), m.cartan());
    }

    #[test]
    fn central_quotient_keeps_colored_cones_and_changes_weights() {
        let m = a1z1();
        let finer = LatticeBasis::new(vec![
            vec![rat(1), rat(0)],
            vec![ratio(1, 2), ratio(1, 2)],
        ])
        .unwrap();
        let q = central_quotient(&m, &finer).unwrap();
        let c = cone(2, &[&[-1, -1], &[1, 0]]);
        let colors = [0usize].into_iter().collect();
        assert_eq!(
            validate_colored_cone(&m, &c, &colors).unwrap().cone(),
            validate_colored_cone(&q, &c, &colors).unwrap().cone()
        );
        let before = weight_monoid(&m, &zero_monoid(&m), None).unwrap();
        let after = weight_monoid(&q, &zero_monoid(&q), None).unwrap();
        assert_eq!(before.hilbert_basis, vec![vec_i64(&[0, -1]), vec_i64(&[1, -1])]);
        assert_eq!(after.hilbert_basis, vec![vec_i64(&[0, -2]), vec_i64(&[1, -1])]);
    }

    #[test]
    fn central_quotient_rejects_coarser_lattices() {
        let m = a1z1();
        let coarser = LatticeBasis::new(vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(2)],
        ])
        .unwrap();
        assert_eq!(
            central_quotient(&m, &coarser).unwrap_err(),
            ClassifyError::NotCommensurable
        );
        let no_coroot = LatticeBasis::new(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), rat(1)],
        ])
        .unwrap();
        assert_eq!(
            central_quotient(&m, &no_coroot).unwrap_err(),
            ClassifyError::MissingCoroots { index: 1 }
        );
    }

    #[test]
    fn central_witness_of_the_zero_monoid_points_down_the_center() {
        let m = a1z1();
        let mu = central_witness(&m, &zero_monoid(&m), 1_000_000).unwrap();
        assert!(mu[0].is_zero());
        assert!(mu[1].is_negative());
    }

    #[test]
    fn central_witness_of_the_elementary_embedding() {
        let m = a1z1();
        let cc = cc_of(&m, &cone(2, &[&[0, 1]]), &[]);
        let mu = central_witness(&m, &cc, 1_000_000).unwrap();
        assert!(mu[0].is_zero());
        assert!(mu[1].is_positive());
    }

    #[test]
    fn central_witness_refuses_the_trivial_cone() {
        let m = a1z1();
        let cc = cc_of(&m, &Cone::zero(2), &[]);
        assert_eq!(
            central_witness(&m, &cc, 1_000_000).unwrap_err(),
            ClassifyError::TrivialCone { operation: "the central witness" }
        );
    }
}
