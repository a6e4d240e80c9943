//! The classification dictionary: colored cones for a fixed reductive group.
//!
//! A monoid whose unit group is the given group corresponds to a strictly
//! convex *colored cone* `(C, F)`: a set `F` of colors together with a
//! polyhedral cone `C` in the cocharacter space such that
//!
//! - (i) no chosen color ray is zero — automatic in these coordinates,
//!   where color `i` is the `i`-th simple coroot `e_i`;
//! - (ii) `C` is generated by the chosen color rays together with finitely
//!   many invariant valuations;
//! - (iii) the relative interior of `C` meets the valuation cone.
//!
//! Validation errors name the condition they violate. This module validates
//! such pairs, decides affineness by an exact feasibility certificate,
//! constructs the unique affine pair over a given valuation cone `tau`, and
//! derives orbit data, weight monoids, decompositions and central witnesses.

mod orbits;
mod structure;

pub use orbits::{has_zero, kernel, orbits, OrbitDatum};
pub use structure::{
    central_quotient, central_witness, decoloration, quasi_direct_decompose, weight_monoid,
    BoundedWeights, Decomposition, WeightMonoidData,
};

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::cones::{Cone, ConeError};
use crate::linalg::{self, QVec};
use crate::lp::{self, Constraint, Feasibility};
use crate::rat::{rat, Rat};
use crate::rootsys::{GroupError, GroupModel};

/// Ceiling on the semisimple rank for exhaustive color-set enumeration.
pub const MAX_ENUMERATED_COLORS: usize = 12;

/// Errors from classification operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("expected vectors in the group's ambient space of dimension {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("color index {index} is out of range: the group has {count} simple roots")]
    ColorIndexOutOfRange { index: usize, count: usize },
    #[error("the cone is not strictly convex (it contains a line)")]
    NotStrictlyConvex,
    #[error("condition (iii) fails: the relative interior of the cone does not meet the valuation cone")]
    NoInteriorValuation,
    #[error("condition (ii) fails: an extreme ray is neither a chosen color nor an invariant valuation")]
    BadGenerators { ray: Vec<String> },
    #[error("condition (ii) fails: color {index} does not lie in the cone")]
    ColorOutsideCone { index: usize },
    #[error("generator {position} does not lie in the valuation cone")]
    InputOutsideValuationCone { position: usize },
    #[error("no monoid exists for this data: the cone is not strictly convex after adding all colors")]
    NotAMonoid,
    #[error("exhaustive color enumeration supports at most {max} simple roots, the group has {count}")]
    TooManyColors { count: usize, max: usize },
    #[error("color {index} violates the span decomposition: chosen colors must lie in the span of the cone and omitted colors outside it")]
    SpanMismatch { index: usize },
    #[error("the new lattice does not contain the current one")]
    NotCommensurable,
    #[error("the new lattice does not contain coroot {index}")]
    MissingCoroots { index: usize },
    #[error("{operation} requires a cone of dimension at least 1")]
    TrivialCone { operation: &'static str },
    #[error("the Weyl-averaged witness is zero: the cone has no interior valuation with a central component")]
    WitnessZero,
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A validated colored cone `(C, F)`; color indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCone {
    cone: Cone,
    colors: BTreeSet<usize>,
}

impl ColoredCone {
    pub(crate) fn new_unchecked(cone: Cone, colors: BTreeSet<usize>) -> ColoredCone {
        ColoredCone { cone, colors }
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// The chosen color indices, 0-based.
    pub fn colors(&self) -> &BTreeSet<usize> {
        &self.colors
    }
}

/// A character certifying affineness: non-positive on the valuation cone,
/// zero on the cone, strictly positive on every omitted color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCertificate {
    chi: QVec,
}

impl AffineCertificate {
    /// Wraps a candidate character; [`AffineCertificate::verify`] decides
    /// whether it actually certifies the pair.
    pub fn new(chi: QVec) -> AffineCertificate {
        AffineCertificate { chi }
    }

    pub fn chi(&self) -> &QVec {
        &self.chi
    }

    /// Re-checks the defining conditions independently of the solver.
    pub fn verify(&self, model: &GroupModel, cc: &ColoredCone) -> bool {
        if self.chi.len() != model.ambient_dim() {
            return false;
        }
        let on_valuation = model
            .valuation_cone()
            .generators()
            .iter()
            .all(|g| !linalg::dot(&self.chi, g).is_positive());
        let on_cone =
            cc.cone.generators().iter().all(|g| linalg::dot(&self.chi, g).is_zero());
        let on_omitted = (0..model.semisimple_rank())
            .filter(|i| !cc.colors.contains(i))
            .all(|i| self.chi[i].is_positive());
        on_valuation && on_cone && on_omitted
    }
}

/// A certified refusal: non-negative multipliers combining the affineness
/// constraints (in the order produced by [`affineness_constraints`]) into a
/// contradiction, proving that no certificate exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityWitness {
    multipliers: Vec<Rat>,
}

impl InfeasibilityWitness {
    pub fn multipliers(&self) -> &[Rat] {
        &self.multipliers
    }

    /// Re-checks the contradiction against the constraint system.
    pub fn verify(&self, model: &GroupModel, cc: &ColoredCone) -> bool {
        let farkas = lp::Farkas { multipliers: self.multipliers.clone() };
        farkas.verify(model.ambient_dim(), &affineness_constraints(model, &cc.cone, &cc.colors))
    }
}

/// Outcome of the affineness test; a refusal is a value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineDecision {
    Certified(AffineCertificate),
    Refused(InfeasibilityWitness),
}

impl AffineDecision {
    pub fn is_affine(&self) -> bool {
        matches!(self, AffineDecision::Certified(_))
    }

    pub fn certificate(&self) -> Option<&AffineCertificate> {
        match self {
            AffineDecision::Certified(c) => Some(c),
            AffineDecision::Refused(_) => None,
        }
    }
}

/// Checks the colored-cone conditions in order: strict convexity, interior
/// valuation (condition iii), admissible extreme rays and color membership
/// (condition ii). Color indices are 0-based.
pub fn validate_colored_cone(
    model: &GroupModel,
    cone: &Cone,
    colors: &BTreeSet<usize>,
) -> Result<ColoredCone, ClassifyError> {
    let n = model.ambient_dim();
    let l = model.semisimple_rank();
    if cone.ambient_dim() != n {
        return Err(ClassifyError::AmbientMismatch { expected: n, found: cone.ambient_dim() });
    }
    for &i in colors {
        if i >= l {
            return Err(ClassifyError::ColorIndexOutOfRange { index: i + 1, count: l });
        }
    }
    if !cone.is_strictly_convex() {
        return Err(ClassifyError::NotStrictlyConvex);
    }
    if !cone.relint_meets(model.valuation_cone()) {
        return Err(ClassifyError::NoInteriorValuation);
    }
    // Every extreme ray must be a chosen color ray or an invariant valuation,
    // so that the cone is generated by rho(F) and a finite subset of V.
    for r in cone.rays() {
        let is_color = colors.iter().any(|&i| r == &model.color(i));
        if !is_color && !model.valuation_cone().contains(r) {
            return Err(ClassifyError::BadGenerators {
                ray: r.iter().map(crate::rat::format_rat).collect(),
            });
        }
    }
    for &i in colors {
        if !cone.contains(&model.color(i)) {
            return Err(ClassifyError::ColorOutsideCone { index: i + 1 });
        }
    }
    Ok(ColoredCone { cone: cone.clone(), colors: colors.clone() })
}

/// The affineness feasibility system for `(cone, colors)` over characters
/// `chi`: `chi . g <= 0` for each generator `g` of the valuation cone, then
/// `chi . g = 0` for each generator of the cone, then `chi(e_i) >= 1` for
/// each omitted color `i` in increasing order (the `>= 1` normalization
/// encodes strict positivity, valid by homogeneity).
pub fn affineness_constraints(
    model: &GroupModel,
    cone: &Cone,
    colors: &BTreeSet<usize>,
) -> Vec<Constraint> {
    let mut cs = Vec::new();
    for g in model.valuation_cone().generators() {
        cs.push(Constraint::le(g, rat(0)));
    }
    for g in cone.generators() {
        cs.push(Constraint::eq(g, rat(0)));
    }
    for i in 0..model.semisimple_rank() {
        if !colors.contains(&i) {
            cs.push(Constraint::ge(model.color(i), rat(1)));
        }
    }
    cs
}

/// Decides whether the embedding of `cc` is affine: searches for a
/// certificate character and returns it, or a verified refusal.
pub fn is_affine(model: &GroupModel, cc: &ColoredCone) -> AffineDecision {
    let constraints = affineness_constraints(model, &cc.cone, &cc.colors);
    match lp::feasibility(model.ambient_dim(), &constraints) {
        Feasibility::Feasible(chi) => {
            let cert = AffineCertificate { chi };
            debug_assert!(cert.verify(model, cc));
            AffineDecision::Certified(cert)
        }
        Feasibility::Infeasible(farkas) => {
            let witness = InfeasibilityWitness { multipliers: farkas.multipliers };
            debug_assert!(witness.verify(model, cc));
            AffineDecision::Refused(witness)
        }
    }
}

fn check_tau_generators(model: &GroupModel, tau_gens: &[QVec]) -> Result<Cone, ClassifyError> {
    let n = model.ambient_dim();
    for (k, g) in tau_gens.iter().enumerate() {
        if g.len() != n {
            return Err(ClassifyError::AmbientMismatch { expected: n, found: g.len() });
        }
        if !model.valuation_cone().contains(g) {
            return Err(ClassifyError::InputOutsideValuationCone { position: k + 1 });
        }
    }
    Ok(Cone::from_generators(n, tau_gens)?)
}

/// Builds the unique monoid over the valuation data `tau`: the colored cone
/// `(tau + Q+ rho(F), F)` together with an affineness certificate.
///
/// The color set is determined by feasibility: a color is omitted exactly
/// when some dominant character vanishing on `tau` and non-positive on the
/// valuation cone is strictly positive at it; a single character witnessing
/// all omitted colors at once is returned as the certificate. Omitting a
/// color is monotone under adding certificates, so this yields the unique
/// color set whose pair is both a colored cone and affine.
pub fn construct_monoid(
    model: &GroupModel,
    tau_gens: &[QVec],
) -> Result<(ColoredCone, AffineCertificate), ClassifyError> {
    let n = model.ambient_dim();
    let l = model.semisimple_rank();
    let tau = check_tau_generators(model, tau_gens)?;

    // Necessary condition: adding every color must keep the cone pointed.
    let mut all_gens = tau.generators();
    all_gens.extend(model.colors());
    let full = Cone::from_generators(n, &all_gens)?;
    if !full.is_strictly_convex() {
        return Err(ClassifyError::NotAMonoid);
    }

    // Base system: chi dominant, vanishing on tau, non-positive on V.
    let base: Vec<Constraint> = {
        let mut cs = Vec::new();
        for g in model.valuation_cone().generators() {
            cs.push(Constraint::le(g, rat(0)));
        }
        for g in tau.generators() {
            cs.push(Constraint::eq(g, rat(0)));
        }
        for i in 0..l {
            cs.push(Constraint::ge(model.color(i), rat(0)));
        }
        cs
    };

    let omitted: Vec<usize> = (0..l)
        .filter(|&i| {
            let mut cs = base.clone();
            cs.push(Constraint::ge(model.color(i), rat(1)));
            lp::feasibility(n, &cs).is_feasible()
        })
        .collect();
    let colors: BTreeSet<usize> = (0..l).filter(|i| !omitted.contains(i)).collect();

    // One character witnessing every omitted color at once. Feasible because
    // the per-color witnesses can be summed; any solution vanishes on the
    // kept colors (otherwise scaling it would have omitted them too).
    let mut joint = base;
    for &i in &omitted {
        joint.push(Constraint::ge(model.color(i), rat(1)));
    }
    let chi = match lp::feasibility(n, &joint) {
        Feasibility::Feasible(chi) => chi,
        Feasibility::Infeasible(_) => {
            unreachable!("per-color certificates always combine into a joint certificate")
        }
    };

    let mut gens = tau.generators();
    gens.extend(colors.iter().map(|&i| model.color(i)));
    let cone = Cone::from_generators(n, &gens)?;
    let cc = validate_colored_cone(model, &cone, &colors)
        .expect("the constructed pair always satisfies the colored-cone conditions");
    let cert = AffineCertificate { chi };
    debug_assert!(cert.verify(model, &cc));
    Ok((cc, cert))
}

/// Brute-force oracle: every color subset `F'` for which `(tau + Q+ rho(F'),
/// F')` is a valid colored cone of an affine embedding. By uniqueness this
/// has at most one element; it is empty exactly when no monoid exists.
pub fn enumerate_affine_color_sets(
    model: &GroupModel,
    tau_gens: &[QVec],
) -> Result<Vec<BTreeSet<usize>>, ClassifyError> {
    let l = model.semisimple_rank();
    if l > MAX_ENUMERATED_COLORS {
        return Err(ClassifyError::TooManyColors { count: l, max: MAX_ENUMERATED_COLORS });
    }
    let tau = check_tau_generators(model, tau_gens)?;
    let mut hits = Vec::new();
    for mask in 0u32..(1u32 << l) {
        let subset: BTreeSet<usize> = (0..l).filter(|i| mask & (1 << i) != 0).collect();
        let mut gens = tau.generators();
        gens.extend(subset.iter().map(|&i| model.color(i)));
        let cone = Cone::from_generators(model.ambient_dim(), &gens)?;
        match validate_colored_cone(model, &cone, &subset) {
            Ok(cc) => {
                if is_affine(model, &cc).is_affine() {
                    hits.push(subset);
                }
            }
            Err(_) => {}
        }
    }
    Ok(hits)
}
