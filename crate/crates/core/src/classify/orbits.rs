//! Orbit structure of the monoid attached to a colored cone.
//!
//! Orbits correspond to the colored faces: faces of the cone whose relative
//! interior meets the valuation cone, each carrying the colors it contains.
//! The unit-group orbit corresponds to the zero face and the kernel (the
//! unique closed orbit, the minimal two-sided ideal) to the whole cone.

use std::collections::BTreeSet;

use crate::classify::{ClassifyError, ColoredCone};
use crate::cones::Cone;
use crate::rootsys::GroupModel;

/// One orbit of the monoid, described by its colored face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    /// The face of the cone indexing this orbit.
    pub face: Cone,
    /// Colors lying on the face, 0-based.
    pub colors: BTreeSet<usize>,
    /// Dimension of the orbit as a variety.
    pub dimension: usize,
    /// Whether this is the dense orbit (the unit group).
    pub is_open: bool,
    /// Whether this is the closed orbit (the kernel).
    pub is_closed: bool,
}

fn orbit_of_face(model: &GroupModel, cc: &ColoredCone, face: &Cone) -> OrbitDatum {
    let colors: BTreeSet<usize> = cc
        .colors()
        .iter()
        .copied()
        .filter(|&i| face.contains(&model.color(i)))
        .collect();
    let levi_roots = model.positive_roots_supported_on(&colors);
    let dimension = model.ambient_dim() - face.dim()
        + 2 * (model.positive_roots().len() - levi_roots);
    OrbitDatum {
        face: face.clone(),
        colors,
        dimension,
        is_open: face.dim() == 0,
        is_closed: face.dim() == cc.cone().dim(),
    }
}

/// All orbits, ordered by increasing face dimension (so the dense orbit is
/// first and the kernel last).
pub fn orbits(model: &GroupModel, cc: &ColoredCone) -> Result<Vec<OrbitDatum>, ClassifyError> {
    let faces = cc.cone().faces()?;
    Ok(faces
        .iter()
        .filter(|f| f.relint_meets(model.valuation_cone()))
        .map(|f| orbit_of_face(model, cc, f))
        .collect())
}

/// The kernel: the unique closed orbit, indexed by the whole cone.
pub fn kernel(model: &GroupModel, cc: &ColoredCone) -> OrbitDatum {
    orbit_of_face(model, cc, cc.cone())
}

/// Whether the monoid has a zero element: the kernel is a point, which
/// happens exactly when the cone is full-dimensional and every color is
/// chosen.
pub fn has_zero(model: &GroupModel, cc: &ColoredCone) -> bool {
    cc.cone().dim() == model.ambient_dim()
        && cc.colors().len() == model.semisimple_rank()
}
