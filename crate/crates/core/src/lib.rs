//! Exact-arithmetic classification of normal irreducible reductive
//! algebraic monoids with a prescribed unit group.
//!
//! A reductive group `G` together with a choice of cocharacter lattice
//! determines a rational vector space carrying a valuation cone and a
//! finite set of color rays. The normal irreducible algebraic monoids whose
//! unit group is `G` correspond to strictly convex colored cones in this
//! space. This crate implements the dictionary with exact rational
//! arithmetic throughout: group models ([`rootsys`]), polyhedral geometry
//! ([`cones`]), linear feasibility with certificates ([`lp`]), the
//! classification and its derived data ([`classify`]), and JSON
//! serialization for the command-line front end ([`io`]).

pub mod cones;
pub mod linalg;
pub mod lp;
pub mod rat;
pub mod rootsys;

pub mod classify;
pub mod io;

pub use classify::{
    construct_monoid, enumerate_affine_color_sets, is_affine, validate_colored_cone,
    AffineCertificate, AffineDecision, ClassifyError, ColoredCone,
};
pub use cones::{Cone, ConeError, LatticeBasis};
pub use rootsys::{DynkinType, GroupError, GroupModel, GroupSpec, SimpleFactor};
