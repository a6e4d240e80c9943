//! JSON input parsing and canonical report serialization.
//!
//! All rational numbers cross the boundary as strings `"p/q"` (or `"p"`) in
//! lowest terms; report objects serialize with alphabetically sorted keys,
//! so identical inputs produce byte-identical reports. Color indices are
//! 1-based externally and 0-based internally.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::classify::{
    BoundedWeights, ClassifyError, ColoredCone, Decomposition, OrbitDatum, WeightMonoidData,
};
use crate::cones::{Cone, ConeError};
use crate::linalg::{QMat, QVec};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::rootsys::{DynkinType, GroupError, GroupSpec, SimpleFactor};

/// A structured input-parsing failure; always maps to "malformed input".
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ParseError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, ParseError> {
    v.as_object().ok_or_else(|| ParseError(format!("{what} must be a JSON object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, ParseError> {
    v.as_array().ok_or_else(|| ParseError(format!("{what} must be a JSON array")))
}

fn reject_unknown_keys(
    map: &Map<String, Value>,
    allowed: &[&str],
    what: &str,
) -> Result<(), ParseError> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return err(format!("unknown field {key:?} in {what}"));
        }
    }
    Ok(())
}

fn rational(v: &Value, what: &str) -> Result<Rat, ParseError> {
    match v {
        Value::String(s) => {
            parse_rat(s).map_err(|e| ParseError(format!("{what}: bad rational {s:?}: {e}")))
        }
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rat::from_integer(i.into())),
            None => err(format!("{what}: {n} is not an exact integer; use a \"p/q\" string")),
        },
        other => err(format!("{what}: expected a rational string, found {other}")),
    }
}

fn rational_vector(v: &Value, what: &str) -> Result<QVec, ParseError> {
    as_array(v, what)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{what}[{i}]")))
        .collect()
}

fn rational_matrix(v: &Value, what: &str) -> Result<QMat, ParseError> {
    as_array(v, what)?
        .iter()
        .enumerate()
        .map(|(i, row)| rational_vector(row, &format!("{what} row {i}")))
        .collect()
}

fn usize_field(v: &Value, what: &str) -> Result<usize, ParseError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| ParseError(format!("{what} must be a non-negative integer")))
}

/// Parses a group description:
/// `{"factors":[{"type":"A","rank":1}],"central_rank":1,"lattice":[["1","0"],["0","1"]]}`.
/// The lattice is optional and defaults to the standard integer lattice.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;
    let obj = as_object(&v, "the group description")?;
    reject_unknown_keys(obj, &["factors", "central_rank", "lattice"], "the group description")?;
    let factors_v = obj
        .get("factors")
        .ok_or_else(|| ParseError("the group description is missing \"factors\"".into()))?;
    let mut factors = Vec::new();
    for (i, f) in as_array(factors_v, "\"factors\"")?.iter().enumerate() {
        let fo = as_object(f, &format!("factor {i}"))?;
        reject_unknown_keys(fo, &["type", "rank"], &format!("factor {i}"))?;
        let letter_str = fo
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| ParseError(format!("factor {i} needs a \"type\" letter A-G")))?;
        let letter = DynkinType::from_letter(letter_str)
            .ok_or_else(|| ParseError(format!("factor {i}: unknown type {letter_str:?}")))?;
        let rank = usize_field(
            fo.get("rank").ok_or_else(|| ParseError(format!("factor {i} needs a \"rank\"")))?,
            &format!("factor {i} rank"),
        )?;
        factors.push(SimpleFactor { letter, rank });
    }
    let central_rank = usize_field(
        obj.get("central_rank")
            .ok_or_else(|| ParseError("the group description is missing \"central_rank\"".into()))?,
        "\"central_rank\"",
    )?;
    let lattice = match obj.get("lattice") {
        Some(rows) => Some(rational_matrix(rows, "\"lattice\"")?),
        None => None,
    };
    Ok(GroupSpec { factors, central_rank, lattice })
}

/// A cone input file: either bare generators or a colored cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeInput {
    /// `{"generators":[["-1","-1"],["1","0"]]}`
    Bare(Vec<QVec>),
    /// `{"cone":{"generators":[...]},"colors":[1]}` with 1-based colors.
    Colored(Vec<QVec>, BTreeSet<usize>),
}

/// Parses a 1-based color list into 0-based indices.
pub fn parse_colors(v: &Value) -> Result<BTreeSet<usize>, ParseError> {
    let mut out = BTreeSet::new();
    for (i, c) in as_array(v, "\"colors\"")?.iter().enumerate() {
        let idx = usize_field(c, &format!("color {i}"))?;
        if idx == 0 {
            return err("color indices are 1-based; 0 is not a valid color");
        }
        out.insert(idx - 1);
    }
    Ok(out)
}

fn parse_generators_obj(obj: &Map<String, Value>, what: &str) -> Result<Vec<QVec>, ParseError> {
    reject_unknown_keys(obj, &["generators"], what)?;
    let gens = obj
        .get("generators")
        .ok_or_else(|| ParseError(format!("{what} is missing \"generators\"")))?;
    rational_matrix(gens, "\"generators\"")
}

/// Parses a cone file, accepting both the bare and the colored layout.
pub fn parse_cone_input(text: &str) -> Result<ConeInput, ParseError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;
    let obj = as_object(&v, "the cone description")?;
    if obj.contains_key("cone") || obj.contains_key("colors") {
        reject_unknown_keys(obj, &["cone", "colors"], "the colored-cone description")?;
        let cone_v = obj
            .get("cone")
            .ok_or_else(|| ParseError("the colored-cone description is missing \"cone\"".into()))?;
        let gens = parse_generators_obj(as_object(cone_v, "\"cone\"")?, "\"cone\"")?;
        let colors = match obj.get("colors") {
            Some(c) => parse_colors(c)?,
            None => BTreeSet::new(),
        };
        Ok(ConeInput::Colored(gens, colors))
    } else {
        Ok(ConeInput::Bare(parse_generators_obj(obj, "the cone description")?))
    }
}

/// One rational as a canonical JSON string.
pub fn rat_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

/// A rational vector as an array of canonical strings.
pub fn vector_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

/// A list of rational vectors.
pub fn vectors_value<'a, I: IntoIterator<Item = &'a QVec>>(vs: I) -> Value {
    Value::Array(vs.into_iter().map(|v| vector_value(v)).collect())
}

/// A cone as `{"generators":[...]}` using its canonical generators.
pub fn cone_value(c: &Cone) -> Value {
    json!({ "generators": vectors_value(&c.generators()) })
}

fn colors_value(colors: &BTreeSet<usize>) -> Value {
    Value::Array(colors.iter().map(|&i| json!(i + 1)).collect())
}

/// A colored cone as `{"cone":{...},"colors":[...]}` with 1-based colors.
pub fn colored_cone_value(cc: &ColoredCone) -> Value {
    json!({ "cone": cone_value(cc.cone()), "colors": colors_value(cc.colors()) })
}

/// One orbit entry of the report.
pub fn orbit_value(o: &OrbitDatum) -> Value {
    json!({
        "face": cone_value(&o.face),
        "colors": colors_value(&o.colors),
        "dim": o.dimension,
        "open": o.is_open,
        "closed": o.is_closed,
    })
}

fn bounded_weights_value(b: &BoundedWeights) -> Value {
    json!({ "height": b.height, "weights": vectors_value(&b.weights) })
}

/// The weight-monoid section. The simple-module reading of the weight list
/// is labeled as valid in characteristic zero only.
pub fn weight_monoid_value(w: &WeightMonoidData) -> Value {
    let mut obj = Map::new();
    obj.insert("dual_cone".into(), cone_value(&w.dual_cone));
    obj.insert("hilbert_basis".into(), vectors_value(&w.hilbert_basis));
    obj.insert("all_dominant".into(), json!(w.all_dominant));
    obj.insert(
        "module_decomposition_validity".into(),
        json!("characteristic 0 only"),
    );
    if let Some(b) = &w.bounded {
        obj.insert("weights_up_to_height".into(), bounded_weights_value(b));
    }
    Value::Object(obj)
}

/// The quasi-direct decomposition section.
pub fn decomposition_value(d: &Decomposition) -> Value {
    json!({
        "g2_span": vectors_value(&d.g2_span),
        "g1_color_indices": colors_value(&d.g1_color_indices),
        "g2_color_indices": colors_value(&d.g2_color_indices),
        "s0_colored_cone": colored_cone_value(&d.s0_colored_cone),
    })
}

/// A structured error report `{"error":{"kind":...,"message":...}}`.
pub fn error_value(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

/// Stable machine-readable name for a classification error.
pub fn classify_error_kind(e: &ClassifyError) -> &'static str {
    match e {
        ClassifyError::AmbientMismatch { .. } => "AmbientMismatch",
        ClassifyError::ColorIndexOutOfRange { .. } => "ColorIndexOutOfRange",
        ClassifyError::NotStrictlyConvex => "NotStrictlyConvex",
        ClassifyError::NoInteriorValuation => "NoInteriorValuation",
        ClassifyError::BadGenerators { .. } => "BadGenerators",
        ClassifyError::ColorOutsideCone { .. } => "ColorOutsideCone",
        ClassifyError::InputOutsideValuationCone { .. } => "InputOutsideValuationCone",
        ClassifyError::NotAMonoid => "NotAMonoid",
        ClassifyError::TooManyColors { .. } => "TooManyColors",
        ClassifyError::SpanMismatch { .. } => "SpanMismatch",
        ClassifyError::NotCommensurable => "NotCommensurable",
        ClassifyError::MissingCoroots { .. } => "MissingCoroots",
        ClassifyError::TrivialCone { .. } => "TrivialCone",
        ClassifyError::WitnessZero => "WitnessZero",
        ClassifyError::Cone(c) => cone_error_kind(c),
        ClassifyError::Group(g) => group_error_kind(g),
    }
}

/// Stable machine-readable name for a cone error.
pub fn cone_error_kind(e: &ConeError) -> &'static str {
    match e {
        ConeError::DimensionMismatch { .. } => "DimensionMismatch",
        ConeError::Lineality { .. } => "Lineality",
        ConeError::DimensionBound { .. } => "DimensionBound",
        ConeError::SingularLattice => "SingularLattice",
    }
}

/// Stable machine-readable name for a group-model error.
pub fn group_error_kind(e: &GroupError) -> &'static str {
    match e {
        GroupError::BadRank { .. } => "BadRank",
        GroupError::EmptyGroup => "EmptyGroup",
        GroupError::LatticeShape { .. } => "LatticeShape",
        GroupError::SingularLattice => "SingularLattice",
        GroupError::LatticeMissingCoroot { .. } => "LatticeMissingCoroot",
        GroupError::AmbientMismatch { .. } => "AmbientMismatch",
        GroupError::WeylBoundExceeded { .. } => "WeylBoundExceeded",
    }
}

/// Final rendering: pretty-printed JSON with sorted keys and a trailing
/// newline, byte-identical for identical data.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}
