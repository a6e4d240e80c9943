//! Command-line front end for the reductive-monoid classifier.
//!
//! Reads a group description and a cone description from JSON files,
//! dispatches the requested classification operation, and writes a report
//! to stdout. Reports are byte-deterministic: JSON with sorted keys and
//! canonical `"p/q"` rationals.
//!
//! Exit codes: 0 success; 2 malformed input; 3 no monoid / validation
//! failure; 4 resource bound exceeded.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use monoids_core::classify::{
    self, AffineDecision, ClassifyError, ColoredCone, OrbitDatum,
};
use monoids_core::cones::{Cone, ConeError};
use monoids_core::io::{
    classify_error_kind, colored_cone_value, cone_value, decomposition_value, error_value,
    group_error_kind, orbit_value, parse_cone_input, parse_group_spec, render, vector_value,
    weight_monoid_value, ConeInput,
};
use monoids_core::linalg::QVec;
use monoids_core::rat::format_rat;
use monoids_core::rootsys::{GroupError, GroupModel, DEFAULT_WEYL_BOUND};

const EXIT_MALFORMED: u8 = 2;
const EXIT_REJECTED: u8 = 3;
const EXIT_BOUND: u8 = 4;

/// Classify reductive algebraic monoids by their colored cones.
#[derive(Parser)]
#[command(name = "monoids", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct CommonArgs {
    /// Group description JSON file.
    #[arg(long, value_name = "FILE")]
    group: PathBuf,
    /// Cone description JSON file.
    #[arg(long, value_name = "FILE")]
    cone: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ColoredArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// 1-based color indices, e.g. `--colors 1,2`; alternative to a
    /// colored-cone JSON file.
    #[arg(long, value_delimiter = ',', value_name = "INDEX")]
    colors: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the unique monoid over given invariant valuation data.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        /// Also list all monoid weights up to this sup-norm height.
        #[arg(long, value_name = "H")]
        height_bound: Option<i64>,
    },
    /// Validate a colored cone.
    Check {
        #[command(flatten)]
        args: ColoredArgs,
    },
    /// List the orbits of the monoid of a colored cone.
    Orbits {
        #[command(flatten)]
        args: ColoredArgs,
    },
    /// Compute the weight monoid of a colored cone.
    Weights {
        #[command(flatten)]
        args: ColoredArgs,
        /// Also list all monoid weights up to this sup-norm height.
        #[arg(long, value_name = "H")]
        height_bound: Option<i64>,
    },
    /// Compute the decoloration (the minimal proper cover's cone).
    Decolor {
        #[command(flatten)]
        args: ColoredArgs,
    },
    /// Compute the quasi-direct product decomposition.
    Decompose {
        #[command(flatten)]
        args: ColoredArgs,
    },
    /// Decide affineness; emits a certificate or a refusal witness.
    AffineCheck {
        #[command(flatten)]
        args: ColoredArgs,
    },
    /// Compute the Weyl-averaged central witness.
    Witness {
        #[command(flatten)]
        args: ColoredArgs,
    },
}

/// A failed run: exit code plus a structured report.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_MALFORMED, kind: "MalformedInput", message: message.into() }
    }

    fn from_group_error(e: &GroupError) -> Failure {
        let code = match e {
            GroupError::WeylBoundExceeded { .. } => EXIT_BOUND,
            _ => EXIT_MALFORMED,
        };
        Failure { code, kind: group_error_kind(e), message: e.to_string() }
    }

    fn from_classify_error(e: &ClassifyError) -> Failure {
        let code = match e {
            ClassifyError::AmbientMismatch { .. }
            | ClassifyError::ColorIndexOutOfRange { .. }
            | ClassifyError::NotCommensurable
            | ClassifyError::MissingCoroots { .. } => EXIT_MALFORMED,
            ClassifyError::TooManyColors { .. } => EXIT_BOUND,
            ClassifyError::Cone(c) => match c {
                ConeError::DimensionBound { .. } => EXIT_BOUND,
                ConeError::DimensionMismatch { .. } | ConeError::SingularLattice => EXIT_MALFORMED,
                ConeError::Lineality { .. } => EXIT_REJECTED,
            },
            ClassifyError::Group(g) => return Failure::from_group_error(g),
            _ => EXIT_REJECTED,
        };
        Failure { code, kind: classify_error_kind(e), message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match &cli.command {
        Command::Classify { common, .. } => common.format,
        Command::Check { args }
        | Command::Orbits { args }
        | Command::Weights { args, .. }
        | Command::Decolor { args }
        | Command::Decompose { args }
        | Command::AffineCheck { args }
        | Command::Witness { args } => args.common.format,
    };
    match run(&cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match format {
                Format::Json => print!("{}", render(&error_value(f.kind, &f.message))),
                Format::Text | Format::Dot => eprintln!("error [{}]: {}", f.kind, f.message),
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Classify { common, height_bound } => {
            run_classify(common, *height_bound)
        }
        Command::Check { args } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "check")?;
            Ok(match args.common.format {
                Format::Json => render(&json!({ "colored_cone": colored_cone_value(&cc) })),
                _ => format!(
                    "valid colored cone for {}\n  cone: {}\n  colors: {}\n",
                    describe_group(&model),
                    describe_cone(cc.cone()),
                    describe_colors(cc.colors())
                ),
            })
        }
        Command::Orbits { args } => {
            let (model, cc) = load_colored(args)?;
            let orbits = classify::orbits(&model, &cc).map_err(|e| Failure::from_classify_error(&e))?;
            let has_zero = classify::has_zero(&model, &cc);
            Ok(match args.common.format {
                Format::Json => render(&json!({
                    "has_zero": has_zero,
                    "orbits": orbits.iter().map(orbit_value).collect::<Vec<_>>(),
                })),
                Format::Dot => render_orbit_graph(&orbits),
                Format::Text => {
                    let mut s = format!("orbits of the monoid over {}\n", describe_group(&model));
                    for o in &orbits {
                        s.push_str(&describe_orbit(o));
                    }
                    s.push_str(&format!("has zero: {}\n", if has_zero { "yes" } else { "no" }));
                    s
                }
            })
        }
        Command::Weights { args, height_bound } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "weights")?;
            let w = classify::weight_monoid(&model, &cc, *height_bound)
                .map_err(|e| Failure::from_classify_error(&e))?;
            Ok(match args.common.format {
                Format::Json => render(&json!({ "weight_monoid": weight_monoid_value(&w) })),
                _ => {
                    let mut s = format!(
                        "weight monoid Hilbert basis: {}\n",
                        describe_vectors(&w.hilbert_basis)
                    );
                    s.push_str(&format!(
                        "all generators dominant: {}\n",
                        if w.all_dominant { "yes" } else { "no" }
                    ));
                    if let Some(b) = &w.bounded {
                        s.push_str(&format!(
                            "weights up to height {}: {}\n",
                            b.height,
                            describe_vectors(&b.weights)
                        ));
                    }
                    s.push_str("module decomposition reading valid in characteristic 0 only\n");
                    s
                }
            })
        }
        Command::Decolor { args } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "decolor")?;
            let d = classify::decoloration(&model, &cc);
            Ok(match args.common.format {
                Format::Json => render(&json!({
                    "decoloration": { "cone": cone_value(&d), "colors": [] }
                })),
                _ => format!("decoloration: {}\n", describe_cone(&d)),
            })
        }
        Command::Decompose { args } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "decompose")?;
            let d = classify::quasi_direct_decompose(&model, &cc)
                .map_err(|e| Failure::from_classify_error(&e))?;
            Ok(match args.common.format {
                Format::Json => render(&json!({ "decomposition": decomposition_value(&d) })),
                _ => format!(
                    "quasi-direct decomposition\n  span basis: {}\n  group-factor colors: {}\n  monoid-factor colors: {}\n  s0 cone: {} with colors {}\n",
                    describe_vectors(&d.g2_span),
                    describe_colors(&d.g1_color_indices),
                    describe_colors(&d.g2_color_indices),
                    describe_cone(d.s0_colored_cone.cone()),
                    describe_colors(d.s0_colored_cone.colors()),
                ),
            })
        }
        Command::AffineCheck { args } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "affine-check")?;
            let decision = classify::is_affine(&model, &cc);
            Ok(match args.common.format {
                Format::Json => match &decision {
                    AffineDecision::Certified(cert) => render(&json!({
                        "affine": true,
                        "certificate": vector_value(cert.chi()),
                    })),
                    AffineDecision::Refused(w) => render(&json!({
                        "affine": false,
                        "infeasibility_witness": vector_value(w.multipliers()),
                    })),
                },
                _ => match &decision {
                    AffineDecision::Certified(cert) => {
                        format!("affine: yes\ncertificate: {}\n", describe_vector(cert.chi()))
                    }
                    AffineDecision::Refused(_) => {
                        "affine: no (no separating character exists)\n".to_string()
                    }
                },
            })
        }
        Command::Witness { args } => {
            let (model, cc) = load_colored(args)?;
            require_not_dot(args, "witness")?;
            let mu = classify::central_witness(&model, &cc, weyl_bound()?)
                .map_err(|e| Failure::from_classify_error(&e))?;
            Ok(match args.common.format {
                Format::Json => render(&json!({ "central_witness": vector_value(&mu) })),
                _ => format!("central witness: {}\n", describe_vector(&mu)),
            })
        }
    }
}

fn run_classify(common: &CommonArgs, height_bound: Option<i64>) -> Result<String, Failure> {
    if common.format == Format::Dot {
        return Err(Failure::malformed(
            "dot output is only available for the orbits subcommand",
        ));
    }
    let model = load_model(&common.group)?;
    let gens = match read_cone_file(&common.cone)? {
        ConeInput::Bare(gens) => gens,
        ConeInput::Colored(..) => {
            return Err(Failure::malformed(
                "classify expects plain {\"generators\":...} valuation data; the color set is computed, not supplied",
            ))
        }
    };
    let (cc, cert) =
        classify::construct_monoid(&model, &gens).map_err(|e| Failure::from_classify_error(&e))?;
    let orbits = classify::orbits(&model, &cc).map_err(|e| Failure::from_classify_error(&e))?;
    let has_zero = classify::has_zero(&model, &cc);
    let weights = classify::weight_monoid(&model, &cc, height_bound)
        .map_err(|e| Failure::from_classify_error(&e))?;
    let decomposition = classify::quasi_direct_decompose(&model, &cc)
        .map_err(|e| Failure::from_classify_error(&e))?;
    Ok(match common.format {
        Format::Json => render(&json!({
            "colored_cone": colored_cone_value(&cc),
            "affine_certificate": vector_value(cert.chi()),
            "orbits": orbits.iter().map(orbit_value).collect::<Vec<_>>(),
            "has_zero": has_zero,
            "weight_monoid": weight_monoid_value(&weights),
            "decomposition": decomposition_value(&decomposition),
        })),
        _ => {
            let mut s = format!("monoid over {}\n", describe_group(&model));
            s.push_str(&format!("  cone: {}\n", describe_cone(cc.cone())));
            s.push_str(&format!("  colors: {}\n", describe_colors(cc.colors())));
            s.push_str(&format!("  affine certificate: {}\n", describe_vector(cert.chi())));
            s.push_str(&format!("  has zero: {}\n", if has_zero { "yes" } else { "no" }));
            s.push_str("orbits:\n");
            for o in &orbits {
                s.push_str(&describe_orbit(o));
            }
            s.push_str(&format!(
                "weight monoid Hilbert basis: {}\n",
                describe_vectors(&weights.hilbert_basis)
            ));
            s
        }
    })
}

/// The Weyl-order ceiling, overridable through `MONOID_WEYL_BOUND`.
fn weyl_bound() -> Result<u64, Failure> {
    match std::env::var("MONOID_WEYL_BOUND") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::malformed(format!(
                "MONOID_WEYL_BOUND must be a non-negative integer, found {s:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_WEYL_BOUND),
        Err(e) => Err(Failure::malformed(format!("cannot read MONOID_WEYL_BOUND: {e}"))),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<GroupModel, Failure> {
    let spec = parse_group_spec(&read_file(path)?)
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))?;
    GroupModel::build(&spec).map_err(|e| Failure::from_group_error(&e))
}

fn read_cone_file(path: &Path) -> Result<ConeInput, Failure> {
    parse_cone_input(&read_file(path)?)
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

/// Resolves the colored-cone input: generators plus colors from either the
/// file or the `--colors` flag, never both.
fn load_colored(args: &ColoredArgs) -> Result<(GroupModel, ColoredCone), Failure> {
    let model = load_model(&args.common.group)?;
    let (gens, file_colors) = match read_cone_file(&args.common.cone)? {
        ConeInput::Bare(gens) => (gens, None),
        ConeInput::Colored(gens, colors) => (gens, Some(colors)),
    };
    let colors: BTreeSet<usize> = match (&args.colors, file_colors) {
        (Some(_), Some(_)) => {
            return Err(Failure::malformed(
                "colors are given both in the cone file and with --colors; use one",
            ))
        }
        (Some(flag), None) => {
            let mut set = BTreeSet::new();
            for &c in flag {
                if c == 0 {
                    return Err(Failure::malformed(
                        "color indices are 1-based; 0 is not a valid color",
                    ));
                }
                set.insert(c - 1);
            }
            set
        }
        (None, Some(file)) => file,
        (None, None) => BTreeSet::new(),
    };
    let cone = Cone::from_generators(model.ambient_dim(), &gens)
        .map_err(|e| Failure::from_classify_error(&ClassifyError::Cone(e)))?;
    let cc = classify::validate_colored_cone(&model, &cone, &colors)
        .map_err(|e| Failure::from_classify_error(&e))?;
    Ok((model, cc))
}

fn require_not_dot(args: &ColoredArgs, name: &str) -> Result<(), Failure> {
    if args.common.format == Format::Dot {
        return Err(Failure::malformed(format!(
            "dot output is only available for the orbits subcommand, not {name}",
        )));
    }
    Ok(())
}

/// The orbit poset as a DOT digraph: an edge points from an orbit to one
/// immediately below it in closure order (its face grows by one covering
/// step).
fn render_orbit_graph(orbits: &[OrbitDatum]) -> String {
    let mut s = String::from("digraph orbits {\n  rankdir=TB;\n  node [shape=box];\n");
    for (i, o) in orbits.iter().enumerate() {
        let mut label = format!("dim {}", o.dimension);
        if o.is_open {
            label.push_str(", open");
        }
        if o.is_closed {
            label.push_str(", kernel");
        }
        if !o.colors.is_empty() {
            label.push_str(&format!(", colors {}", describe_colors(&o.colors)));
        }
        s.push_str(&format!("  o{i} [label=\"{label}\"];\n"));
    }
    for (i, below) in orbits.iter().enumerate() {
        for (j, above) in orbits.iter().enumerate() {
            if i == j || !below.face.is_subset_of(&above.face) || below.face == above.face {
                continue;
            }
            let covered = orbits.iter().enumerate().any(|(k, mid)| {
                k != i
                    && k != j
                    && below.face.is_subset_of(&mid.face)
                    && mid.face.is_subset_of(&above.face)
                    && below.face != mid.face
                    && mid.face != above.face
            });
            if !covered {
                s.push_str(&format!("  o{i} -> o{j};\n"));
            }
        }
    }
    s.push_str("}\n");
    s
}

fn describe_group(model: &GroupModel) -> String {
    let mut parts: Vec<String> = model.factors().iter().map(|f| f.to_string()).collect();
    if model.central_rank() > 0 {
        parts.push(format!("(k*)^{}", model.central_rank()));
    }
    if parts.is_empty() {
        parts.push("the trivial group".to_string());
    }
    parts.join(" x ")
}

fn describe_vector(v: &QVec) -> String {
    let entries: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", entries.join(", "))
}

fn describe_vectors(vs: &[QVec]) -> String {
    if vs.is_empty() {
        return "none".to_string();
    }
    vs.iter().map(describe_vector).collect::<Vec<_>>().join(", ")
}

fn describe_cone(c: &Cone) -> String {
    let gens = c.generators();
    if gens.is_empty() {
        return "{0}".to_string();
    }
    format!("cone spanned by {}", describe_vectors(&gens))
}

fn describe_colors(colors: &BTreeSet<usize>) -> String {
    let entries: Vec<String> = colors.iter().map(|&i| (i + 1).to_string()).collect();
    format!("{{{}}}", entries.join(", "))
}

fn describe_orbit(o: &OrbitDatum) -> String {
    let mut tag = String::new();
    if o.is_open {
        tag.push_str("  open");
    }
    if o.is_closed {
        tag.push_str("  kernel");
    }
    format!(
        "  dim {}{}  colors {}  face {}\n",
        o.dimension,
        tag,
        describe_colors(&o.colors),
        describe_cone(&o.face)
    )
}
