//! Command-line driver. [`run`] parses arguments, dispatches to the library
//! and returns the exit code with the text for each stream, so tests can call
//! it without spawning a process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::characters::{
    decompose, freudenthal_character, weyl_character, FormalCharacter, TorusElement,
};
use crate::dschar::{lowest_k_type, make_hc_parameter, DsValueRecord, HcParameter};
use crate::error::Error;
use crate::fixed_point::{compact_assembly_check, fixed_point_report};
use crate::json::ComplexValue;
use crate::lie::{catalog, weyl_group, RootDatum, Weight, WhichGroup};
use crate::sl2::{
    bergman_inner_product, fgoi_envelope_check, formal_degree, matrix_coefficient,
    orbital_integral_character, EnvelopeMode, QuadratureGrid, Su11,
};
use crate::spin::{
    dirac_induction_ktype_check, exterior_p, graded_identity_holds, spin_module,
    verify_spin_exterior_lemma,
};
use crate::verify::{verify_catalog, VALUE_TOL};

/// Environment variable holding default grid sizes as
/// `radial_nodes,angular_nodes,t_max,disc_r_max`.
pub const GRID_ENV: &str = "DSERIES_GRID";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dseries",
    version,
    about = "Discrete series characters and their checks"
)]
struct Cli {
    /// Pretty-print JSON with this many spaces of indentation.
    #[arg(long, global = true, value_name = "N")]
    json_indent: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a root datum with its positive roots and grading.
    Datum(DatumArgs),
    /// List the Weyl group or the compact Weyl group.
    Weyl {
        #[command(flatten)]
        datum: DatumArgs,
        /// Only the subgroup generated by compact-root reflections.
        #[arg(long)]
        compact: bool,
    },
    /// Characters of finite-dimensional representations.
    #[command(subcommand)]
    Char(CharCommand),
    /// Discrete series character values.
    #[command(subcommand)]
    Dschar(DscharCommand),
    /// Lowest K-type and the Dirac induction multiplicity check.
    Ktype {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// Spinor and exterior weights of p and their graded comparison.
    Spin(DatumArgs),
    /// Lefschetz fixed-point sums on G/T.
    #[command(subcommand)]
    Fixedpoint(FixedpointCommand),
    /// Numeric checks for SU(1,1).
    #[command(subcommand)]
    Sl2(Sl2Command),
    /// Run the invariant suite.
    Verify {
        /// Run over the built-in catalog.
        #[arg(long, required = true)]
        catalog: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug, Clone)]
struct DatumArgs {
    /// Catalog name: sl2R, su21, sp4R, su2, su3, so5.
    #[arg(long, conflicts_with = "record")]
    datum: Option<String>,
    /// Text record with `rank`, `cartan` rows and 1-based `noncompact` indices.
    #[arg(long, value_name = "PATH")]
    record: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct LambdaArgs {
    /// Harish-Chandra parameter in fundamental-weight coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "lambda2"
    )]
    lambda: Option<Vec<i64>>,
    /// Harish-Chandra parameter in doubled coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda2: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
struct HighestArgs {
    /// Highest weight in fundamental-weight coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "highest2"
    )]
    highest: Option<Vec<i64>>,
    /// Highest weight in doubled coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    highest2: Option<Vec<i64>>,
}

#[derive(Args, Debug, Clone)]
struct ThetaArgs {
    /// Torus angles, one per rank.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    theta: Vec<f64>,
}

#[derive(Subcommand, Debug)]
enum CharCommand {
    /// Weyl's character formula as an exact quotient.
    Weyl {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        highest: HighestArgs,
    },
    /// Freudenthal's recursion.
    Freudenthal {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        highest: HighestArgs,
    },
    /// Decompose a Weyl-invariant character given as JSON
    /// `[{"coords2": [..], "coefficient": ".."}, ..]`.
    Decompose {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        terms: String,
    },
    /// Evaluate an irreducible character on the torus.
    Eval {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        highest: HighestArgs,
        #[command(flatten)]
        theta: ThetaArgs,
    },
}

#[derive(Subcommand, Debug)]
enum DscharCommand {
    /// Evaluate the character at a regular torus element.
    Eval {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[command(flatten)]
        theta: ThetaArgs,
    },
}

#[derive(Subcommand, Debug)]
enum FixedpointCommand {
    /// Fixed-point sum over W_c compared with the character value.
    Index {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Full-W Lefschetz sum against both character routes.
    Assembly {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        highest: HighestArgs,
        #[command(flatten)]
        theta: ThetaArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct GridArgs {
    #[arg(long)]
    radial_nodes: Option<usize>,
    #[arg(long)]
    angular_nodes: Option<usize>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    disc_r_max: Option<f64>,
    /// Overall scale of the Haar measure.
    #[arg(long, default_value_t = 1.0)]
    haar_scale: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    GaussianL1,
    EllipticFgoi,
}

#[derive(Subcommand, Debug)]
enum Sl2Command {
    /// Matrix coefficient at `k_phi a_t k_psi`, with the disc oracle.
    Coefficient {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phi: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        psi: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Formal degree by radial quadrature.
    FormalDegree {
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Orbital integral of d_π m_ξ at the rotation by theta.
    Orbital {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Gaussian envelope integrals.
    Fgoi {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2, allow_negative_numbers = true)]
        theta: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
}

/// Exit code and stream contents of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad arguments or inputs rejected by the library.
    Usage(String),
    /// A check ran and failed; the JSON carries the witness.
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotConverged(_) => Failure::Verification(json!({ "error": e.to_string() })),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Dispatch = std::result::Result<Value, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn render(value: &Value, indent: Option<usize>) -> String {
    let mut out = match indent {
        None => serde_json::to_string(value).expect("valid JSON"),
        Some(n) => {
            let pad = vec![b' '; n];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            value.serialize(&mut ser).expect("valid JSON");
            String::from_utf8(buf).expect("UTF-8")
        }
    };
    out.push('\n');
    out
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome {
            code: EXIT_OK,
            stdout: render(&v, cli.json_indent),
            stderr: String::new(),
        },
        Err(Failure::Verification(v)) => Outcome {
            code: EXIT_VERIFICATION,
            stdout: render(&v, cli.json_indent),
            stderr: "verification failed\n".into(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn load_datum(args: &DatumArgs) -> std::result::Result<RootDatum, Failure> {
    match (&args.datum, &args.record) {
        (Some(name), None) => Ok(catalog(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(RootDatum::from_record(&text)?)
        }
        _ => Err(Failure::Usage(
            "pass exactly one of --datum or --record".into(),
        )),
    }
}

fn weight_from(
    fundamental: &Option<Vec<i64>>,
    doubled: &Option<Vec<i64>>,
    flag: &str,
) -> std::result::Result<Weight, Failure> {
    match (fundamental, doubled) {
        (Some(c), None) => Ok(Weight::from_fundamental(c)),
        (None, Some(c)) => Ok(Weight::from_doubled(c.clone())),
        _ => Err(Failure::Usage(format!("pass --{flag} or --{flag}2"))),
    }
}

fn torus(datum: &RootDatum, theta: &ThetaArgs) -> std::result::Result<TorusElement, Failure> {
    if theta.theta.len() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: theta.theta.len(),
        }
        .into());
    }
    Ok(TorusElement::new(theta.theta.clone()))
}

fn hc_parameter(
    datum: &RootDatum,
    lambda: &LambdaArgs,
) -> std::result::Result<HcParameter, Failure> {
    let w = weight_from(&lambda.lambda, &lambda.lambda2, "lambda")?;
    Ok(make_hc_parameter(datum, w)?)
}

fn default_grid() -> std::result::Result<QuadratureGrid, Failure> {
    let Ok(text) = std::env::var(GRID_ENV) else {
        return Ok(QuadratureGrid::default());
    };
    let bad = || {
        Failure::Usage(format!(
            "{GRID_ENV} must be radial_nodes,angular_nodes,t_max,disc_r_max"
        ))
    };
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [radial, angular, t_max, r_max] = parts.as_slice() else {
        return Err(bad());
    };
    Ok(QuadratureGrid {
        radial_nodes: radial.parse().map_err(|_| bad())?,
        angular_nodes: angular.parse().map_err(|_| bad())?,
        t_max: t_max.parse().map_err(|_| bad())?,
        disc_r_max: r_max.parse().map_err(|_| bad())?,
    })
}

fn grid_from(args: &GridArgs) -> std::result::Result<QuadratureGrid, Failure> {
    let base = default_grid()?;
    let grid = QuadratureGrid {
        radial_nodes: args.radial_nodes.unwrap_or(base.radial_nodes),
        angular_nodes: args.angular_nodes.unwrap_or(base.angular_nodes),
        t_max: args.t_max.unwrap_or(base.t_max),
        disc_r_max: args.disc_r_max.unwrap_or(base.disc_r_max),
    };
    grid.validate()?;
    Ok(grid)
}

#[derive(Deserialize)]
struct TermInput {
    coords2: Vec<i64>,
    coefficient: String,
}

fn parse_character(datum: &RootDatum, text: &str) -> std::result::Result<FormalCharacter, Failure> {
    let terms: Vec<TermInput> =
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--terms: {e}")))?;
    let mut out = FormalCharacter::zero(datum.rank());
    for t in terms {
        if t.coords2.len() != datum.rank() {
            return Err(Error::RankMismatch {
                expected: datum.rank(),
                found: t.coords2.len(),
            }
            .into());
        }
        let c: BigInt = t
            .coefficient
            .parse()
            .map_err(|_| Failure::Usage(format!("bad coefficient {:?}", t.coefficient)))?;
        out.add_term(Weight::from_doubled(t.coords2), c);
    }
    Ok(out)
}

fn datum_json(d: &RootDatum) -> Value {
    let roots: Vec<Value> = d
        .positive_roots()
        .iter()
        .map(|r| json!({ "coords2": r.weight, "simple_coeffs": r.simple_coeffs, "noncompact": r.noncompact }))
        .collect();
    json!({
        "rank": d.rank(),
        "cartan": d.cartan(),
        "symmetrizer": d.symmetrizer(),
        "noncompact": d.noncompact_simple().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "positive_roots": roots,
        "rho": d.rho(),
        "rho_c": d.rho_c(),
        "rho_n": d.rho_n(),
        "q": d.q(),
    })
}

fn verdict(passed: bool, report: Value) -> Dispatch {
    if passed {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

fn dispatch(command: Command) -> Dispatch {
    match command {
        Command::Datum(args) => Ok(datum_json(&load_datum(&args)?)),
        Command::Weyl { datum, compact } => {
            let d = load_datum(&datum)?;
            let which = if compact {
                WhichGroup::Compact
            } else {
                WhichGroup::Full
            };
            let group = weyl_group(&d, which);
            Ok(json!({ "order": group.len(), "elements": group }))
        }
        Command::Char(c) => dispatch_char(c),
        Command::Dschar(DscharCommand::Eval {
            datum,
            lambda,
            theta,
        }) => {
            let d = load_datum(&datum)?;
            let h = hc_parameter(&d, &lambda)?;
            let t = torus(&d, &theta)?;
            Ok(to_value(&DsValueRecord::evaluate(&h, &t)?))
        }
        Command::Ktype { datum, lambda } => {
            let d = load_datum(&datum)?;
            let h = hc_parameter(&d, &lambda)?;
            let report = dirac_induction_ktype_check(&h)?;
            let passed = report.passed;
            verdict(
                passed,
                json!({ "lowest_k_type": lowest_k_type(&h), "dirac_induction": report }),
            )
        }
        Command::Spin(args) => {
            let d = load_datum(&args)?;
            let lemma = verify_spin_exterior_lemma(&d);
            let graded = graded_identity_holds(&d);
            let passed = lemma.passed && graded;
            verdict(
                passed,
                json!({
                    "spin": spin_module(&d),
                    "exterior": exterior_p(&d),
                    "lemma": lemma,
                    "graded_identity": graded,
                }),
            )
        }
        Command::Fixedpoint(FixedpointCommand::Index {
            datum,
            lambda,
            theta,
        }) => {
            let d = load_datum(&datum)?;
            let h = hc_parameter(&d, &lambda)?;
            let r = fixed_point_report(&h, &torus(&d, &theta)?)?;
            verdict(r.max_dev <= VALUE_TOL && r.ring_identity, to_value(&r))
        }
        Command::Fixedpoint(FixedpointCommand::Assembly {
            datum,
            highest,
            theta,
        }) => {
            let d = load_datum(&datum)?;
            let hw = weight_from(&highest.highest, &highest.highest2, "highest")?;
            let r = compact_assembly_check(&d, &hw, &torus(&d, &theta)?)?;
            verdict(r.max_dev <= VALUE_TOL, to_value(&r))
        }
        Command::Sl2(c) => dispatch_sl2(c),
        Command::Verify { catalog: _, seed } => {
            let r = verify_catalog(seed, &default_grid()?);
            verdict(r.passed, to_value(&r))
        }
    }
}

fn dispatch_char(command: CharCommand) -> Dispatch {
    match command {
        CharCommand::Weyl { datum, highest } => {
            let d = load_datum(&datum)?;
            let hw = weight_from(&highest.highest, &highest.highest2, "highest")?;
            let c = weyl_character(&d, &hw)?;
            Ok(json!({ "dimension": c.dimension().to_string(), "terms": c }))
        }
        CharCommand::Freudenthal { datum, highest } => {
            let d = load_datum(&datum)?;
            let hw = weight_from(&highest.highest, &highest.highest2, "highest")?;
            let c = freudenthal_character(&d, &hw)?;
            Ok(json!({ "dimension": c.dimension().to_string(), "terms": c }))
        }
        CharCommand::Decompose { datum, terms } => {
            let d = load_datum(&datum)?;
            let c = parse_character(&d, &terms)?;
            Ok(to_value(&decompose(&d, &c)?))
        }
        CharCommand::Eval {
            datum,
            highest,
            theta,
        } => {
            let d = load_datum(&datum)?;
            let hw = weight_from(&highest.highest, &highest.highest2, "highest")?;
            let t = torus(&d, &theta)?;
            let v = weyl_character(&d, &hw)?.evaluate(&t)?;
            Ok(json!({ "highest_weight": hw, "theta": t.angles(), "value": ComplexValue::from(v) }))
        }
    }
}

fn dispatch_sl2(command: Sl2Command) -> Dispatch {
    match command {
        Sl2Command::Coefficient {
            n,
            t,
            phi,
            psi,
            grid,
        } => {
            let grid = grid_from(&grid)?;
            let g = Su11::rotation(phi) * Su11::boost(t) * Su11::rotation(psi);
            let value = matrix_coefficient(n, &g)?;
            let oracle = bergman_inner_product(n, &g, &grid)?;
            let deviation = (value - oracle).norm();
            verdict(
                deviation <= 1e-6,
                json!({
                    "n": n,
                    "value": ComplexValue::from(value),
                    "oracle": ComplexValue::from(oracle),
                    "deviation": deviation,
                    "grid": grid,
                }),
            )
        }
        Sl2Command::FormalDegree { n, grid: g } => {
            let grid = grid_from(&g)?;
            Ok(to_value(&formal_degree(n, &grid, g.haar_scale)?))
        }
        Sl2Command::Orbital { n, theta, grid: g } => {
            let grid = grid_from(&g)?;
            Ok(to_value(&orbital_integral_character(
                n,
                theta,
                &grid,
                g.haar_scale,
            )?))
        }
        Sl2Command::Fgoi {
            mode,
            theta,
            grid: g,
        } => {
            let grid = grid_from(&g)?;
            let mode = match mode {
                ModeArg::GaussianL1 => EnvelopeMode::GaussianL1,
                ModeArg::EllipticFgoi => EnvelopeMode::EllipticFgoi,
            };
            let r = fgoi_envelope_check(mode, theta, &grid, g.haar_scale)?;
            verdict(r.converged, to_value(&r))
        }
    }
}
