//! Batch front end: JSON problem descriptions in, one JSON document out.
//!
//! Commands read a single JSON object from --input FILE or standard input
//! (verify reads input only when --input is given), print one compact JSON
//! result on standard output, and keep diagnostics on standard error.
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use detline_core::autgroup::{generator, AutClass, AutError};
use detline_core::curve::{RealCurve, RealW1, TopologyError, W1LengthError};
use detline_core::f2::F2Vector;
use detline_core::oracle::{verify_topology, verify_up_to_genus, OracleError, VerificationReport};
use detline_core::signs::{
    det_orientation_sign, eps_pin, loop_orientability, picard_w1, s_n, s_top, FullAutClass,
    PicardCase, RealBundle, SLClass, SignsError,
};
use detline_core::spin::{act, arf_delta, bordism_class, enumerate_real_spin, SpinError};

#[derive(Parser)]
#[command(
    name = "detline",
    about = "Orientation signs of automorphism actions on determinant lines over real curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign of an automorphism class on the determinant line of a bundle.
    Detsign(InputArg),
    /// Real Spin structures: enumerate an orbit, act on a form, or read off
    /// its bordism class.
    #[command(subcommand)]
    Spin(SpinCommand),
    /// Stiefel-Whitney class of the determinant bundle over a real Picard
    /// component.
    Picard(InputArg),
    /// Orientability of the determinant line along a loop of real bundles.
    Loop(InputArg),
    /// Run the brute-force verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum SpinCommand {
    /// List the real Spin structures with a given orientability class.
    Enumerate(InputArg),
    /// Apply an automorphism class to a real Spin structure.
    Act(InputArg),
    /// Orientability class and Arf invariant of a real Spin structure.
    Bordism(InputArg),
}

#[derive(Args)]
struct InputArg {
    /// Path to a JSON problem description; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Optional JSON file naming a single topology to verify.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest genus to sweep when no explicit curve is given (at most 6).
    #[arg(long, default_value_t = 3)]
    max_genus: usize,
}

struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        CliError::new("invalid_topology", e.to_string())
    }
}

impl From<W1LengthError> for CliError {
    fn from(e: W1LengthError) -> Self {
        CliError::new("w1_length", e.to_string())
    }
}

impl From<AutError> for CliError {
    fn from(e: AutError) -> Self {
        let kind = match e {
            AutError::UnknownGenerator { .. } => "unknown_generator",
            AutError::ExponentShape { .. } => "exponent_shape",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<SpinError> for CliError {
    fn from(e: SpinError) -> Self {
        let kind = match e {
            SpinError::BadW1Parity => "bad_w1_parity",
            SpinError::NotRealSpin => "not_real_spin",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<SignsError> for CliError {
    fn from(e: SignsError) -> Self {
        let kind = match e {
            SignsError::ZeroRank => "zero_rank",
            SignsError::RankOneRequired { .. } | SignsError::RankAtLeastTwoRequired { .. } => {
                "rank"
            }
            SignsError::W1Length { .. } => "w1_length",
            SignsError::DegreeParity => "degree_parity",
            SignsError::SlLength { .. } | SignsError::SlPartShape => "sl_shape",
            SignsError::CurveMismatch => "curve_mismatch",
            SignsError::MissingBasepoint => "missing_basepoint",
            SignsError::ComponentOutOfRange { .. } => "component_out_of_range",
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::new("bound_exceeded", e.to_string())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSpec {
    genus: usize,
    real_components: usize,
    separating: bool,
}

impl CurveSpec {
    fn build(&self) -> Result<RealCurve, CliError> {
        Ok(RealCurve::new(
            self.genus,
            self.real_components,
            self.separating,
        )?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleSpec {
    rank: usize,
    degree: i64,
    w1: Vec<u8>,
}

impl BundleSpec {
    fn build(&self, curve: RealCurve) -> Result<RealBundle, CliError> {
        Ok(RealBundle::new(
            curve,
            self.rank,
            self.degree,
            parse_w1(&curve, &self.w1)?,
        )?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AutSpec {
    sign: u8,
    #[serde(default)]
    f_exponents: Vec<i64>,
    #[serde(default)]
    g_exponents: Vec<i64>,
    /// Optional exponent of the dependent oval generator f0, folded in via
    /// the central relation.
    #[serde(default)]
    f0: Option<i64>,
}

impl AutSpec {
    fn build(&self, curve: RealCurve) -> Result<AutClass, CliError> {
        if self.sign > 1 {
            return Err(CliError::new("invalid_bits", "sign must be 0 or 1"));
        }
        let base = AutClass::from_parts(curve, self.sign, &self.f_exponents, &self.g_exponents)?;
        Ok(match self.f0 {
            Some(e) => base.compose(&generator(curve, "f0").expect("f0 always exists").pow(e)),
            None => base,
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormSpec {
    q_a: Vec<u8>,
    q_b: Vec<u8>,
}

impl FormSpec {
    fn build(&self, curve: &RealCurve) -> Result<detline_core::spin::QuadraticForm, CliError> {
        let g = curve.genus();
        if self.q_a.len() != g || self.q_b.len() != g {
            return Err(CliError::new(
                "form_length",
                format!(
                    "a genus-{g} form needs {g} a-values and {g} b-values, got {} and {}",
                    self.q_a.len(),
                    self.q_b.len()
                ),
            ));
        }
        let mut bits = Vec::with_capacity(2 * g);
        bits.extend_from_slice(&self.q_a);
        bits.extend_from_slice(&self.q_b);
        check_bits(&bits)?;
        Ok(detline_core::spin::QuadraticForm::from_basis_values(
            curve,
            F2Vector::from_bits(bits),
        ))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DetsignInput {
    curve: CurveSpec,
    bundle: BundleSpec,
    automorphism: AutSpec,
    #[serde(default)]
    sl: Option<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinEnumerateInput {
    curve: CurveSpec,
    w1: Vec<u8>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinActInput {
    curve: CurveSpec,
    automorphism: AutSpec,
    form: FormSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinBordismInput {
    curve: CurveSpec,
    form: FormSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PicardInput {
    curve: CurveSpec,
    d: i64,
    w1: Vec<u8>,
    #[serde(default)]
    basepoint: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LoopInput {
    curve: CurveSpec,
    bundle: BundleSpec,
    clutching: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyInput {
    curve: RawTopology,
}

/// Topology fields without validation; verify reports rejection instead of
/// erroring on an invalid combination.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTopology {
    genus: usize,
    real_components: usize,
    separating: bool,
}

fn check_bits(bits: &[u8]) -> Result<(), CliError> {
    if bits.iter().any(|&b| b > 1) {
        return Err(CliError::new("invalid_bits", "bit arrays may only contain 0 or 1"));
    }
    Ok(())
}

fn parse_w1(curve: &RealCurve, bits: &[u8]) -> Result<RealW1, CliError> {
    check_bits(bits)?;
    Ok(RealW1::from_bits(curve, bits)?)
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::new("io", format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(raw: &str) -> Result<T, CliError> {
    serde_json::from_str(raw).map_err(|e| CliError::new("invalid_json", e.to_string()))
}

fn load<T: serde::de::DeserializeOwned>(arg: &InputArg) -> Result<T, CliError> {
    parse(&read_input(&arg.input)?)
}

fn w1_bits(w: &RealW1) -> Vec<u8> {
    w.bits().bits().to_vec()
}

fn cmd_detsign(arg: &InputArg) -> Result<Value, CliError> {
    let input: DetsignInput = load(arg)?;
    let curve = input.curve.build()?;
    let bundle = input.bundle.build(curve)?;
    let det_part = input.automorphism.build(curve)?;
    let sl_part = match &input.sl {
        Some(entries) => Some(SLClass::new(&curve, entries.clone())?),
        None => None,
    };
    let full = FullAutClass::new(det_part.clone(), sl_part.clone());
    let sign = det_orientation_sign(&bundle, &full)?;
    let s_n_value = s_n(&bundle.determinant(), &det_part)?;
    let eps = match sl_part {
        Some(sl) => eps_pin(&bundle, &sl)?.value(),
        None => 1,
    };
    // The Arf shift is only defined at classes of Spin parity; a bundle of
    // the other degree parity reports null there.
    let spin_parity = ((curve.genus() + 1) % 2) as u8;
    let delta = if bundle.degree().rem_euclid(2) as u8 == spin_parity {
        json!(arf_delta(&det_part, bundle.w1())?)
    } else {
        Value::Null
    };
    Ok(json!({
        "sign": sign.value(),
        "s_top": s_top(&det_part),
        "s_N": s_n_value,
        "eps_pin": eps,
        "arf_delta": delta,
    }))
}

fn cmd_spin_enumerate(arg: &InputArg) -> Result<Value, CliError> {
    let input: SpinEnumerateInput = load(arg)?;
    let curve = input.curve.build()?;
    let w = parse_w1(&curve, &input.w1)?;
    let forms = enumerate_real_spin(&curve, &w)?;
    let listed: Vec<Value> = forms
        .iter()
        .map(|q| {
            json!({
                "q_a": q.a_values(),
                "q_b": q.b_values(),
                "arf": q.arf(),
            })
        })
        .collect();
    Ok(json!({
        "w1": w1_bits(&w),
        "count": listed.len(),
        "forms": listed,
    }))
}

fn cmd_spin_act(arg: &InputArg) -> Result<Value, CliError> {
    let input: SpinActInput = load(arg)?;
    let curve = input.curve.build()?;
    let f = input.automorphism.build(curve)?;
    let q = input.form.build(&curve)?;
    let moved = act(&f, &q)?;
    Ok(json!({
        "form": {"q_a": moved.a_values(), "q_b": moved.b_values()},
    }))
}

fn cmd_spin_bordism(arg: &InputArg) -> Result<Value, CliError> {
    let input: SpinBordismInput = load(arg)?;
    let curve = input.curve.build()?;
    let q = input.form.build(&curve)?;
    let class = bordism_class(&curve, &q)?;
    Ok(json!({
        "w1": w1_bits(&class.w1),
        "arf": class.arf,
    }))
}

fn cmd_picard(arg: &InputArg) -> Result<Value, CliError> {
    let input: PicardInput = load(arg)?;
    let curve = input.curve.build()?;
    let w = parse_w1(&curve, &input.w1)?;
    let out = picard_w1(&curve, input.d, &w, input.basepoint)?;
    let applies = match out.case {
        PicardCase::Unpointed => "picp",
        PicardCase::Pointed => "pic",
    };
    Ok(json!({
        "applies": applies,
        "w_used": w1_bits(&out.w_used),
        "functional_on_Fminus": out.functional.bits(),
    }))
}

fn cmd_loop(arg: &InputArg) -> Result<Value, CliError> {
    let input: LoopInput = load(arg)?;
    let curve = input.curve.build()?;
    let bundle = input.bundle.build(curve)?;
    let clutching = SLClass::new(&curve, input.clutching.clone())?;
    Ok(json!({
        "orientable": loop_orientability(&bundle, &clutching)?,
    }))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(Value, bool), CliError> {
    let report: VerificationReport = match &args.input {
        Some(path) => {
            let raw = fs::read_to_string(path)
                .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", path.display())))?;
            let input: VerifyInput = parse(&raw)?;
            verify_topology(
                input.curve.genus,
                input.curve.real_components,
                input.curve.separating,
                args.seed,
            )?
        }
        None => verify_up_to_genus(args.max_genus, args.seed)?,
    };
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        eprintln!("{status} {} {}", check.name, check.topology);
    }
    let passed = report.passed();
    let value =
        serde_json::to_value(&report).map_err(|e| CliError::new("io", e.to_string()))?;
    Ok((value, passed))
}

fn dispatch(cli: &Cli) -> Result<(Value, bool), CliError> {
    match &cli.command {
        Command::Detsign(arg) => Ok((cmd_detsign(arg)?, true)),
        Command::Spin(SpinCommand::Enumerate(arg)) => Ok((cmd_spin_enumerate(arg)?, true)),
        Command::Spin(SpinCommand::Act(arg)) => Ok((cmd_spin_act(arg)?, true)),
        Command::Spin(SpinCommand::Bordism(arg)) => Ok((cmd_spin_bordism(arg)?, true)),
        Command::Picard(arg) => Ok((cmd_picard(arg)?, true)),
        Command::Loop(arg) => Ok((cmd_loop(arg)?, true)),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((value, passed)) => {
            println!("{value}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!(
                "{}",
                json!({"error": {"kind": e.kind, "message": e.message}})
            );
            ExitCode::from(2)
        }
    }
}
