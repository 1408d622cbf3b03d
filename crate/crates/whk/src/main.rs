//! `whk`: structure-constant computer algebra for weak bialgebras, weak
//! Hopf algebras and weak Doi-Hopf data.
//!
//! Exit codes: 0 when all requested checks pass, 1 on a check failure,
//! 2 on an input error (including malformed JSON).

mod io;
mod report_out;
mod suites;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weakhopf::comodact::{check_comodule_algebra, check_module_coalgebra};
use weakhopf::gallery::{by_name, example_datum, ExampleKind};
use weakhopf::hopfcore::{
    check_wba, check_wha, dual_wba, dual_wha, op_cop_variants, tensor_wba, tensor_wha,
    AlgebraModule, Comodule,
};
use weakhopf::kernel::FieldSpec;
use weakhopf::report::Report;

use io::*;
use report_out::{print_report, report_to_json, ReportFormat};
use suites::{run_suite, SuiteKind};

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Input(String),
    /// A failed construction or verification: exit code 1.
    Check(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn check(msg: impl Into<String>) -> Self {
        CliError::Check(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Check(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "whk",
    about = "Exact verification of weak Hopf algebra and weak Doi-Hopf structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Base field: `rational` or `fp:<p>`.
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    /// Write JSON output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format for check-style commands.
    #[arg(long, global = true, default_value = "text")]
    report: ReportArg,
    /// Guardrail on base dimensions of parsed structures.
    #[arg(long, global = true, default_value_t = 64)]
    max_dim: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

impl From<ReportArg> for ReportFormat {
    fn from(r: ReportArg) -> Self {
        match r {
            ReportArg::Text => ReportFormat::Text,
            ReportArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a structure read from JSON.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Construct a derived object and emit its JSON.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Integral spaces and their example realizations.
    Integrals {
        #[command(subcommand)]
        kind: IntegralsKind,
    },
    /// Emit a built-in instance (g2, g3, g4, zn(N), pair(N); prefixes
    /// dual: and opcop:).
    Gallery { name: String },
    /// Run a named verification suite over gallery bases.
    Suite {
        which: SuiteArg,
        /// Gallery bases to run over (repeatable).
        #[arg(long = "base", default_values_t = [String::from("g2"), String::from("g3")])]
        bases: Vec<String>,
    },
}

#[derive(Args)]
struct InFile {
    /// Input JSON file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum CheckKind {
    /// Associativity and unit laws of the algebra part.
    Algebra(InFile),
    /// Coassociativity and counit laws of the coalgebra part.
    Coalgebra(InFile),
    /// The full weak bialgebra suite.
    Wba(InFile),
    /// The full weak Hopf algebra suite (needs the antipode).
    Wha(InFile),
    /// Weak comodule-algebra axioms and non-degeneracy of a coaction.
    Coaction(InFile),
    /// Weak module-coalgebra axioms and non-degeneracy of an action.
    Action(InFile),
    /// Builds and validates a weak Doi-Hopf datum.
    Datum(InFile),
    /// Weak Doi-Hopf module axioms.
    Module(InFile),
    /// Yetter-Drinfel'd module axioms (plus the single relation when the
    /// host carries an antipode).
    Yd(InFile),
}

#[derive(Args)]
struct GalleryDatum {
    /// Which standard datum: ex1, ex2, ex3 or ex4.
    #[arg(long)]
    datum: String,
    /// Gallery base the datum is built over.
    #[arg(long)]
    base: String,
}

#[derive(Subcommand)]
enum BuildKind {
    /// The dual weak bialgebra or weak Hopf algebra.
    Dual(InFile),
    /// The opposite/co-opposite variant (default: both flips).
    Opcop {
        #[command(flatten)]
        input: InFile,
        #[arg(long, default_value = "opcop")]
        variant: String,
    },
    /// Componentwise tensor product of two structures.
    Tensor {
        #[arg(long = "in", num_args = 2)]
        inputs: Vec<PathBuf>,
    },
    /// The weak smash product of a standard gallery datum.
    Smash(GalleryDatum),
    /// The Drinfel'd double of a gallery base or a JSON structure.
    Double {
        #[arg(long)]
        base: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// The twisted double (opposite of the double of the op-cop variant).
    TwistedDouble {
        #[arg(long)]
        base: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// The induced Doi-Hopf module of the regular module.
    Induce(GalleryDatum),
    /// The coinduced Doi-Hopf module of the regular comodule.
    Coinduce(GalleryDatum),
}

#[derive(Subcommand)]
enum IntegralsKind {
    /// Left or right integral space of a gallery base.
    Space {
        #[arg(long)]
        base: String,
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// The space of Doi-Hopf integral transforms of a standard datum.
    V4(GalleryDatum),
    /// The example realization (center or commutant) with the comparison
    /// map report.
    V0 {
        /// Which example: 1, 2, 3 or 4.
        #[arg(long)]
        example: usize,
        #[arg(long)]
        base: String,
    },
    /// Existence and uniqueness of a normalized transform.
    Normalized(GalleryDatum),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Duality,
    Smash,
    Adjunction,
    Double,
    Integrals,
}

fn parse_field_flag(s: &str) -> Result<FieldSpec, CliError> {
    if s == "rational" || s == "rationals" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::input(format!("bad prime in --field {s:?}")))?;
        return FieldSpec::prime(p).map_err(|e| CliError::input(format!("{e}")));
    }
    Err(CliError::input(format!(
        "--field must be rational or fp:<p>, got {s:?}"
    )))
}

fn parse_example(s: &str) -> Result<ExampleKind, CliError> {
    match s {
        "ex1" | "1" => Ok(ExampleKind::Ex1),
        "ex2" | "2" => Ok(ExampleKind::Ex2),
        "ex3" | "3" => Ok(ExampleKind::Ex3),
        "ex4" | "4" => Ok(ExampleKind::Ex4),
        other => Err(CliError::input(format!("unknown example {other:?}"))),
    }
}

fn emit_json(value: &serde_json::Value, out: &Option<PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn finish_report(report: Report, format: ReportFormat) -> bool {
    let pass = report.all_pass();
    print_report(&report, format);
    pass
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let field = parse_field_flag(&cli.field)?;
    let format: ReportFormat = cli.report.into();
    let max_dim = cli.max_dim;

    match cli.command {
        Command::Gallery { name } => {
            let h = by_name(&name, field).map_err(|e| CliError::input(format!("{e}")))?;
            let json = constants_to_json(&h.constants(), None);
            emit_json(
                &serde_json::to_value(&json).expect("serializable"),
                &cli.out,
            )?;
            Ok(true)
        }
        Command::Check { kind } => {
            let report: Report = match kind {
                CheckKind::Algebra(f) => {
                    let j: StructureJson = read_json(&f.input)?;
                    let sc = json_to_constants(&j, max_dim)?;
                    let alg =
                        weakhopf::hopfcore::AlgebraData::candidate(sc.field, sc.mult, sc.unit)
                            .map_err(|e| CliError::input(format!("{e}")))?;
                    alg.check()
                }
                CheckKind::Coalgebra(f) => {
                    let j: StructureJson = read_json(&f.input)?;
                    let sc = json_to_constants(&j, max_dim)?;
                    let coalg = weakhopf::hopfcore::CoalgebraData::candidate(
                        sc.field, sc.comult, sc.counit,
                    )
                    .map_err(|e| CliError::input(format!("{e}")))?;
                    coalg.check()
                }
                CheckKind::Wba(f) => {
                    let j: StructureJson = read_json(&f.input)?;
                    let sc = json_to_constants(&j, max_dim)?;
                    check_wba(&sc)
                }
                CheckKind::Wha(f) => {
                    let j: StructureJson = read_json(&f.input)?;
                    let sc = json_to_constants(&j, max_dim)?;
                    check_wha(&sc)
                }
                CheckKind::Coaction(f) => {
                    let j: CoactionJson = read_json(&f.input)?;
                    let loaded = load_coaction(j, &base_dir(&f.input), max_dim)?;
                    let mut report = check_comodule_algebra(&loaded.coaction);
                    report.merge(
                        "",
                        weakhopf::comodact::check_nondegenerate_coaction(&loaded.coaction),
                    );
                    report
                }
                CheckKind::Action(f) => {
                    let j: ActionJson = read_json(&f.input)?;
                    let action = load_action(j, &base_dir(&f.input), max_dim)?;
                    let mut report = check_module_coalgebra(&action);
                    report.merge(
                        "",
                        weakhopf::comodact::check_nondegenerate_action(&action),
                    );
                    report
                }
                CheckKind::Datum(f) => {
                    let j: DatumJson = read_json(&f.input)?;
                    let datum = load_datum(j, &base_dir(&f.input), max_dim)?;
                    let mut report = Report::new();
                    report.record("datum.valid", "all constituent axioms", true);
                    report.record(
                        "datum.nondegenerate",
                        "coaction and action non-degenerate",
                        datum.nondegenerate(),
                    );
                    report
                }
                CheckKind::Module(f) => {
                    let j: ModuleJson = read_json(&f.input)?;
                    let module = load_module(j, &base_dir(&f.input), max_dim)?;
                    weakhopf::doihopf::check_module(&module)
                }
                CheckKind::Yd(f) => {
                    let j: YdJson = read_json(&f.input)?;
                    let (module, wha) = load_yd(j, &base_dir(&f.input), max_dim)?;
                    let mut report = weakhopf::double::check_yd(&module);
                    if let Some(wha) = wha {
                        report.merge(
                            "",
                            weakhopf::double::check_yd_single_relation(&module, &wha)
                                .map_err(|e| CliError::check(format!("{e}")))?,
                        );
                    }
                    report
                }
            };
            Ok(finish_report(report, format))
        }
        Command::Build { kind } => {
            let value: serde_json::Value = match kind {
                BuildKind::Dual(f) => {
                    let j: StructureJson = read_json(&f.input)?;
                    let sc = json_to_constants(&j, max_dim)?;
                    let dual_sc = if sc.antipode.is_some() {
                        dual_wha(&wha_from_json(&j, max_dim)?)
                            .map_err(|e| CliError::check(format!("{e}")))?
                            .constants()
                    } else {
                        dual_wba(&wba_from_json(&j, max_dim)?)
                            .map_err(|e| CliError::check(format!("{e}")))?
                            .constants()
                    };
                    serde_json::to_value(constants_to_json(&dual_sc, None)).expect("serializable")
                }
                BuildKind::Opcop { input, variant } => {
                    let j: StructureJson = read_json(&input.input)?;
                    let h = wha_from_json(&j, max_dim)?;
                    let variants =
                        op_cop_variants(&h).map_err(|e| CliError::check(format!("{e}")))?;
                    let sc = match variant.as_str() {
                        "op" => variants.op.constants(),
                        "cop" => variants.cop.constants(),
                        "opcop" | "op_cop" => variants.op_cop.constants(),
                        other => {
                            return Err(CliError::input(format!("unknown variant {other:?}")))
                        }
                    };
                    serde_json::to_value(constants_to_json(&sc, None)).expect("serializable")
                }
                BuildKind::Tensor { inputs } => {
                    if inputs.len() != 2 {
                        return Err(CliError::input("tensor needs exactly two --in files"));
                    }
                    let j1: StructureJson = read_json(&inputs[0])?;
                    let j2: StructureJson = read_json(&inputs[1])?;
                    let sc1 = json_to_constants(&j1, max_dim)?;
                    let sc2 = json_to_constants(&j2, max_dim)?;
                    let sc = if sc1.antipode.is_some() && sc2.antipode.is_some() {
                        tensor_wha(&wha_from_json(&j1, max_dim)?, &wha_from_json(&j2, max_dim)?)
                            .map_err(|e| CliError::check(format!("{e}")))?
                            .constants()
                    } else {
                        tensor_wba(&wba_from_json(&j1, max_dim)?, &wba_from_json(&j2, max_dim)?)
                            .map_err(|e| CliError::check(format!("{e}")))?
                            .constants()
                    };
                    serde_json::to_value(constants_to_json(&sc, None)).expect("serializable")
                }
                BuildKind::Smash(g) => {
                    let h = by_name(&g.base, field).map_err(|e| CliError::input(format!("{e}")))?;
                    let ex = example_datum(parse_example(&g.datum)?, &h)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    let s = weakhopf::smash::build_smash(&ex.datum)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    serde_json::to_value(algebra_only_json(&s.algebra)).expect("serializable")
                }
                BuildKind::Double { base, input } => {
                    let h = load_wha_arg(base, input, field, max_dim)?;
                    let d = weakhopf::double::build_double(&h)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    serde_json::to_value(constants_to_json(&d.wha.constants(), None))
                        .expect("serializable")
                }
                BuildKind::TwistedDouble { base, input } => {
                    let h = load_wha_arg(base, input, field, max_dim)?;
                    let t = weakhopf::double::build_twisted_double(&h)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    serde_json::to_value(algebra_only_json(&t.algebra)).expect("serializable")
                }
                BuildKind::Induce(g) => {
                    let h = by_name(&g.base, field).map_err(|e| CliError::input(format!("{e}")))?;
                    let ex = example_datum(parse_example(&g.datum)?, &h)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    let regular = AlgebraModule::regular(ex.datum.algebra());
                    let induced = weakhopf::adjoint::induce_g(&regular, &ex.datum)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    module_to_json(&induced.module)
                }
                BuildKind::Coinduce(g) => {
                    let h = by_name(&g.base, field).map_err(|e| CliError::input(format!("{e}")))?;
                    let ex = example_datum(parse_example(&g.datum)?, &h)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    let regular = Comodule::regular(ex.datum.coalgebra());
                    let coinduced = weakhopf::adjoint::coinduce_ghat(&regular, &ex.datum)
                        .map_err(|e| CliError::check(format!("{e}")))?;
                    module_to_json(&coinduced.module)
                }
            };
            emit_json(&value, &cli.out)?;
            Ok(true)
        }
        Command::Integrals { kind } => match kind {
            IntegralsKind::Space { base, side } => {
                let h = by_name(&base, field).map_err(|e| CliError::input(format!("{e}")))?;
                let side = match side.as_str() {
                    "left" => weakhopf::integrals::IntegralSide::Left,
                    "right" => weakhopf::integrals::IntegralSide::Right,
                    other => return Err(CliError::input(format!("unknown side {other:?}"))),
                };
                let space = weakhopf::integrals::integral_space(&h, side);
                let value = serde_json::json!({
                    "side": format!("{side:?}").to_lowercase(),
                    "dim": space.space.dim(),
                    "basis": space.space.basis().iter()
                        .map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "nondegenerate": space.nondegenerate,
                });
                emit_json(&value, &cli.out)?;
                Ok(true)
            }
            IntegralsKind::V4(g) => {
                let h = by_name(&g.base, field).map_err(|e| CliError::input(format!("{e}")))?;
                let ex = example_datum(parse_example(&g.datum)?, &h)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                let transforms = weakhopf::integrals::compute_integral_transforms(&ex.datum)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                let verified = transforms
                    .space
                    .basis()
                    .iter()
                    .all(|gm| weakhopf::integrals::verify_integral_transform(&ex.datum, gm));
                let value = serde_json::json!({
                    "dim": transforms.space.dim(),
                    "verified_by_substitution": verified,
                    "basis": transforms.space.basis().iter()
                        .map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                });
                emit_json(&value, &cli.out)?;
                Ok(verified)
            }
            IntegralsKind::V0 { example, base } => {
                let h = by_name(&base, field).map_err(|e| CliError::input(format!("{e}")))?;
                let kind = parse_example(&format!("ex{example}"))?;
                let ex = example_datum(kind, &h).map_err(|e| CliError::check(format!("{e}")))?;
                let transforms = weakhopf::integrals::compute_integral_transforms(&ex.datum)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                let realization = weakhopf::integrals::example_realization(&ex, &transforms)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                if matches!(format, ReportFormat::Json) {
                    let value = serde_json::json!({
                        "dim_transforms": transforms.space.dim(),
                        "dim_target": realization.space.dim(),
                        "report": report_to_json(&realization.report),
                    });
                    emit_json(&value, &cli.out)?;
                } else {
                    println!(
                        "transform space dim {}, target space dim {}",
                        transforms.space.dim(),
                        realization.space.dim()
                    );
                    print_report(&realization.report, format);
                }
                Ok(realization.report.all_pass())
            }
            IntegralsKind::Normalized(g) => {
                let h = by_name(&g.base, field).map_err(|e| CliError::input(format!("{e}")))?;
                let ex = example_datum(parse_example(&g.datum)?, &h)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                let transforms = weakhopf::integrals::compute_integral_transforms(&ex.datum)
                    .map_err(|e| CliError::check(format!("{e}")))?;
                let mut report = Report::new();
                match weakhopf::integrals::normalized_transforms(&transforms) {
                    Some(sol) => {
                        report.record("normalized.exists", "a normalized transform exists", true);
                        report.record(
                            "normalized.unique",
                            "the normalized transform is unique",
                            sol.homogeneous.is_zero(),
                        );
                        let gamma = transforms.space.lift(&sol.particular);
                        report.record(
                            "normalized.verified",
                            "the candidate satisfies the normalization identity",
                            weakhopf::integrals::check_normalized(&transforms, &gamma),
                        );
                    }
                    None => {
                        report.record("normalized.exists", "a normalized transform exists", false);
                    }
                }
                Ok(finish_report(report, format))
            }
        },
        Command::Suite { which, bases } => {
            let kind = match which {
                SuiteArg::All => SuiteKind::All,
                SuiteArg::Duality => SuiteKind::Duality,
                SuiteArg::Smash => SuiteKind::Smash,
                SuiteArg::Adjunction => SuiteKind::Adjunction,
                SuiteArg::Double => SuiteKind::Double,
                SuiteArg::Integrals => SuiteKind::Integrals,
            };
            let results = run_suite(kind, &bases, field)?;
            let mut all = true;
            match format {
                ReportFormat::Json => {
                    let value = serde_json::json!(results
                        .iter()
                        .map(|r| serde_json::json!({"id": r.id, "pass": r.pass}))
                        .collect::<Vec<_>>());
                    emit_json(&value, &cli.out)?;
                    all = results.iter().all(|r| r.pass);
                }
                ReportFormat::Text => {
                    for r in &results {
                        println!("[{}] {}", if r.pass { "PASS" } else { "FAIL" }, r.id);
                        all &= r.pass;
                    }
                }
            }
            Ok(all)
        }
    }
}

fn load_wha_arg(
    base: Option<String>,
    input: Option<PathBuf>,
    field: FieldSpec,
    max_dim: usize,
) -> Result<weakhopf::hopfcore::WeakHopfAlgebra, CliError> {
    match (base, input) {
        (Some(name), None) => by_name(&name, field).map_err(|e| CliError::input(format!("{e}"))),
        (None, Some(path)) => {
            let j: StructureJson = read_json(&path)?;
            wha_from_json(&j, max_dim)
        }
        _ => Err(CliError::input("give exactly one of --base or --in")),
    }
}

/// Behave like an ordinary unix filter when the consumer closes the pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Check(msg)) => {
            eprintln!("check failure: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}
