//! Command-line front end: problem-file ingestion, subcommand dispatch and
//! deterministic reports.
//!
//! Exit codes: 0 success; 1 I/O or parse error; 2 precondition violation
//! (non-isolated singularity, non-ICIS tuple, dimension mismatch); 3
//! genericity certification failure after the redraw cap; 4 identity
//! verification failed (lhs != rhs) or internal cross-check inconsistency.

mod output;
mod problem;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use germcalc_core::geometry::LinearForm;
use germcalc_core::invariants::{
    brasselet_number, chi_milnor_fibre_isolated, euler_obstruction_of_function,
    euler_obstruction_with, evaluate_stratified_chi, intersection_multiplicity, milnor_hypersurface,
    milnor_icis, verify_int_numb_isolated, verify_int_numb_isolated_generic,
    verify_int_numb_isolated_with_generic_g, verify_le_greuel, verify_le_greuel_generic,
    verify_le_greuel_with_generic_g, verify_teissier_smooth, VerificationReport,
};
use germcalc_core::sbasis::InvariantValue;
use germcalc_core::Error as CoreError;

use output::{canonical_poly, render, report_json, Envelope, InputsEcho, SpaceEcho, StratumEcho};
use problem::ProblemFile;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Core(CoreError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Io(_) => 1,
        CliError::Core(core) => match core {
            CoreError::Syntax { .. }
            | CoreError::UnknownVariable { .. }
            | CoreError::BadExponent { .. } => 1,
            CoreError::GenericityFailure { .. } => 3,
            CoreError::Inconsistency { .. } => 4,
            _ => 2,
        },
    }
}

#[derive(Parser)]
#[command(
    name = "germcalc",
    about = "Exact local invariants of complex analytic germs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Problem file (JSON)
    #[arg(long)]
    input: PathBuf,
    /// Seed for the generic draws (overrides the problem file)
    #[arg(long)]
    seed: Option<u64>,
    /// Number of agreement samples per certification round
    #[arg(long)]
    samples: Option<u32>,
    /// Coefficient bound for drawn linear forms
    #[arg(long)]
    bound: Option<u32>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Pin the generic linear form instead of drawing it (certification
    /// checks still run); only meaningful for `eu`
    #[arg(long, value_name = "poly")]
    linear_form: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor number of a hypersurface germ
    Milnor(Common),
    /// Milnor number of an isolated complete intersection (the space ideal,
    /// with f appended when present)
    Icis(Common),
    /// Intersection multiplicity of the space curve with {f = 0}
    Imult(Common),
    /// Relative polar ideal of the pair (f, g) on the space
    Polar(Common),
    /// Local Euler obstruction of the space
    Eu(Common),
    /// Brasselet number of f on the space
    Brasselet(Common),
    /// Euler obstruction of the function f, with its Morse-point count
    #[command(name = "eu-f")]
    EuF(Common),
    /// Euler characteristic of the Milnor fibre of f on the space
    Chi(Common),
    /// Verify an identity
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Legreuel,
    Teissier,
    Intnumb,
    Stratified,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let (name, common, target) = match &cli.command {
        Command::Milnor(c) => ("milnor", c, None),
        Command::Icis(c) => ("icis", c, None),
        Command::Imult(c) => ("imult", c, None),
        Command::Polar(c) => ("polar", c, None),
        Command::Eu(c) => ("eu", c, None),
        Command::Brasselet(c) => ("brasselet", c, None),
        Command::EuF(c) => ("eu-f", c, None),
        Command::Chi(c) => ("chi", c, None),
        Command::Verify { target, common } => ("verify", common, Some(*target)),
    };
    match dispatch(name, common, target) {
        Ok((envelope, code)) => {
            print!("{}", render(&envelope, common.format == Format::Json));
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(
    name: &str,
    common: &Common,
    target: Option<VerifyTarget>,
) -> Result<(Envelope, i32), CliError> {
    let file = ProblemFile::load(&common.input)?;
    let cfg = file.config(common.seed, common.samples, common.bound);
    let vars = file.variables.clone();
    let command_name = match target {
        Some(t) => format!("verify {}", format!("{t:?}").to_lowercase()),
        None => name.to_string(),
    };

    let mut inputs = InputsEcho { variables: vars.clone(), ..Default::default() };
    if let Some(space) = &file.space {
        let germ_gens = space
            .ideal
            .iter()
            .map(|s| file.parse_poly(s))
            .collect::<Result<Vec<_>, _>>()?;
        inputs.space = Some(SpaceEcho {
            ideal: germ_gens.iter().map(|p| canonical_poly(p, &vars)).collect(),
            dim: space.dim,
        });
    }
    if let Some(f) = file.optional_f()? {
        inputs.f = Some(canonical_poly(&f, &vars));
    }
    if let Some(g) = file.optional_g()? {
        inputs.g = Some(canonical_poly(&g, &vars));
    }
    let pinned = common
        .linear_form
        .as_deref()
        .map(|text| -> Result<LinearForm, CliError> {
            let p = file.parse_poly(text)?;
            LinearForm::from_poly(&p).map_err(CliError::Core)
        })
        .transpose()?;
    if let Some(l) = &pinned {
        inputs.linear_form = Some(canonical_poly(&l.poly(), &vars));
        if name != "eu" {
            return Err(CliError::Io(
                "--linear-form pins the drawn form and is only meaningful for `eu`".into(),
            ));
        }
    }
    if let Some(strata) = &file.strata {
        let mut echo = Vec::new();
        for s in strata {
            let gens = s
                .ideal
                .iter()
                .map(|t| file.parse_poly(t))
                .collect::<Result<Vec<_>, _>>()?;
            echo.push(StratumEcho {
                ideal: gens.iter().map(|p| canonical_poly(p, &vars)).collect(),
                dim: s.dim,
                chi_complex_link: s.chi_complex_link,
                euler_obstruction_along: s.euler_obstruction_along,
            });
        }
        inputs.strata = Some(echo);
    }

    let mut envelope = Envelope {
        command: command_name,
        inputs,
        value: None,
        report: None,
        seed: cfg.seed.to_string(),
        samples: cfg.samples,
        bound: cfg.coefficient_bound,
        rounds: 0,
    };
    let mut code = 0;

    match (name, target) {
        ("milnor", _) => {
            require_ambient(&file, "milnor")?;
            let f = file.require_f()?;
            let mu = milnor_hypersurface(&f, file.nvars())?;
            envelope.value = Some(invariant_value_json(&mu));
            if !mu.is_finite() {
                eprintln!(
                    "error: the Jacobian quotient of f is infinite: f has a non-isolated critical point"
                );
                code = 2;
            }
        }
        ("icis", _) => {
            let germ = file.germ()?;
            let mut tuple = germ.defining().gens().to_vec();
            if let Some(f) = file.optional_f()? {
                tuple.push(f);
            }
            let mu = milnor_icis(&tuple, file.nvars())?;
            envelope.value = Some(serde_json::Value::String(mu.to_string()));
        }
        ("imult", _) => {
            let germ = file.germ()?;
            let f = file.require_f()?;
            let im = intersection_multiplicity(germ.defining(), &f)?;
            envelope.value = Some(invariant_value_json(&im));
            if !im.is_finite() {
                eprintln!("error: the intersection number is infinite: f vanishes on a curve component");
                code = 2;
            }
        }
        ("polar", _) => {
            let germ = file.germ()?;
            let f = file.require_f()?;
            let g = file
                .optional_g()?
                .ok_or_else(|| CliError::Io("polar needs g in the problem file".into()))?;
            let gamma = germcalc_core::geometry::polar_ideal(&germ, &f, &g)?;
            envelope.value = Some(serde_json::Value::Array(
                gamma
                    .gens()
                    .iter()
                    .map(|p| serde_json::Value::String(canonical_poly(p, &vars)))
                    .collect(),
            ));
        }
        ("eu", _) => {
            let germ = file.germ()?;
            let eu = euler_obstruction_with(&germ, &cfg, pinned.as_ref())?;
            envelope.value = Some(serde_json::Value::String(eu.value.to_string()));
            envelope.rounds = eu.rounds;
        }
        ("brasselet", _) => {
            let germ = file.germ()?;
            let f = file.require_f()?;
            let b = brasselet_number(&germ, &f, &cfg)?;
            envelope.value = Some(serde_json::Value::String(b.value.to_string()));
            envelope.rounds = b.rounds;
        }
        ("eu-f", _) => {
            let germ = file.germ()?;
            let f = file.require_f()?;
            let o = euler_obstruction_of_function(&germ, &f, &cfg)?;
            let mut report = VerificationReport {
                identity: "eu-f".to_string(),
                lhs: o.eu_f,
                rhs: o.eu_f,
                terms: vec![
                    ("Eu(X)".to_string(), o.eu_x),
                    ("B(X,f)".to_string(), o.brasselet),
                    ("Eu_f".to_string(), o.eu_f),
                    ("n_reg".to_string(), o.n_reg),
                ],
                certificates: o.certificates,
                rounds: o.rounds,
                pass: true,
                notes: vec!["n_reg is the Morse-point count (-1)^d * Eu_f".to_string()],
            };
            report.rounds = o.rounds;
            envelope.rounds = o.rounds;
            envelope.report = Some(report_json(&report));
        }
        ("chi", _) => {
            let germ = file.germ()?;
            let f = file.require_f()?;
            let chi = chi_milnor_fibre_isolated(&germ, &f, &cfg)?;
            envelope.value = Some(serde_json::Value::String(chi.value.to_string()));
            envelope.rounds = chi.rounds;
        }
        ("verify", Some(VerifyTarget::Legreuel)) => {
            let germ = file.germ()?;
            let report = match (file.optional_f()?, file.optional_g()?) {
                (Some(f), Some(g)) => verify_le_greuel(&germ, &f, &g, &cfg)?,
                (Some(f), None) => verify_le_greuel_with_generic_g(&germ, &f, &cfg)?,
                (None, None) => verify_le_greuel_generic(&germ, &cfg)?,
                (None, Some(_)) => {
                    return Err(CliError::Io("g is given without f".into()));
                }
            };
            code = finish_report(&mut envelope, report);
        }
        ("verify", Some(VerifyTarget::Teissier)) => {
            require_ambient(&file, "verify teissier")?;
            let f = file.require_f()?;
            let report = verify_teissier_smooth(&f, file.nvars(), &cfg)?;
            code = finish_report(&mut envelope, report);
        }
        ("verify", Some(VerifyTarget::Intnumb)) => {
            let germ = file.germ()?;
            let report = match (file.optional_f()?, file.optional_g()?) {
                (Some(f), Some(g)) => verify_int_numb_isolated(&germ, &f, &g, &cfg)?,
                (Some(f), None) => verify_int_numb_isolated_with_generic_g(&germ, &f, &cfg)?,
                (None, None) => verify_int_numb_isolated_generic(&germ, &cfg)?,
                (None, Some(_)) => {
                    return Err(CliError::Io("g is given without f".into()));
                }
            };
            code = finish_report(&mut envelope, report);
        }
        ("verify", Some(VerifyTarget::Stratified)) => {
            let strata = file.strata_data()?;
            let f = file.require_f()?;
            let g = file.optional_g()?;
            let report = evaluate_stratified_chi(&strata, &f, g.as_ref(), &cfg)?;
            code = finish_report(&mut envelope, report);
        }
        _ => unreachable!("clap enforces the command set"),
    }

    Ok((envelope, code))
}

fn finish_report(envelope: &mut Envelope, report: VerificationReport) -> i32 {
    envelope.rounds = report.rounds;
    let pass = report.pass;
    envelope.report = Some(report_json(&report));
    if pass {
        0
    } else {
        4
    }
}

fn invariant_value_json(v: &InvariantValue) -> serde_json::Value {
    serde_json::Value::String(v.to_string())
}

fn require_ambient(file: &ProblemFile, what: &str) -> Result<(), CliError> {
    match &file.space {
        None => Ok(()),
        Some(space) if space.ideal.is_empty() => Ok(()),
        Some(_) => Err(CliError::Core(CoreError::Precondition(format!(
            "{what} works on the ambient space; remove the space ideal from the problem file"
        )))),
    }
}
