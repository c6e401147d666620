use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spotty::code::{joint_statistics, LinearCode, DEFAULT_BUDGET};
use spotty::codespec::CodeSpec;
use spotty::enumerators::{
    hamming_enumerator, joint_enumerator, joint_macwilliams, lee_enumerator, lee_macwilliams,
    macwilliams_hamming, split_enumerator, split_macwilliams, Fault, JointVariant, KernelCache,
};
use spotty::poly::MultiPoly;
use spotty::verify::{identity_sweep, lemma_suite, VerificationReport};
use spotty::weights::SpottyParams;
use spotty::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;
const EXIT_MISMATCH: u8 = 5;

#[derive(Parser)]
#[command(name = "spotty", version, about = "m-spotty weight enumerators and their MacWilliams transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hamming,
    Lee,
    Split,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Transform,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Plain,
    #[value(alias = "dual_c")]
    DualC,
    #[value(alias = "dual_d")]
    DualD,
    #[value(alias = "dual_both")]
    DualBoth,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Lemmas,
    Identities,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InjectedFault {
    CorruptTheta,
}

#[derive(clap::Args)]
struct Common {
    /// Spotty parameter t, 1 <= t <= b.
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of vectors any exhaustive enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerator of the (first) code in a spec file.
    Enum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Hamming)]
        kind: Kind,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerator of the dual code, by transform or brute force.
    DualEnum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Hamming)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Method::Transform)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Joint enumerator of a two-code spec, or one of its MacWilliams images.
    Joint {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Plain)]
        variant: Variant,
        #[command(flatten)]
        common: Common,
    },
    /// Lemma checks and the randomized transform-versus-brute-force sweep.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances in the identity sweep.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Test hook: corrupt a kernel table to exercise failure reporting.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<InjectedFault>,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Config(_) | Error::Domain(_) => EXIT_PARSE,
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Unsupported(_) => EXIT_UNSUPPORTED,
        Error::Integrality(_) => EXIT_VERIFY_FAILED,
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    Code(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn load(path: &Path) -> Result<CodeSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(CodeSpec::parse(&text)?)
}

fn render(poly: &MultiPoly, format: Format) -> String {
    match format {
        Format::Text => poly.to_string(),
        Format::Json => json!({
            "polynomial": poly.to_json(),
            "value_at_ones": poly.sum_of_coefficients().to_string(),
        })
        .to_string(),
    }
}

fn direct(code: &LinearCode, kind: Kind, params: &SpottyParams) -> spotty::Result<MultiPoly> {
    match kind {
        Kind::Hamming => hamming_enumerator(code, params),
        Kind::Lee => lee_enumerator(code, params),
        Kind::Split => split_enumerator(code, params),
    }
}

fn transform(code: &LinearCode, kind: Kind, params: &SpottyParams) -> spotty::Result<MultiPoly> {
    let cache = KernelCache::new();
    let ring = code.ring();
    match kind {
        Kind::Hamming => macwilliams_hamming(&cache, &code.alpha_distribution(), code.size(), ring.size(), params),
        Kind::Split => split_macwilliams(&cache, &code.profile_distribution(), code.size(), ring.size(), params),
        Kind::Lee => {
            if !ring.is_rk() {
                return Err(Error::Unsupported(format!("Lee enumerators need an R_k ring, not {}", ring.spec())));
            }
            lee_macwilliams(&cache, &code.composition_distribution()?, code.size(), ring, params)
        }
    }
}

fn cmd_enum(file: &Path, kind: Kind, common: &Common) -> Result<(), Failure> {
    let spec = load(file)?;
    let params = SpottyParams::new(spec.b, common.t)?;
    let code = spec.first(common.budget)?;
    println!("{}", render(&direct(&code, kind, &params)?, common.format));
    Ok(())
}

fn cmd_dual_enum(file: &Path, kind: Kind, method: Method, common: &Common) -> Result<(), Failure> {
    let spec = load(file)?;
    let params = SpottyParams::new(spec.b, common.t)?;
    let code = spec.first(common.budget)?;
    if matches!(kind, Kind::Lee) && !code.ring().is_rk() {
        return Err(Error::Unsupported(format!("Lee enumerators need an R_k ring, not {}", code.ring().spec())).into());
    }
    let by_transform = match method {
        Method::Transform | Method::Both => Some(transform(&code, kind, &params)?),
        Method::Brute => None,
    };
    let by_brute = match method {
        Method::Brute | Method::Both => Some(direct(&code.dual_brute(common.budget)?, kind, &params)?),
        Method::Transform => None,
    };
    match (by_transform, by_brute) {
        (Some(p), None) | (None, Some(p)) => println!("{}", render(&p, common.format)),
        (Some(t), Some(b)) => {
            match common.format {
                Format::Text => {
                    println!("transform: {t}");
                    println!("brute: {b}");
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "transform": t.to_json(),
                        "brute": b.to_json(),
                        "agree": t == b,
                    })
                ),
            }
            if t != b {
                eprintln!("error: transform and brute-force dual enumerators differ");
                return Err(Failure::Code(EXIT_MISMATCH));
            }
        }
        (None, None) => unreachable!("every method computes at least one side"),
    }
    Ok(())
}

fn cmd_joint(file: &Path, variant: Variant, common: &Common) -> Result<(), Failure> {
    let spec = load(file)?;
    let params = SpottyParams::new(spec.b, common.t)?;
    let c = spec.first(common.budget)?;
    let d = spec
        .second(common.budget)?
        .ok_or_else(|| Error::Parse { line: 1, message: "joint enumerators need a spec with two `code` blocks".into() })?;
    let poly = match variant {
        Variant::Plain => joint_enumerator(&c, &d, &params, common.budget)?,
        Variant::DualC | Variant::DualD | Variant::DualBoth => {
            let which = match variant {
                Variant::DualC => JointVariant::DualC,
                Variant::DualD => JointVariant::DualD,
                _ => JointVariant::DualBoth,
            };
            let stats = joint_statistics(&c, &d, common.budget)?;
            joint_macwilliams(&KernelCache::new(), which, &stats, c.size(), d.size(), c.ring().size(), &params)?
        }
    };
    println!("{}", render(&poly, common.format));
    Ok(())
}

fn emit(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => print!("{}", report.to_json_lines()),
        Format::Text => {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            println!("{status} {} [{}] {} assertions", report.suite, report.instance, report.len());
            for a in report.failures() {
                let ce = a.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default();
                println!("  failed {}: {ce}", a.check);
            }
        }
    }
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    count: usize,
    budget: u128,
    format: Format,
    fault: Option<InjectedFault>,
) -> Result<(), Failure> {
    let cache = match fault {
        Some(InjectedFault::CorruptTheta) => KernelCache::with_fault(Fault::CorruptTheta),
        None => KernelCache::new(),
    };
    let mut reports = Vec::new();
    if matches!(suite, Suite::Lemmas | Suite::All) {
        reports.extend(lemma_suite(seed, &cache, budget)?);
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        reports.extend(identity_sweep(seed, count, &cache, budget)?);
    }
    for r in &reports {
        emit(r, format);
    }
    let total: usize = reports.iter().map(VerificationReport::len).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    eprintln!("{} reports, {total} assertions, {failed} failed", reports.len());
    if failed > 0 {
        return Err(Failure::Code(EXIT_VERIFY_FAILED));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enum { file, kind, common } => cmd_enum(file, *kind, common),
        Command::DualEnum { file, kind, method, common } => cmd_dual_enum(file, *kind, *method, common),
        Command::Joint { file, variant, common } => cmd_joint(file, *variant, common),
        Command::Verify { suite, seed, count, budget, format, inject_fault } => {
            cmd_verify(*suite, *seed, *count, *budget, *format, *inject_fault)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Code(code)) => ExitCode::from(code),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Lib(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
