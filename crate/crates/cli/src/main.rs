//! `f1zeta` — evaluate zeta functions of Hurwitz-Igusa type for F₁-schemes,
//! report exact pole/residue data of the modified Soulé zeta function, and
//! run the verification suites.
//!
//! Exit codes: 0 success, 1 validation/parse error, 2 numerical/domain error,
//! 3 verification failure.

use f1zeta_cli::{doc, grid, scalar};

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use f1zeta::abelian::FiniteAbelianGroup;
use f1zeta::verify::{self, VerifyOptions};
use f1zeta::zeta::{hurwitz_igusa, EvalParams};
use f1zeta::{Complex64, ZetaError};

use doc::SchemeDocument;
use grid::GridSpec;
use scalar::{
    format_complex, format_rational, parse_complex, parse_complex_list, parse_moduli,
    parse_progression,
};

#[derive(Parser)]
#[command(
    name = "f1zeta",
    version,
    about = "Deformed multivariable zeta functions of Hurwitz-Igusa type for F1-schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact mu-invariant of the finite abelian group with the
    /// given moduli, as p/q.
    Mu {
        /// Comma-separated torsion moduli, e.g. "2,4".
        moduli: String,
    },
    /// Print the point counts #X(F_{1^m}) for m = 1..=m-max as CSV.
    Points {
        /// Scheme document path.
        #[arg(long)]
        scheme: PathBuf,
        /// Largest extension degree m.
        #[arg(long = "m-max", default_value_t = 20)]
        m_max: u64,
    },
    /// Evaluate the zeta function at one parameter tuple.
    Eval {
        #[arg(long)]
        scheme: PathBuf,
        /// Comma-separated complex s-vector, e.g. "2.5,3.0-0.5i".
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Comma-separated complex a-vector (single value broadcasts).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        /// Deformation exponent w (complex scalar).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        w: String,
        /// Certified Hurwitz-zeta truncation tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Print the exact pole divisor of the modified Soule zeta function.
    Poles {
        #[arg(long)]
        scheme: PathBuf,
        /// Deformation exponent (positive integer).
        #[arg(long)]
        w: u32,
    },
    /// Stream CSV values of the one-variable zeta function over an s-grid.
    Grid {
        #[arg(long)]
        scheme: PathBuf,
        /// Re(s) progression "start:stop:step".
        #[arg(long, allow_hyphen_values = true)]
        re: String,
        /// Im(s) progression "start:stop:step".
        #[arg(long, allow_hyphen_values = true)]
        im: String,
        /// Hurwitz shift a (complex scalar).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        /// Deformation exponent w (complex scalar).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite and exit 0 iff every check passes.
    Verify {
        /// One of: abelian, hurwitz, assembly, euler, poles, roundtrip, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Optional scheme to include in the pole and round-trip checks.
        #[arg(long)]
        scheme: Option<PathBuf>,
        /// Prime bound for the Euler-product checks.
        #[arg(long = "prime-bound", default_value_t = 100_000)]
        prime_bound: u64,
    },
}

enum CliError {
    /// Bad input: flags, documents, moduli. Exit 1.
    Validation(String),
    /// The evaluation left its numerical domain. Exit 2.
    Numeric(ZetaError),
    /// One or more verification checks failed. Exit 3.
    VerificationFailed(usize),
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        match e.root() {
            ZetaError::InvalidModulus(_) | ZetaError::InvalidArgument(_) => {
                CliError::Validation(e.to_string())
            }
            _ => CliError::Numeric(e),
        }
    }
}

fn validation(msg: String) -> CliError {
    CliError::Validation(msg)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::VerificationFailed(n)) => {
            eprintln!("error: {n} verification check(s) failed");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Mu { moduli } => cmd_mu(&moduli),
        Command::Points { scheme, m_max } => cmd_points(&scheme, m_max),
        Command::Eval {
            scheme,
            s,
            a,
            w,
            tol,
        } => cmd_eval(&scheme, &s, &a, &w, tol),
        Command::Poles { scheme, w } => cmd_poles(&scheme, w),
        Command::Grid {
            scheme,
            re,
            im,
            a,
            w,
            tol,
            out,
        } => cmd_grid(&scheme, &re, &im, &a, &w, tol, &out),
        Command::Verify {
            suite,
            scheme,
            prime_bound,
        } => cmd_verify(&suite, scheme.as_deref(), prime_bound),
    }
}

fn load(path: &std::path::Path) -> Result<f1zeta::abelian::F1Scheme, CliError> {
    doc::load_scheme(path).map_err(validation)
}

fn cmd_mu(moduli: &str) -> Result<(), CliError> {
    let moduli = parse_moduli(moduli).map_err(validation)?;
    let group = FiniteAbelianGroup::from_moduli(&moduli)?;
    println!("{}", format_rational(&group.mu()));
    Ok(())
}

fn cmd_points(path: &std::path::Path, m_max: u64) -> Result<(), CliError> {
    if m_max == 0 {
        return Err(validation("m-max must be ≥ 1".to_owned()));
    }
    let scheme = load(path)?;
    println!("m,count");
    for m in 1..=m_max {
        println!("{m},{}", scheme.count_points(m)?);
    }
    Ok(())
}

fn cmd_eval(
    path: &std::path::Path,
    s_text: &str,
    a_text: &str,
    w_text: &str,
    tol: f64,
) -> Result<(), CliError> {
    let scheme = load(path)?;
    let s = parse_complex_list(s_text).map_err(validation)?;
    let mut a = parse_complex_list(a_text).map_err(validation)?;
    if a.len() == 1 && s.len() > 1 {
        a = vec![a[0]; s.len()];
    }
    let w = parse_complex(w_text).map_err(validation)?;
    let params = EvalParams::new(s, a, w, tol)?;
    let value = hurwitz_igusa(&params, &scheme)?;
    println!("value: {}", format_complex(value));
    println!("tolerance: {tol:e} certified Hurwitz-zeta truncation per evaluation");
    Ok(())
}

fn cmd_poles(path: &std::path::Path, w: u32) -> Result<(), CliError> {
    let scheme = load(path)?;
    for datum in f1zeta::poles::pole_divisor(&scheme, w)? {
        let flag = if datum.cancelled { " (cancelled)" } else { "" };
        println!(
            "{}, {}{}",
            datum.location,
            format_rational(&datum.exponent),
            flag
        );
        for (name, contribution) in &datum.contributions {
            println!("  {name}, {}", format_rational(contribution));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_grid(
    path: &std::path::Path,
    re_text: &str,
    im_text: &str,
    a_text: &str,
    w_text: &str,
    tol: f64,
    out_path: &std::path::Path,
) -> Result<(), CliError> {
    let scheme = load(path)?;
    let re = parse_progression(re_text).map_err(validation)?;
    let im = parse_progression(im_text).map_err(validation)?;
    let a = parse_complex(a_text).map_err(validation)?;
    let w = parse_complex(w_text).map_err(validation)?;
    let total = re.len() * im.len();
    if total > grid::MAX_GRID_SAMPLES {
        return Err(validation(format!(
            "grid has {total} samples, cap is {}",
            grid::MAX_GRID_SAMPLES
        )));
    }
    // Surface systematically bad (a, w) before streaming a file of notes:
    // the branch admissibility does not depend on s.
    let probe = EvalParams::new(vec![Complex64::new(0.0, 0.0)], vec![a], w, tol)?;
    if probe.integer_w().is_none() && !probe.has_unit_a() {
        return Err(validation(format!(
            "no presentation branch applies: w = {w} is not a nonnegative integer and a = {a} ≠ 1"
        )));
    }
    let spec = GridSpec {
        re,
        im,
        a,
        w,
        tolerance: tol,
    };
    let file = std::fs::File::create(out_path)
        .map_err(|e| validation(format!("cannot create {}: {e}", out_path.display())))?;
    let mut writer = std::io::BufWriter::new(file);
    grid::run(&scheme, &spec, &mut writer)
        .and_then(|_| writer.flush())
        .map_err(|e| validation(format!("write failed: {e}")))?;
    Ok(())
}

/// Embedded documents for the round-trip checks.
const ROUNDTRIP_DOCS: &[(&str, &str)] = &[
    (
        "gm",
        r#"{"name":"Gm","points":[{"name":"p0","rank":1,"torsion":[]}]}"#,
    ),
    (
        "denormalized",
        r#"{"name":"demo","points":[{"name":"p0","rank":0,"torsion":[1,6]},{"name":"p1","rank":2,"torsion":[4,6]}]}"#,
    ),
    (
        "union",
        r#"{"name":"u","points":[{"name":"gm","rank":1,"torsion":[]},{"name":"mu2","rank":0,"torsion":[2]}]}"#,
    ),
];

fn roundtrip_suite(extra: Option<(&str, &str)>) -> Vec<(String, bool, String)> {
    let mut results = Vec::new();
    let mut docs: Vec<(String, String)> = ROUNDTRIP_DOCS
        .iter()
        .map(|(n, t)| (n.to_string(), t.to_string()))
        .collect();
    if let Some((name, text)) = extra {
        docs.push((name.to_owned(), text.to_owned()));
    }
    for (name, text) in docs {
        let outcome = (|| -> Result<(), String> {
            let parsed = SchemeDocument::parse(&text)?;
            let first = parsed.canonical_json()?;
            let reparsed = SchemeDocument::parse(&first)?;
            let second = reparsed.canonical_json()?;
            if first != second {
                return Err("canonical emit is not idempotent".to_owned());
            }
            if parsed.to_scheme()? != reparsed.to_scheme()? {
                return Err("round-trip changed the scheme".to_owned());
            }
            Ok(())
        })();
        match outcome {
            Ok(()) => results.push((format!("roundtrip/{name}"), true, "canonical".to_owned())),
            Err(e) => results.push((format!("roundtrip/{name}"), false, e)),
        }
    }
    // Validation must reject duplicates.
    let dup = SchemeDocument::parse(
        r#"{"name":"x","points":[{"name":"p","rank":0,"torsion":[]},{"name":"p","rank":1,"torsion":[]}]}"#,
    )
    .and_then(|d| d.to_scheme().map(|_| ()));
    results.push((
        "roundtrip/duplicate-rejected".to_owned(),
        dup.is_err(),
        "duplicate point name".to_owned(),
    ));
    results
}

fn cmd_verify(
    suite: &str,
    scheme_path: Option<&std::path::Path>,
    prime_bound: u64,
) -> Result<(), CliError> {
    let mut options = VerifyOptions {
        prime_bound,
        extra_scheme: None,
    };
    let mut extra_doc: Option<(String, String)> = None;
    if let Some(path) = scheme_path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?;
        let parsed = SchemeDocument::parse(&text).map_err(validation)?;
        let scheme = parsed.to_scheme().map_err(validation)?;
        options.extra_scheme = Some((parsed.name.clone(), scheme));
        extra_doc = Some((parsed.name.clone(), text));
    }

    let mut rows: Vec<(String, bool, String)> = Vec::new();
    match suite {
        "roundtrip" => {
            rows.extend(roundtrip_suite(
                extra_doc.as_ref().map(|(n, t)| (n.as_str(), t.as_str())),
            ));
        }
        "all" => {
            for check in verify::run_suite("all", &options)? {
                rows.push((
                    format!("{}/{}", check.suite, check.name),
                    check.passed,
                    check.detail,
                ));
            }
            rows.extend(roundtrip_suite(
                extra_doc.as_ref().map(|(n, t)| (n.as_str(), t.as_str())),
            ));
        }
        other => {
            for check in verify::run_suite(other, &options)? {
                rows.push((
                    format!("{}/{}", check.suite, check.name),
                    check.passed,
                    check.detail,
                ));
            }
        }
    }

    let mut stdout = std::io::stdout().lock();
    let mut failed = 0usize;
    for (name, passed, detail) in &rows {
        if !passed {
            failed += 1;
        }
        let _ = writeln!(
            stdout,
            "{} {name}: {detail}",
            if *passed { "ok  " } else { "FAIL" }
        );
    }
    let _ = writeln!(stdout, "{} checks, {failed} failed", rows.len());
    if failed > 0 {
        return Err(CliError::VerificationFailed(failed));
    }
    Ok(())
}
