//! Command-line front end: evaluate H-functions, apply splitting
//! identities, compute Mittag-Leffler sums, and run verification suites
//! with machine-readable reports.
//!
//! Exit codes: 0 success; 1 verification failure (reports still written);
//! 2 parse/validation/structure error; 3 evaluation failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use hfun::catalog::{application_catalog, parse_catalog, Fixture};
use hfun::eval::{
    auto_quadrature_config, eval_mellin_barnes, eval_opts, eval_series_left_opts,
    eval_series_right_opts, EvalResult, Method, SeriesOptions, SERIES_MAX_TERMS,
};
use hfun::identities::{reduce_akr, reduce_new, split_akr, split_new, SplitResult};
use hfun::mlsum::{ml_triple, MlSumSpec, TripleResult};
use hfun::model::{validate, HFunctionSpec};
use hfun::verify::{run_suite, IdentityReport, Suite};

mod output;

use output::{fmt_f64, json_spec};

#[derive(Parser)]
#[command(name = "hfun", version, about = "H-function evaluation and identity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an H-function at a complex argument.
    Eval(EvalArgs),
    /// Apply a splitting identity to a spec and print the weighted terms.
    Split(SplitArgs),
    /// Compute the generalized Mittag-Leffler sum three ways.
    Mlsum(MlsumArgs),
    /// Run invariant suites and write JSON + CSV reports.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Path to an HFunctionSpec JSON file.
    spec_json: PathBuf,
    /// Complex argument, written as a+bi with no spaces (e.g. 1.5, -2i, 1+2i).
    #[arg(allow_hyphen_values = true)]
    z: String,
    /// Series tail tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Evaluation route.
    #[arg(long, value_enum, default_value_t = MethodFlag::Auto)]
    method: MethodFlag,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodFlag {
    Auto,
    Series,
    Mb,
}

#[derive(Args)]
struct SplitArgs {
    /// Path to an HFunctionSpec JSON file.
    spec_json: PathBuf,
    /// Which identity to apply.
    #[arg(value_enum)]
    identity: IdentityFlag,
    /// alpha parameter (complex literal); required for akr and new.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// lambda parameter (positive real); required for akr and new.
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityFlag {
    /// Append (alpha, lambda) to both rows and split the augmented function.
    Akr,
    /// Double the leading (alpha, lambda) pairs.
    New,
    /// Delete matched leading pairs.
    ReduceAkr,
    /// Delete the doubled leading and matched trailing pairs.
    ReduceNew,
}

#[derive(Args)]
struct MlsumArgs {
    #[arg(allow_negative_numbers = true)]
    alpha: f64,
    #[arg(allow_negative_numbers = true)]
    beta: f64,
    #[arg(allow_negative_numbers = true)]
    gamma: f64,
    #[arg(allow_negative_numbers = true)]
    delta: f64,
    #[arg(allow_negative_numbers = true)]
    x: f64,
    /// Series tail tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: gamma, splits, mlsum, catalog, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Override every report's pass threshold (defaults are per suite).
    #[arg(long)]
    threshold: Option<f64>,
    /// Output base path; writes <out>.json and <out>.csv.
    #[arg(long, default_value = "verify_report")]
    out: PathBuf,
    /// Alternate fixture catalog JSON (defaults to the embedded catalog).
    #[arg(long)]
    catalog: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Split(args) => cmd_split(args),
        Command::Mlsum(args) => cmd_mlsum(args),
        Command::Verify(args) => cmd_verify(args),
    };
    ExitCode::from(code)
}

fn series_options(tol: f64) -> SeriesOptions {
    let max_terms = std::env::var("HFUN_MAX_TERMS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(SERIES_MAX_TERMS);
    SeriesOptions { tol, max_terms }
}

fn load_spec(path: &PathBuf) -> Result<HFunctionSpec, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    let spec: HFunctionSpec =
        serde_json::from_str(&text).map_err(|e| format!("invalid spec JSON: {e}"))?;
    validate(&spec).map_err(|e| format!("spec validation failed: {e}"))?;
    Ok(spec)
}

fn cmd_eval(args: EvalArgs) -> u8 {
    let spec = match load_spec(&args.spec_json) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let z = match parse_complex(&args.z) {
        Ok(z) => z,
        Err(msg) => {
            eprintln!("error: invalid complex literal {:?}: {msg}", args.z);
            return 2;
        }
    };
    let opts = series_options(args.tol);
    let result = match args.method {
        MethodFlag::Auto => eval_opts(&spec, z, &opts),
        MethodFlag::Series => {
            let delta = spec.delta();
            let use_left = delta > 0.0 || (delta == 0.0 && z.norm() < 1.0 / spec.big_d());
            if use_left {
                eval_series_left_opts(&spec, z, &opts)
            } else {
                eval_series_right_opts(&spec, z, &opts)
            }
        }
        MethodFlag::Mb => auto_quadrature_config(&spec, z)
            .and_then(|cfg| eval_mellin_barnes(&spec, z, &cfg, args.tol)),
    };
    match result {
        Ok(r) => {
            println!("{}", json_eval_result(&r));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn json_eval_result(r: &EvalResult) -> String {
    let method = match r.method {
        Method::SeriesLeft => "series_left",
        Method::SeriesRight => "series_right",
        Method::MellinBarnes => "mellin_barnes",
    };
    format!(
        "{{\"re\":{},\"im\":{},\"abs_error_estimate\":{},\"method\":\"{}\",\"work\":{}}}",
        fmt_f64(r.value.re),
        fmt_f64(r.value.im),
        fmt_f64(r.abs_error_estimate),
        method,
        r.work
    )
}

fn cmd_split(args: SplitArgs) -> u8 {
    let spec = match load_spec(&args.spec_json) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let needs_params = matches!(args.identity, IdentityFlag::Akr | IdentityFlag::New);
    let (alpha, lambda) = if needs_params {
        let alpha = match args.alpha.as_deref().map(parse_complex) {
            Some(Ok(a)) => a,
            Some(Err(msg)) => {
                eprintln!("error: invalid alpha literal: {msg}");
                return 2;
            }
            None => {
                eprintln!("error: --alpha is required for this identity");
                return 2;
            }
        };
        let lambda = match args.lambda {
            Some(l) => l,
            None => {
                eprintln!("error: --lambda is required for this identity");
                return 2;
            }
        };
        (alpha, lambda)
    } else {
        (Complex64::new(0.0, 0.0), 1.0)
    };
    let result = match args.identity {
        IdentityFlag::Akr => split_akr(&spec, alpha, lambda),
        IdentityFlag::New => split_new(&spec, alpha, lambda),
        IdentityFlag::ReduceAkr => reduce_akr(&spec),
        IdentityFlag::ReduceNew => reduce_new(&spec),
    };
    match result {
        Ok(s) => {
            println!("{}", json_split_result(&s));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn json_split_result(s: &SplitResult) -> String {
    let terms: Vec<String> = s
        .terms
        .iter()
        .map(|t| {
            format!(
                "{{\"weight\":[{},{}],\"argument_factor\":[{},{}],\"spec\":{}}}",
                fmt_f64(t.weight.re),
                fmt_f64(t.weight.im),
                fmt_f64(t.argument_factor.re),
                fmt_f64(t.argument_factor.im),
                json_spec(&t.spec)
            )
        })
        .collect();
    format!(
        "{{\"source\":{},\"terms\":[{}]}}",
        json_spec(&s.source),
        terms.join(",")
    )
}

fn cmd_mlsum(args: MlsumArgs) -> u8 {
    let spec = MlSumSpec::new(args.alpha, args.beta, args.gamma, args.delta, args.x);
    if let Err(e) = spec.validate() {
        eprintln!("error: {e}");
        return 2;
    }
    match ml_triple(&spec, args.tol) {
        Ok(t) => {
            println!("{}", json_triple_result(&t));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

fn json_triple_result(t: &TripleResult) -> String {
    let path = |r: &Option<EvalResult>| match r {
        Some(r) => json_eval_result(r),
        None => "null".to_string(),
    };
    format!(
        "{{\"direct\":{},\"via_pfq\":{},\"via_h\":{},\"max_pairwise_discrepancy\":{}}}",
        path(&t.direct),
        path(&t.via_pfq),
        path(&t.via_h),
        fmt_f64(t.max_pairwise_discrepancy)
    )
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    let suites = match Suite::parse(&args.suite) {
        Some(s) => s,
        None => {
            eprintln!(
                "error: unknown suite {:?} (expected gamma, splits, mlsum, catalog, or all)",
                args.suite
            );
            return 2;
        }
    };
    let external_catalog: Option<Vec<Fixture>> = match &args.catalog {
        Some(path) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read catalog {path:?}: {e}");
                    return 2;
                }
            };
            match parse_catalog(&text) {
                Ok(file) => Some(file.fixtures),
                Err(e) => {
                    eprintln!("error: invalid catalog JSON: {e}");
                    return 2;
                }
            }
        }
        None => None,
    };
    let fixtures: &[Fixture] = external_catalog
        .as_deref()
        .unwrap_or_else(|| application_catalog());

    let mut reports: Vec<IdentityReport> = Vec::new();
    for suite in suites {
        reports.extend(run_suite(suite, args.threshold, fixtures));
    }
    reports.sort_by(|a, b| a.identity_name.cmp(&b.identity_name));

    for r in &reports {
        println!(
            "{} {} (max {:.3e}, threshold {:.1e})",
            if r.pass { "pass" } else { "FAIL" },
            r.identity_name,
            r.max_rel_discrepancy,
            r.threshold
        );
    }

    let json_path = args.out.with_extension("json");
    let csv_path = args.out.with_extension("csv");
    if let Err(e) = fs::write(&json_path, output::json_reports(&reports)) {
        eprintln!("error: cannot write {json_path:?}: {e}");
        return 2;
    }
    if let Err(e) = fs::write(&csv_path, output::csv_summary(&reports)) {
        eprintln!("error: cannot write {csv_path:?}: {e}");
        return 2;
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!(
        "{} reports written to {} and {} ({} failed)",
        reports.len(),
        json_path.display(),
        csv_path.display(),
        failed
    );
    if failed == 0 {
        0
    } else {
        1
    }
}

/// Parses a complex literal in a+bi form with no spaces. Accepts plain
/// reals, pure imaginaries (i, -i, 2.5i), and full a+bi / a-bi forms with
/// exponent notation.
fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty literal".to_string());
    }
    if s.contains(' ') {
        return Err("literal must not contain spaces".to_string());
    }
    if let Some(body) = s.strip_suffix('i') {
        // find the sign separating re and im: the last +/- not at the start
        // and not part of an exponent
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx] as char;
            if (ch == '+' || ch == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx]
                    .parse()
                    .map_err(|e| format!("bad real part: {e}"))?;
                let im_text = &body[idx..];
                let im: f64 = match im_text {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_text.parse().map_err(|e| format!("bad imaginary part: {e}"))?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    "+" => 1.0,
                    _ => body.parse().map_err(|e| format!("bad imaginary part: {e}"))?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|e| format!("bad real part: {e}"))?;
        Ok(Complex64::new(re, 0.0))
    }
}
