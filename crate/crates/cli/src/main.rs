//! `dlam` — command-line front end for the Dirichlet lambda engine.
//!
//! Subcommands:
//!   values  closed-form special values as exact rational multiples of π^e
//!   verify  run the exact identity sweep and report residuals
//!   eval    numerically evaluate lambda/beta/eta/zeta/J at a point
//!   bench   compare the convergence of the J(s,a) representations
//!
//! Exit codes: 0 success, 1 verification/cross-check failures,
//! 2 configuration errors, 3 numeric domain errors.

use clap::{Parser, Subcommand};
use dirichlet_lambda_cli::output;
use dirichlet_lambda::closed_forms::{
    beta_neg_int, beta_odd, eta_even, eta_neg_int, j_neg_int, lambda_even, zeta_even,
};
use dirichlet_lambda::identity::{run_suite, IdentityId, SweepConfig, Verdict};
use dirichlet_lambda::numeric::{
    decimal_of_rational, eval_beta_incgamma, eval_beta_sech, eval_beta_series,
    eval_eta_incgamma, eval_eta_series, eval_j_direct, eval_j_hermite, eval_j_incgamma,
    eval_j_mellin, eval_lambda_mellin, eval_lambda_series, eval_zeta_via_lambda,
    pi_power_to_real, NumericError, NumericResult, NumericValue, Precision,
};
use dirichlet_lambda::rational::{parse_rational, rational_string, BigRational};
use output::{
    bench_csv, bench_text, values_csv, values_text, verify_csv, verify_text, BenchDocument,
    BenchRow, Format, Meta, ValueRow, ValuesDocument, VerifyDocument,
};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_CONFIG: i32 = 2;
const EXIT_DOMAIN: i32 = 3;

#[derive(Parser)]
#[command(name = "dlam", version, about = "Exact and high-precision Dirichlet lambda toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate closed-form values of ζ(2m), λ(2m), η(2m), β(2m+1)
    Values {
        /// Largest m (arguments up to 2m)
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        /// Comma list from {lambda, zeta, beta, eta}
        #[arg(long, default_value = "lambda,zeta,beta,eta")]
        functions: String,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exact identity sweep (zero-residual verification)
    Verify {
        #[arg(long, default_value_t = 40)]
        max_m: u32,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Comma list of rational α samples, e.g. "0,1,-1,2,1/3"
        #[arg(long)]
        alpha: Option<String>,
        /// Comma list of identity ids (default: all)
        #[arg(long)]
        identities: Option<String>,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a function numerically: eval <function> <s> [a]
    Eval {
        /// One of lambda, zeta, eta, beta, j
        function: String,
        /// Argument s (real)
        s: f64,
        /// Second argument a for J(s,a), as decimal or p/q
        a: Option<String>,
        #[arg(long, default_value_t = 50)]
        digits: u32,
        #[arg(long)]
        tol: Option<f64>,
        /// Free split parameter for the incomplete-gamma expansion
        #[arg(long)]
        x_free: Option<f64>,
        /// Representation: auto, series, mellin, hermite, incgamma, sech
        #[arg(long, default_value = "auto")]
        rep: String,
    },
    /// Convergence comparison of the J(s,a) representations
    Bench {
        /// Comma list of s values
        #[arg(long, default_value = "0.5,2")]
        s: String,
        /// Comma list of a values (decimal or p/q)
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value_t = 1.0)]
        x_free: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Values {
            max_m,
            functions,
            digits,
            format,
            out,
        } => cmd_values(max_m, &functions, digits, &format, out.as_deref()),
        Command::Verify {
            max_m,
            max_n,
            alpha,
            identities,
            digits,
            format,
            out,
        } => cmd_verify(
            max_m,
            max_n,
            alpha.as_deref(),
            identities.as_deref(),
            digits,
            &format,
            out.as_deref(),
        ),
        Command::Eval {
            function,
            s,
            a,
            digits,
            tol,
            x_free,
            rep,
        } => cmd_eval(&function, s, a.as_deref(), digits, tol, x_free, &rep),
        Command::Bench {
            s,
            a,
            x_free,
            tol,
            digits,
            format,
            out,
        } => cmd_bench(&s, &a, x_free, tol, digits, &format, out.as_deref()),
    }
}

fn config_err(msg: &str) -> i32 {
    eprintln!("configuration error: {msg}");
    EXIT_CONFIG
}

fn emit(text: String, out: Option<&std::path::Path>) -> i32 {
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => config_err(&format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn cmd_values(
    max_m: u32,
    functions: &str,
    digits: u32,
    format: &str,
    out: Option<&std::path::Path>,
) -> i32 {
    if max_m < 1 {
        return config_err("--max-m must be at least 1");
    }
    if digits < 1 {
        return config_err("--digits must be at least 1");
    }
    let format = match parse_format(format) {
        Ok(f) => f,
        Err(e) => return config_err(&e),
    };
    let mut rows = Vec::new();
    for name in functions.split(',') {
        let name = name.trim();
        for m in 1..=max_m {
            let (argument, value) = match name {
                "lambda" => (2 * m as i64, lambda_even(m)),
                "zeta" => (2 * m as i64, zeta_even(m)),
                "eta" => (2 * m as i64, eta_even(m)),
                "beta" => (2 * m as i64 - 1, beta_odd(m - 1)),
                other => return config_err(&format!("unknown function {other:?}")),
            };
            rows.push(ValueRow {
                function: name.to_string(),
                argument,
                coefficient: rational_string(value.coefficient()),
                pi_exponent: value.exponent(),
                decimal: pi_power_to_real(&value, digits).decimal(digits as usize),
            });
        }
    }
    let mut config = BTreeMap::new();
    config.insert("command".into(), "values".into());
    config.insert("max_m".into(), max_m.to_string());
    config.insert("functions".into(), functions.to_string());
    config.insert("digits".into(), digits.to_string());
    let doc = ValuesDocument {
        meta: Meta::new(config),
        reports: rows,
    };
    let text = match format {
        Format::Text => values_text(&doc),
        Format::Json => match serde_json::to_string_pretty(&doc) {
            Ok(mut s) => {
                s.push('\n');
                s
            }
            Err(e) => return config_err(&e.to_string()),
        },
        Format::Csv => match values_csv(&doc) {
            Ok(s) => s,
            Err(e) => return config_err(&e),
        },
    };
    emit(text, out)
}

fn cmd_verify(
    max_m: u32,
    max_n: u32,
    alpha: Option<&str>,
    identities: Option<&str>,
    digits: u32,
    format: &str,
    out: Option<&std::path::Path>,
) -> i32 {
    let format = match parse_format(format) {
        Ok(f) => f,
        Err(e) => return config_err(&e),
    };
    let mut config = SweepConfig {
        max_m,
        max_n,
        ..SweepConfig::default()
    };
    if let Some(list) = alpha {
        match SweepConfig::parse_alphas(list) {
            Ok(alphas) => config.alphas = alphas,
            Err(e) => return config_err(&e),
        }
    }
    if let Some(list) = identities {
        let mut selected = Vec::new();
        for id in list.split(',') {
            match id.trim().parse::<IdentityId>() {
                Ok(v) => selected.push(v),
                Err(e) => return config_err(&e),
            }
        }
        config.identities = selected;
    }
    let reports = run_suite(&config);
    let failures = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();

    let mut echo = BTreeMap::new();
    echo.insert("command".into(), "verify".into());
    echo.insert("max_m".into(), max_m.to_string());
    echo.insert("max_n".into(), max_n.to_string());
    echo.insert(
        "alpha".into(),
        config
            .alphas
            .iter()
            .map(rational_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    echo.insert(
        "identities".into(),
        config
            .identities
            .iter()
            .map(|i| i.as_str().to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    let doc = VerifyDocument {
        meta: Meta::new(echo),
        reports,
    };
    let text = match format {
        Format::Text => verify_text(&doc),
        Format::Json => match serde_json::to_string_pretty(&doc) {
            Ok(mut s) => {
                s.push('\n');
                s
            }
            Err(e) => return config_err(&e.to_string()),
        },
        Format::Csv => match verify_csv(&doc, digits) {
            Ok(s) => s,
            Err(e) => return config_err(&e),
        },
    };
    let code = emit(text, out);
    if code != EXIT_OK {
        return code;
    }
    if failures > 0 {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    }
}

fn parse_a(a: &str) -> Result<BigRational, String> {
    if a.contains('.') {
        let f: f64 = a.parse().map_err(|e| format!("invalid a {a:?}: {e}"))?;
        BigRational::from_float(f).ok_or_else(|| format!("non-finite a {a:?}"))
    } else {
        parse_rational(a)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    dirichlet_lambda::numeric::Real::from_rational(r, 20).to_f64()
}

/// Negative-integer (and zero) arguments reduce to exact closed forms.
fn closed_form_eval(
    function: &str,
    s: f64,
    a: Option<&BigRational>,
) -> Option<Result<BigRational, String>> {
    if s > 0.0 || s.fract() != 0.0 || s < -(u16::MAX as f64) {
        return None;
    }
    let k = (-s) as u32;
    match function {
        "eta" => Some(Ok(eta_neg_int(k))),
        "beta" => Some(Ok(beta_neg_int(k))),
        "j" => match a {
            None => Some(Err("J(s,a) needs the a argument".to_string())),
            Some(a) => {
                let zero = BigRational::from_integer(0.into());
                let one = BigRational::from_integer(1.into());
                if *a > zero && *a <= one {
                    Some(Ok(j_neg_int(k, a)))
                } else {
                    Some(Err(format!("J(-k, a) requires 0 < a <= 1, got {a}")))
                }
            }
        },
        // no closed forms provided for lambda/zeta at non-positive integers
        _ => None,
    }
}

fn cmd_eval(
    function: &str,
    s: f64,
    a: Option<&str>,
    digits: u32,
    tol: Option<f64>,
    x_free: Option<f64>,
    rep: &str,
) -> i32 {
    if digits < 1 {
        return config_err("--digits must be at least 1");
    }
    if let Some(t) = tol {
        if !(t > 0.0) {
            return config_err("--tol must be positive");
        }
    }
    if let Some(x) = x_free {
        if !(x > 0.0 && x < std::f64::consts::PI) {
            return config_err("--x-free must lie in (0, pi)");
        }
    }
    let a_rat = match a.map(parse_a) {
        None => None,
        Some(Ok(v)) => Some(v),
        Some(Err(e)) => return config_err(&e),
    };

    // closed-form path for non-positive integer arguments
    if rep == "auto" {
        if let Some(result) = closed_form_eval(function, s, a_rat.as_ref()) {
            return match result {
                Ok(value) => {
                    println!("function    = {function}");
                    println!("s           = {s}");
                    if let Some(a) = &a_rat {
                        println!("a           = {}", rational_string(a));
                    }
                    println!("exact       = {}", rational_string(&value));
                    println!("decimal     = {}", decimal_of_rational(&value, digits as usize));
                    println!("method      = closed-form");
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("domain error: {e}");
                    EXIT_DOMAIN
                }
            };
        }
    }

    let tol = tol.unwrap_or(match rep {
        "mellin" | "hermite" | "sech" => 1e-12,
        _ => 1e-30,
    });
    let prec = Precision {
        target_tolerance: tol,
        working_digits: digits,
        ..Precision::default()
    };
    let x = x_free.unwrap_or(1.0);
    let a_f = a_rat.as_ref().map(rational_to_f64);

    let result: Result<NumericResult, String> = match (function, rep) {
        ("lambda", "auto") | ("lambda", "series") => Ok(eval_lambda_series(s, &prec)),
        ("lambda", "mellin") => Ok(eval_lambda_mellin(s, &prec)),
        ("zeta", "auto") | ("zeta", "series") => Ok(eval_zeta_via_lambda(s, &prec)),
        ("eta", "auto") | ("eta", "series") => Ok(eval_eta_series(s, &prec)),
        ("eta", "incgamma") => Ok(eval_eta_incgamma(s, x, &prec)),
        ("beta", "auto") | ("beta", "series") => Ok(eval_beta_series(s, &prec)),
        ("beta", "sech") => Ok(eval_beta_sech(s, &prec)),
        ("beta", "incgamma") => Ok(eval_beta_incgamma(s, x, &prec)),
        ("j", rep) => match a_f {
            None => Err("J(s,a) needs the a argument".to_string()),
            Some(a_f) => match rep {
                "auto" => {
                    if s > 0.0 {
                        Ok(eval_j_direct(s, a_f, &prec))
                    } else {
                        Ok(eval_j_hermite(s, a_f, &prec))
                    }
                }
                "series" | "direct" => Ok(eval_j_direct(s, a_f, &prec)),
                "mellin" => Ok(eval_j_mellin(s, a_f, &prec)),
                "hermite" => Ok(eval_j_hermite(s, a_f, &prec)),
                "incgamma" => Ok(eval_j_incgamma(s, a_f, x, &prec)),
                other => Err(format!("unknown representation {other:?} for J")),
            },
        },
        (f, r) => Err(format!(
            "unknown function/representation combination {f:?}/{r:?}"
        )),
    };

    let nv = match result {
        Err(e) => return config_err(&e),
        Ok(Ok(nv)) => nv,
        Ok(Err(NumericError::Domain(msg))) => {
            eprintln!("domain error: {msg}");
            return EXIT_DOMAIN;
        }
        Ok(Err(e)) => {
            eprintln!("evaluation failed: {e}");
            return EXIT_DOMAIN;
        }
    };
    println!("function    = {function}");
    println!("s           = {s}");
    if let Some(a) = &a_rat {
        println!("a           = {}", rational_string(a));
    }
    println!("value       = {}", nv.value.decimal(digits as usize));
    println!("error_bound = {:e}", nv.error_bound);
    println!("method      = {}", nv.method);
    println!("terms       = {}", nv.terms_used);
    println!("digits      = {}", nv.working_digits);
    EXIT_OK
}

fn cmd_bench(
    s_list: &str,
    a_list: &str,
    x_free: f64,
    tol: f64,
    digits: u32,
    format: &str,
    out: Option<&std::path::Path>,
) -> i32 {
    let format = match parse_format(format) {
        Ok(f) => f,
        Err(e) => return config_err(&e),
    };
    if !(tol > 0.0) {
        return config_err("--tol must be positive");
    }
    if !(x_free > 0.0 && x_free < std::f64::consts::PI) {
        return config_err("--x-free must lie in (0, pi)");
    }
    let parse_f64_list = |text: &str| -> Result<Vec<f64>, String> {
        text.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let t = t.trim();
                if t.contains('/') {
                    parse_rational(t).map(|r| rational_to_f64(&r))
                } else {
                    t.parse::<f64>()
                        .map_err(|e| format!("invalid number {t:?}: {e}"))
                }
            })
            .collect()
    };
    let s_values = match parse_f64_list(s_list) {
        Ok(v) => v,
        Err(e) => return config_err(&e),
    };
    let a_values = match parse_f64_list(a_list) {
        Ok(v) => v,
        Err(e) => return config_err(&e),
    };
    if s_values.is_empty() || a_values.is_empty() {
        return config_err("empty benchmark grid");
    }
    let prec = Precision {
        target_tolerance: tol,
        working_digits: digits.max(30),
        ..Precision::default()
    };
    let mut rows = Vec::new();
    let mut all_within_bounds = true;
    let mut hard_failure = false;
    for &s in &s_values {
        for &a in &a_values {
            let mut cell: Vec<NumericValue> = Vec::new();
            let reps: [(&str, fn(f64, f64, f64, &Precision) -> NumericResult); 4] = [
                ("direct", |s, a, _x, p| eval_j_direct(s, a, p)),
                ("mellin", |s, a, _x, p| eval_j_mellin(s, a, p)),
                ("hermite", |s, a, _x, p| eval_j_hermite(s, a, p)),
                ("incgamma", eval_j_incgamma),
            ];
            for (name, evaluate) in reps {
                let start = Instant::now();
                match evaluate(s, a, x_free, &prec) {
                    Ok(nv) => {
                        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                        rows.push(BenchRow {
                            representation: name.to_string(),
                            s,
                            a,
                            x_free,
                            terms: nv.terms_used,
                            wall_ms,
                            value: nv.value.decimal(digits as usize),
                            error_bound: nv.error_bound,
                        });
                        cell.push(nv);
                    }
                    Err(NumericError::Domain(_)) => {
                        // representation not applicable at this grid point
                    }
                    Err(e) => {
                        eprintln!("bench {name} failed at s={s}, a={a}: {e}");
                        hard_failure = true;
                    }
                }
            }
            for i in 0..cell.len() {
                for j in i + 1..cell.len() {
                    if !cell[i].agrees_with(&cell[j]) {
                        eprintln!(
                            "cross-check failure at s={s}, a={a}: {} vs {}",
                            cell[i].method, cell[j].method
                        );
                        all_within_bounds = false;
                    }
                }
            }
        }
    }
    let mut echo = BTreeMap::new();
    echo.insert("command".into(), "bench".into());
    echo.insert("s".into(), s_list.to_string());
    echo.insert("a".into(), a_list.to_string());
    echo.insert("x_free".into(), x_free.to_string());
    echo.insert("tol".into(), tol.to_string());
    let doc = BenchDocument {
        meta: Meta::new(echo),
        reports: rows,
    };
    let text = match format {
        Format::Text => bench_text(&doc),
        Format::Json => match serde_json::to_string_pretty(&doc) {
            Ok(mut s) => {
                s.push('\n');
                s
            }
            Err(e) => return config_err(&e.to_string()),
        },
        Format::Csv => match bench_csv(&doc) {
            Ok(s) => s,
            Err(e) => return config_err(&e),
        },
    };
    let code = emit(text, out);
    if code != EXIT_OK {
        return code;
    }
    if hard_failure {
        EXIT_DOMAIN
    } else if all_within_bounds {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}
