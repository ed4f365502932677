//! `polyzeta`: compute the triangle/polytope integrals and multiple zeta
//! values, reduce them to exact zeta-polynomials, and run the verification
//! suites. Reports go to stdout (JSON/CSV/text); timing and progress go to
//! stderr. Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyzeta::asymptotics::i_n_over_factorial_expansion;
use polyzeta::combinatorics::{k_symbolic, l_symbolic, m_symbolic};
use polyzeta::euler_gamma::euler_gamma_harmonic;
use polyzeta::kernel::bernoulli::factorial_big;
use polyzeta::polytope::{
    gamma_t_numeric, i_minus1_numeric, i_n_numeric, j_numeric, k_mn_numeric, l_m_numeric,
    m_mn_numeric, IMinus1Form,
};
use polyzeta::symbolic::{i_n_reduce, kolbig_j, mzv_reduce, to_json as poly_to_json, ZetaPolynomial};
use polyzeta::zeta_numeric::{mpl_ones, mzv_ones, polylog_half, zeta_int, MPLIndex, MZVIndex};
use polyzeta::{Error, HighPrecReal, Result, RunConfig, Suite};

type R = HighPrecReal;

#[derive(Parser)]
#[command(name = "polyzeta", version, about = "Polytope integrals, multiple zeta values, and Euler's constant at high precision")]
struct Cli {
    /// Working precision in decimal digits (>= 15)
    #[arg(long, global = true, env = "POLYZETA_DIGITS", default_value_t = 50)]
    digits: u32,

    /// Seed for Monte Carlo checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on the weight m+n of symbolic reductions
    #[arg(long = "weight-cap", global = true, default_value_t = 10)]
    weight_cap: u32,

    /// Report format on stdout
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Multiply every verification tolerance by this factor
    #[arg(long = "tolerance-scale", global = true, default_value_t = 1.0)]
    tolerance_scale: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a target numerically (I n | Iminus1 | J k l | K m n | L m |
    /// M m n | zeta s | mzv m k | liHalf s | mpl b c | gamma)
    Compute {
        target: String,
        args: Vec<u32>,
    },
    /// Reduce a target to an exact zeta-polynomial (I n | mzv m k | K m n |
    /// L m | M m n)
    Reduce {
        target: String,
        args: Vec<u32>,
        /// Rewrite even zetas into powers of pi
        #[arg(long)]
        canonical: bool,
    },
    /// Run a named check suite (lemma1 | duality | theorem4 | theorem5 |
    /// corollary7 | prop3 | asymptotics | gamma | all)
    Verify { suite: String },
    /// Tabulate I_n/n! against its K-term asymptotic expansion
    Asympt {
        /// Comma-separated list of n values
        #[arg(long = "n", value_delimiter = ',')]
        n_list: Vec<u32>,
        /// Number of expansion terms
        #[arg(long, default_value_t = 3)]
        terms: u32,
    },
}

#[derive(Serialize)]
struct ComputeRecord {
    target: String,
    value: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_estimate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct ComputeReport {
    schema: String,
    command: String,
    config: RunConfig,
    results: Vec<ComputeRecord>,
}

#[derive(Serialize)]
struct ReduceReport {
    schema: String,
    command: String,
    config: RunConfig,
    target: String,
    canonical: bool,
    text: String,
    polynomial: serde_json::Value,
}

#[derive(Serialize)]
struct AsymptRow {
    n: u32,
    i_over_factorial: String,
    approximation: String,
    error: String,
    next_term_bound: String,
}

#[derive(Serialize)]
struct AsymptReport {
    schema: String,
    command: String,
    config: RunConfig,
    terms: u32,
    rows: Vec<AsymptRow>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        digits: cli.digits,
        seed: cli.seed,
        weight_cap: cli.weight_cap,
        tolerance_scale: cli.tolerance_scale,
    };
    if let Err(e) = cfg.validate() {
        return usage_error(&e, cli.output);
    }
    let started = Instant::now();
    let code = match run(&cli, &cfg) {
        Ok(code) => code,
        Err(e) => usage_error(&e, cli.output),
    };
    eprintln!("polyzeta: finished in {:.3}s", started.elapsed().as_secs_f64());
    code
}

fn usage_error(e: &Error, output: Output) -> ExitCode {
    if output == Output::Json {
        println!(
            "{}",
            serde_json::json!({"schema": "polyzeta-report/1", "error": e.to_string()})
        );
    }
    eprintln!("polyzeta: error: {e}");
    ExitCode::from(2)
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute { target, args } => {
            let record = compute(target, args, cfg)?;
            let report = ComputeReport {
                schema: "polyzeta-report/1".into(),
                command: format!("compute {target} {args:?}"),
                config: cfg.clone(),
                results: vec![record],
            };
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Output::Csv => {
                    println!("target,value,method,error_estimate,note");
                    for r in &report.results {
                        println!(
                            "{},{},{},{},{}",
                            r.target,
                            r.value,
                            csv_field(&r.method),
                            r.error_estimate.as_deref().unwrap_or(""),
                            csv_field(r.note.as_deref().unwrap_or(""))
                        );
                    }
                }
                Output::Text => {
                    for r in &report.results {
                        println!("{} = {}", r.target, r.value);
                        println!("  method: {}", r.method);
                        if let Some(e) = &r.error_estimate {
                            println!("  error estimate: {e}");
                        }
                        if let Some(n) = &r.note {
                            println!("  note: {n}");
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { target, args, canonical } => {
            let (name, mut poly) = reduce(target, args, cfg)?;
            if *canonical {
                poly = poly.canonicalize();
            }
            let report = ReduceReport {
                schema: "polyzeta-report/1".into(),
                command: format!("reduce {target} {args:?}"),
                config: cfg.clone(),
                target: name,
                canonical: *canonical,
                text: poly.to_string(),
                polynomial: serde_json::from_str(&poly_to_json(&poly)).expect("valid JSON"),
            };
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Output::Csv => {
                    println!("target,text");
                    println!("{},{}", report.target, csv_field(&report.text));
                }
                Output::Text => println!("{} = {}", report.target, report.text),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(suite)?;
            eprintln!("polyzeta: running suite '{}'", suite.name());
            let report = polyzeta::run_suite(suite, cfg)?;
            match cli.output {
                Output::Json => print!("{}", report.to_json()),
                Output::Csv => print!("{}", report.to_csv()),
                Output::Text => print!("{}", report.to_text()),
            }
            if report.pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Asympt { n_list, terms } => {
            let mut rows = Vec::new();
            for &n in n_list {
                let truth = {
                    let i_n = i_n_reduce(n)?.eval_numeric(cfg.digits)?;
                    &i_n / &R::from_bigint(&factorial_big(n as u64), cfg.digits)
                };
                let approx = i_n_over_factorial_expansion(n, *terms, cfg.digits)?;
                let err = (&truth - &approx.value).abs();
                rows.push(AsymptRow {
                    n,
                    i_over_factorial: truth.to_dec_string(),
                    approximation: approx.value.to_dec_string(),
                    error: err.to_dec_string(),
                    next_term_bound: approx
                        .next_term_bound
                        .map(|b| b.to_dec_string())
                        .unwrap_or_default(),
                });
            }
            let report = AsymptReport {
                schema: "polyzeta-report/1".into(),
                command: "asympt".into(),
                config: cfg.clone(),
                terms: *terms,
                rows,
            };
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Output::Csv => {
                    println!("n,i_over_factorial,approximation,error,next_term_bound");
                    for r in &report.rows {
                        println!(
                            "{},{},{},{},{}",
                            r.n, r.i_over_factorial, r.approximation, r.error, r.next_term_bound
                        );
                    }
                }
                Output::Text => {
                    for r in &report.rows {
                        println!(
                            "n={:<3} I_n/n! = {}  approx({} terms) = {}  |err| = {}  next <= {}",
                            r.n, r.i_over_factorial, report.terms, r.approximation, r.error,
                            r.next_term_bound
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn need(args: &[u32], n: usize, usage: &str) -> Result<()> {
    if args.len() != n {
        return Err(Error::Domain(format!("expected {usage}")));
    }
    Ok(())
}

fn compute(target: &str, args: &[u32], cfg: &RunConfig) -> Result<ComputeRecord> {
    let d = cfg.digits;
    match target {
        "I" => {
            need(args, 1, "compute I <n>")?;
            let n = args[0];
            let sym = i_n_reduce(n)?;
            let sym_val = sym.eval_numeric(d)?;
            let (value, method, est) = if n <= 8 {
                let num = i_n_numeric(n, d)?;
                let est = (&num - &sym_val).abs().to_dec_string();
                (num, "tanh-sinh quadrature of the 1-D reduction; cross-checked against the exact zeta-polynomial", Some(est))
            } else {
                (sym_val, "exact reduction to single zeta values, evaluated by series", None)
            };
            Ok(ComputeRecord {
                target: format!("I({n})"),
                value: value.to_dec_string(),
                method: method.into(),
                error_estimate: est,
                note: Some(format!("= {sym}")),
            })
        }
        "Iminus1" => {
            need(args, 0, "compute Iminus1")?;
            let a = i_minus1_numeric(IMinus1Form::HalfLine, d)?;
            let b = i_minus1_numeric(IMinus1Form::LogRatio, d)?;
            Ok(ComputeRecord {
                target: "I(-1)".into(),
                value: a.to_dec_string(),
                method: "exp-sinh quadrature of the binomial form; log-ratio form as cross-check".into(),
                error_estimate: Some((&a - &b).abs().to_dec_string()),
                note: None,
            })
        }
        "J" => {
            need(args, 2, "compute J <k> <l>")?;
            let (k, l) = (args[0], args[1]);
            let v = j_numeric(k, l, d)?;
            let note = if k + l + 1 <= cfg.weight_cap {
                Some(format!("= {}", kolbig_j(k, l)?))
            } else {
                None
            };
            Ok(ComputeRecord {
                target: format!("J({k},{l})"),
                value: v.to_dec_string(),
                method: "tanh-sinh quadrature on (0,1)".into(),
                error_estimate: None,
                note,
            })
        }
        "K" => {
            need(args, 2, "compute K <m> <n>")?;
            let (m, n) = (args[0], args[1]);
            let sym = k_symbolic(m, n, cfg.weight_cap)?;
            let val = sym.polynomial.eval_numeric(d)?;
            let est = if (2..=3).contains(&m) && n <= 4 {
                let num = k_mn_numeric(m, n, d)?;
                Some((&val - &num).abs().to_dec_string())
            } else {
                None
            };
            Ok(ComputeRecord {
                target: format!("K({m},{n})"),
                value: val.to_dec_string(),
                method: "integer MZV combination reduced to single zetas, evaluated by series".into(),
                error_estimate: est,
                note: Some(format!("= {}", sym.polynomial)),
            })
        }
        "L" => {
            need(args, 1, "compute L <m>")?;
            let m = args[0];
            let num = l_m_numeric(m, d)?;
            let sym = l_symbolic(m)?;
            let est = (&num - &sym.eval_numeric(d)?).abs().to_dec_string();
            Ok(ComputeRecord {
                target: format!("L({m})"),
                value: num.to_dec_string(),
                method: "tanh-sinh quadrature of the [1/2,1] reduction; polylog form as cross-check".into(),
                error_estimate: Some(est),
                note: Some(format!("= {sym}")),
            })
        }
        "M" => {
            need(args, 2, "compute M <m> <n>")?;
            let (m, n) = (args[0], args[1]);
            let sym = m_symbolic(m, n, cfg.weight_cap)?;
            let val = sym.eval_numeric(d)?;
            let est = if (2..=3).contains(&m) && n <= 4 {
                let num = m_mn_numeric(m, n, d)?;
                Some((&val - &num).abs().to_dec_string())
            } else {
                None
            };
            Ok(ComputeRecord {
                target: format!("M({m},{n})"),
                value: val.to_dec_string(),
                method: "mixed zeta/ln2/polylog reduction, evaluated by series".into(),
                error_estimate: est,
                note: Some(format!("= {sym}")),
            })
        }
        "zeta" => {
            need(args, 1, "compute zeta <s>")?;
            let s = args[0];
            Ok(ComputeRecord {
                target: format!("zeta({s})"),
                value: zeta_int(s, d)?.to_dec_string(),
                method: "Euler-Maclaurin accelerated series".into(),
                error_estimate: None,
                note: None,
            })
        }
        "mzv" => {
            need(args, 2, "compute mzv <m> <k>")?;
            let (m, k) = (args[0], args[1]);
            let idx = MZVIndex::new(m, k)?;
            let v = mzv_ones(&idx, d)?;
            let (est, note) = if m + k <= cfg.weight_cap {
                let sym = mzv_reduce(&idx)?;
                let sv = sym.eval_numeric(d)?;
                (Some((&v - &sv).abs().to_dec_string()), Some(format!("= {sym}")))
            } else {
                (None, None)
            };
            Ok(ComputeRecord {
                target: format!("zeta({m},{{1}}_{k})"),
                value: v.to_dec_string(),
                method: "nested series with Euler-Maclaurin tail correction".into(),
                error_estimate: est,
                note,
            })
        }
        "liHalf" => {
            need(args, 1, "compute liHalf <s>")?;
            let s = args[0];
            Ok(ComputeRecord {
                target: format!("Li_{s}(1/2)"),
                value: polylog_half(s, d)?.to_dec_string(),
                method: "geometric series".into(),
                error_estimate: None,
                note: None,
            })
        }
        "mpl" => {
            need(args, 2, "compute mpl <b> <c>")?;
            let (b, c) = (args[0], args[1]);
            let idx = MPLIndex::new(b, c, R::from_f64(0.5, d))?;
            Ok(ComputeRecord {
                target: format!("Li_{{{b},{{1}}_{c}}}(1/2)"),
                value: mpl_ones(&idx, d)?.to_dec_string(),
                method: "nested geometric series".into(),
                error_estimate: None,
                note: None,
            })
        }
        "gamma" => {
            need(args, 0, "compute gamma")?;
            let v = gamma_t_numeric(d)?;
            let h = euler_gamma_harmonic(d)?;
            Ok(ComputeRecord {
                target: "gamma".into(),
                value: v.to_dec_string(),
                method: "quadrature of the triangle integral; harmonic limit as cross-check".into(),
                error_estimate: Some((&v - &h).abs().to_dec_string()),
                note: None,
            })
        }
        other => Err(Error::Domain(format!(
            "unknown compute target {other:?}; expected I, Iminus1, J, K, L, M, zeta, mzv, liHalf, mpl, or gamma"
        ))),
    }
}

fn reduce(target: &str, args: &[u32], cfg: &RunConfig) -> Result<(String, ZetaPolynomial)> {
    match target {
        "I" => {
            need(args, 1, "reduce I <n>")?;
            let n = args[0];
            if n + 2 > cfg.weight_cap {
                return Err(Error::WeightCap { requested: n + 2, cap: cfg.weight_cap });
            }
            Ok((format!("I({n})"), i_n_reduce(n)?))
        }
        "mzv" => {
            need(args, 2, "reduce mzv <m> <k>")?;
            let (m, k) = (args[0], args[1]);
            if m + k > cfg.weight_cap {
                return Err(Error::WeightCap { requested: m + k, cap: cfg.weight_cap });
            }
            Ok((format!("zeta({m},{{1}}_{k})"), mzv_reduce(&MZVIndex::new(m, k)?)?))
        }
        "K" => {
            need(args, 2, "reduce K <m> <n>")?;
            let (m, n) = (args[0], args[1]);
            Ok((format!("K({m},{n})"), k_symbolic(m, n, cfg.weight_cap)?.polynomial))
        }
        "L" => {
            need(args, 1, "reduce L <m>")?;
            let m = args[0];
            Ok((format!("L({m})"), l_symbolic(m)?))
        }
        "M" => {
            need(args, 2, "reduce M <m> <n>")?;
            let (m, n) = (args[0], args[1]);
            Ok((format!("M({m},{n})"), m_symbolic(m, n, cfg.weight_cap)?))
        }
        other => Err(Error::Domain(format!(
            "unknown reduce target {other:?}; expected I, mzv, K, L, or M"
        ))),
    }
}
