use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncmac::kostka::kostka_matrix;
use ncmac::ncsf::{
    change_basis, htilde, htilde_lambda, htilde_lambda_factored, render_lambda_factored, Basis, ZSequence,
};
use ncmac::product_rule::expand_product;
use ncmac::qsym::{denominator, ptilde, ptilde_matrix};
use ncmac::statistics::Mode;
use ncmac::verify::{self, Check};
use ncmac::Composition;

const MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "ncmac", version, about = "Noncommutative and quasi-symmetric Macdonald functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Kostka matrix K_n.
    Kostka {
        #[arg(long, value_parser = degree)]
        n: usize,
        #[arg(long, value_enum, default_value = "single")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Expand H_J in the R, S or Lambda basis.
    Expand {
        #[arg(long)]
        comp: Composition,
        #[arg(long, value_enum, default_value = "r")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "single")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print P_I and D_I, or the whole matrix of P for degree n.
    Dual {
        #[arg(long, required_unless_present = "n", conflicts_with = "n")]
        comp: Option<Composition>,
        #[arg(long, value_parser = degree)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand H_I K_n(A;Z) in the H basis.
    Multiply {
        #[arg(long)]
        comp: Composition,
        #[arg(long, value_parser = degree)]
        n: usize,
        #[arg(long)]
        latex: bool,
        #[arg(long)]
        show_fillings: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run identity checks and stream JSON-lines reports.
    Verify {
        /// Comma-separated check names; all default checks when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// A degree `N` or an inclusive range `A..B`.
        #[arg(long, value_parser = degree_range)]
        n: Option<RangeInclusive<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
}

fn degree(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_N).contains(&n) {
        Ok(n)
    } else {
        Err(format!("degree must lie in 1..={MAX_N}"))
    }
}

fn degree_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (degree(a)?, degree(b.trim_start_matches('='))?),
        None => (degree(s)?, degree(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> ncmac::Result<ExitCode> {
    let mut out: String;
    match command {
        Command::Kostka { n, mode, format } => {
            let k = kostka_matrix(n, mode);
            out = match format {
                Format::Json => pretty(&k.to_json()),
                Format::Latex => {
                    let name = match mode {
                        Mode::Single => format!("K_{{{n}}}"),
                        Mode::Multi => format!("\\mathbf{{K}}_{{{n}}}"),
                    };
                    k.to_latex(&name)
                }
                Format::Csv | Format::Text => k.to_csv(),
            };
        }
        Command::Expand { comp, basis, mode, format } => {
            let e = match (basis, mode) {
                (Basis::Lambda, Mode::Single) => htilde_lambda(&comp),
                _ => change_basis(&htilde(&comp, mode), basis),
            };
            // The single-parameter Λ expansion keeps its coefficients factored.
            let factored = (basis, mode) == (Basis::Lambda, Mode::Single);
            let body = |latex: bool| match (factored, latex) {
                (true, _) => render_lambda_factored(&htilde_lambda_factored(&comp), latex),
                (false, true) => e.to_latex(),
                (false, false) => e.to_text(),
            };
            out = match format {
                Format::Json => pretty(&serde_json::to_value(&e).expect("serializable")),
                Format::Latex => format!("\\widetilde{{H}}_{{{}}} = {}\n", comp.label(), body(true)),
                _ => format!("{}\n", body(false)),
            };
        }
        Command::Dual { comp: Some(i), format, .. } => {
            let d = denominator(&i)?;
            let p = ptilde(&i);
            out = match format {
                Format::Json => pretty(&json!({
                    "composition": i,
                    "denominator": d.to_json(),
                    "ptilde": p,
                })),
                Format::Latex => format!(
                    "D_{{{l}}} = {}\n\\widetilde{{P}}_{{{l}}} = {}\n",
                    d.to_latex(),
                    p.to_latex(),
                    l = i.label()
                ),
                _ => format!("D_{l} = {}\nP_{l} = {}\n", d.to_text(), p.to_text(), l = i.label()),
            };
        }
        Command::Dual { n, format, .. } => {
            let n = n.expect("clap requires comp or n");
            let m = ptilde_matrix(n);
            out = match format {
                Format::Json => pretty(&m.to_json()),
                Format::Latex => m.to_latex(&format!("\\widetilde{{P}}_{{{n}}}")),
                _ => m.to_csv_with_corner("J\\I"),
            };
        }
        Command::Multiply { comp, n, latex, show_fillings, format } => {
            let z = ZSequence::symbolic(n);
            let terms = expand_product(&comp, n, &z)?;
            if format == Format::Json {
                out = pretty(&json!({ "I": comp, "n": n, "terms": terms }));
            } else {
                let latex = latex || format == Format::Latex;
                let lines: Vec<String> = terms
                    .iter()
                    .map(|f| {
                        if latex {
                            format!("{}\\,\\widetilde{{H}}_{{{}}}", f.factored(true), f.continuation.label())
                        } else {
                            format!("{} H_{}", f.factored(false), f.continuation.label())
                        }
                    })
                    .collect();
                out = if latex {
                    format!("\\widetilde{{H}}_{{{}}}\\,K_{{{n}}}(A;Z) = {}\n", comp.label(), lines.join("\n  + "))
                } else {
                    format!("H_{} K_{n}(A;Z) =\n    {}\n", comp.label(), lines.join("\n  + "))
                };
                if show_fillings {
                    for f in &terms {
                        out.push_str(&format!("\n[{}]\n{}", f.continuation.label(), f.diagram()));
                    }
                }
            }
        }
        Command::Verify { checks, n, seed, mode } => return verify_cmd(checks, n, seed, mode),
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn verify_cmd(
    checks: Vec<Check>,
    range: Option<RangeInclusive<usize>>,
    seed: u64,
    mode: Option<Mode>,
) -> ncmac::Result<ExitCode> {
    let checks = if checks.is_empty() { Check::defaults() } else { checks };
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    let (mut passed, mut failed) = (0usize, 0usize);
    let start = Instant::now();
    for check in checks {
        let modes = match mode {
            None if check.uses_mode() => vec![Some(Mode::Single), Some(Mode::Multi)],
            _ => vec![mode],
        };
        for (n, mode) in
            range.clone().unwrap_or_else(|| check.default_range()).flat_map(|n| modes.iter().map(move |&m| (n, m)))
        {
            let t0 = Instant::now();
            let reports = verify::run(check, n, mode, seed)?;
            let elapsed = t0.elapsed();
            for rep in reports {
                let mut line = serde_json::to_value(&rep).expect("serializable");
                line["seed"] = json!(seed);
                writeln!(stdout, "{}", serde_json::to_string(&line).expect("serializable")).ok();
                let method = match rep.method {
                    ncmac::report::Method::Symbolic => "symbolic".to_string(),
                    ncmac::report::Method::Points { count, .. } => format!("{count} points"),
                };
                let mode = rep.mode.map(|m| format!(" {}", m.name())).unwrap_or_default();
                let status = if rep.passed { "pass" } else { "FAIL" };
                eprintln!("{status} {} n={}{mode}: {} cases, {method} ({:.2?})", rep.check, rep.n, rep.cases, elapsed);
                if rep.passed {
                    passed += 1;
                } else {
                    failed += 1;
                }
            }
        }
    }
    stdout.flush().ok();
    eprintln!("{passed} passed, {failed} failed in {:.2?}", start.elapsed());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
