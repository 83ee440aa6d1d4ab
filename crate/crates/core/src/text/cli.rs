//! The `hyperseries` command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, parse or
//! evaluation errors.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engine::{partial_sum_formula, sum_series, EvalConfig, NegBaseMode};
use crate::error::Error;
use crate::hyperreal::Hyperreal;
use crate::oracle::{brute_partial_sum, check_formula, standard_part_crosscheck, VerificationReport};
use crate::text::{parse_hyperreal, parse_series, ValueReport};

#[derive(Parser, Debug)]
#[command(name = "hyperseries", version, about = "Exact hyperreal values of infinite series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NegBaseArg {
    Error,
    Conjecture,
}

#[derive(Args, Debug)]
struct EngineOpts {
    /// Treatment of exponential parts with a negative base other than -1
    #[arg(long, value_enum, default_value = "error")]
    neg_base_mode: NegBaseArg,
    /// Largest index power the engine will expand
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
}

impl EngineOpts {
    fn config(&self) -> Result<EvalConfig, Error> {
        let mode = match self.neg_base_mode {
            NegBaseArg::Error => NegBaseMode::Error,
            NegBaseArg::Conjecture => NegBaseMode::ConjectureExtended,
        };
        EvalConfig::new(mode, self.max_degree)
    }
}

#[derive(Args, Debug)]
struct OutputOpts {
    /// Emit one JSON object per input
    #[arg(long)]
    json: bool,
    /// Print the principal value
    #[arg(long)]
    principal: bool,
    /// Print the standard part (or `none` for infinite values)
    #[arg(long)]
    std: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sum a series at omega. Without EXPR (or with `-`), reads one series
    /// per line from --file or standard input.
    Eval {
        expr: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        engine: EngineOpts,
    },
    /// Print the closed-form partial sum S(n)
    Formula {
        expr: String,
        #[command(flatten)]
        engine: EngineOpts,
    },
    /// Print the exact partial sum up to index n
    Partial {
        #[arg(long)]
        n: i64,
        expr: String,
    },
    /// Check the closed form against brute-force partial sums
    Oracle {
        expr: String,
        /// Number of points past the last override to check
        #[arg(long = "N", default_value_t = 200)]
        points: i64,
        /// Also compare the order-k Hölder mean with the standard part
        #[arg(long)]
        holder: Option<u32>,
        /// Terms used for the Hölder mean
        #[arg(long, default_value_t = 100_000)]
        terms: usize,
        /// Tolerance for the Hölder comparison
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        engine: EngineOpts,
    },
    /// Normalize a hyperreal literal such as `w^2/2 + w/2`
    Value {
        expr: String,
        #[command(flatten)]
        output: OutputOpts,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

fn report_error(stderr: &mut dyn Write, input: &str, err: &Error) {
    let _ = writeln!(stderr, "error: {err}");
    if let Some(offset) = err.offset() {
        let column = input
            .get(..offset)
            .map(|s| s.chars().count())
            .unwrap_or(offset);
        let _ = writeln!(stderr, "  {input}");
        let _ = writeln!(stderr, "  {}^", " ".repeat(column));
    }
}

fn write_value(out: &mut dyn Write, input: &str, value: &Hyperreal, opts: &OutputOpts) -> std::io::Result<()> {
    if opts.json {
        let json = serde_json::to_string(&ValueReport::new(input, value)).expect("serializable");
        return writeln!(out, "{json}");
    }
    if !opts.principal && !opts.std {
        writeln!(out, "{value}")?;
    }
    if opts.principal {
        writeln!(out, "{}", value.principal_value())?;
    }
    if opts.std {
        match value.standard_part() {
            Some(c) => writeln!(out, "{c}")?,
            None => writeln!(out, "none")?,
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, report: &VerificationReport, json: bool) -> std::io::Result<()> {
    if json {
        let text = serde_json::to_string(report).expect("serializable");
        return writeln!(out, "{text}");
    }
    let (from, to) = report.checked_range;
    match &report.first_mismatch {
        None => writeln!(out, "pass: {} (n = {from}..={to})", report.series_id),
        Some(m) => writeln!(
            out,
            "fail: {} at n = {}: expected {}, got {}",
            report.series_id, m.n, m.expected, m.got
        ),
    }
}

fn eval_one(io: &mut Io, input: &str, output: &OutputOpts, cfg: &EvalConfig) -> bool {
    let result = parse_series(input).and_then(|s| sum_series(&s, cfg));
    match result {
        Ok(v) => write_value(io.stdout, input, &v, output).is_ok(),
        Err(e) => {
            report_error(io.stderr, input, &e);
            false
        }
    }
}

fn run(cli: Cli, io: &mut Io) -> Result<i32, (String, Error)> {
    match cli.command {
        Command::Eval {
            expr,
            file,
            output,
            engine,
        } => {
            let cfg = engine.config().map_err(|e| (String::new(), e))?;
            let batch = expr.as_deref().is_none_or(|e| e == "-");
            if !batch {
                let input = expr.unwrap();
                return Ok(if eval_one(io, &input, &output, &cfg) { 0 } else { 2 });
            }
            let lines: Vec<String> = match file {
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(text) => text.lines().map(str::to_string).collect(),
                    Err(e) => {
                        let _ = writeln!(io.stderr, "error: cannot read {}: {e}", path.display());
                        return Ok(2);
                    }
                },
                None => io.stdin.lines().map_while(std::result::Result::ok).collect(),
            };
            let mut code = 0;
            for (k, line) in lines.iter().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                if !eval_one(io, line, &output, &cfg) {
                    let _ = writeln!(io.stderr, "  (line {})", k + 1);
                    code = 2;
                }
            }
            Ok(code)
        }
        Command::Formula { expr, engine } => {
            let cfg = engine.config().map_err(|e| (expr.clone(), e))?;
            let s = parse_series(&expr).map_err(|e| (expr.clone(), e))?;
            let f = partial_sum_formula(&s, &cfg).map_err(|e| (expr.clone(), e))?;
            if f.valid_from > s.start() {
                let _ = writeln!(io.stdout, "{f}  (n >= {})", f.valid_from);
            } else {
                let _ = writeln!(io.stdout, "{f}");
            }
            Ok(0)
        }
        Command::Partial { n, expr } => {
            let s = parse_series(&expr).map_err(|e| (expr.clone(), e))?;
            let value = match partial_sum_formula(&s, &EvalConfig::default()) {
                Ok(f) if n >= f.valid_from => f.eval(n),
                _ => brute_partial_sum(&s, n),
            };
            let _ = writeln!(io.stdout, "{value}");
            Ok(0)
        }
        Command::Oracle {
            expr,
            points,
            holder,
            terms,
            tol,
            json,
            engine,
        } => {
            let cfg = engine.config().map_err(|e| (expr.clone(), e))?;
            let s = parse_series(&expr).map_err(|e| (expr.clone(), e))?;
            if points < 1 {
                let _ = writeln!(io.stderr, "error: --N must be at least 1");
                return Ok(2);
            }
            let report = check_formula(&s, points, &cfg).map_err(|e| (expr.clone(), e))?;
            let _ = write_report(io.stdout, &report, json);
            let mut ok = report.passed();
            if let Some(k) = holder {
                if k < 1 || terms < 1 {
                    let _ = writeln!(io.stderr, "error: --holder and --terms must be at least 1");
                    return Ok(2);
                }
                let cross = standard_part_crosscheck(&s, k, terms, tol, &cfg)
                    .map_err(|e| (expr.clone(), e))?;
                let _ = write_report(io.stdout, &cross, json);
                ok &= cross.passed();
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Value { expr, output } => {
            let v = parse_hyperreal(&expr).map_err(|e| (expr.clone(), e))?;
            let _ = write_value(io.stdout, &expr, &v, &output);
            Ok(0)
        }
    }
}

/// Runs the command line against the given streams and returns the exit
/// code. `args` includes the program name.
pub fn run_cli<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match run(cli, &mut io) {
        Ok(code) => code,
        Err((input, e)) => {
            report_error(io.stderr, &input, &e);
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hyperseries").chain(args.iter().copied());
        let code = run_cli(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_prints_the_value() {
        let (code, out, _) = run_args(&["eval", "sum(i=1..omega, i)"], "");
        assert_eq!((code, out.as_str()), (0, "w^2/2 + w/2\n"));
    }

    #[test]
    fn partial_sums() {
        let (code, out, _) = run_args(&["partial", "--n", "5", "sum(i=1..omega, i)"], "");
        assert_eq!((code, out.as_str()), (0, "15\n"));
    }

    #[test]
    fn oracle_passes() {
        let (code, out, _) = run_args(&["oracle", "--N", "200", "sum(i=1..omega, i*(-1)^(i-1))"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("pass"));
    }

    #[test]
    fn parse_errors_point_at_the_offset() {
        let (code, _, err) = run_args(&["eval", "sum(i=1..omega, i^i)"], "");
        assert_eq!(code, 2);
        assert!(err.contains("unsupported form at byte 17"), "{err}");
        assert!(err.contains("                   ^"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"], "").0, 2);
        assert_eq!(run_args(&["partial", "sum(i=1..omega, i)"], "").0, 2);
        assert_eq!(run_args(&["--help"], "").0, 0);
    }
}
