use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use knotobs::concordance::{
    alternating_obstruction, bound_report, deltan_report, expr_upsilon, independence_certificate, ConcordanceError,
    Functional, FunctionalChoice, KnotExpr, Verdict,
};
use knotobs::expr::{parse_expr, ExprError, MatrixResolver};
use knotobs::rational::{parse_rational, Rational};
use knotobs::render;
use knotobs::seifert::SeifertMatrix;

#[derive(Parser)]
#[command(name = "knotobs", version, about = "Exact concordance obstructions to alternating knots")]
struct Cli {
    /// Directory that `M(path)` atoms are resolved against
    #[arg(long, global = true, value_name = "DIR")]
    matrix_dir: Option<PathBuf>,

    /// Significant digits for decimal output
    #[arg(long, global = true, default_value_t = render::DEFAULT_DIGITS)]
    digits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum UpsilonFormat {
    Breakpoints,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignatureFormat {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Upsilon(t)/t of a linear combination of torus knots
    Upsilon {
        expr: String,
        #[arg(long, value_enum, default_value = "breakpoints")]
        format: UpsilonFormat,
        /// Sampling step for csv and svg, e.g. 1/120
        #[arg(long, default_value = "1/120", value_parser = parse_grid)]
        grid: Rational,
    },
    /// Jumps of the signature function on the upper half circle
    Signature {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: SignatureFormat,
    },
    /// Lower bounds on the genus and double-point count to an alternating knot
    Bound { expr: String },
    /// Report on the knot K[n]
    Deltan { n: i64 },
    /// Independence certificate in the quotient by alternating knots
    Independent {
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Functional to use instead of automatic selection (repeatable)
        #[arg(long = "functional", value_name = "F")]
        functionals: Vec<Functional>,
    },
    /// Look for a functional that separates the knot from alternating knots
    Obstruct { expr: String },
}

fn parse_grid(s: &str) -> Result<Rational, String> {
    let q = parse_rational(s).ok_or_else(|| format!("not a rational number: {s}"))?;
    if q <= Rational::from_integer(0.into()) || q > Rational::from_integer(2.into()) {
        return Err("grid step must lie in (0, 2]".into());
    }
    Ok(q)
}

/// Reads `M(path)` atoms from disk, relative to `--matrix-dir` when given.
struct FileMatrices {
    root: Option<PathBuf>,
}

impl MatrixResolver for FileMatrices {
    fn resolve(&self, path: &str) -> Result<SeifertMatrix, String> {
        let full = match &self.root {
            Some(dir) => dir.join(path),
            None => PathBuf::from(path),
        };
        let text = std::fs::read_to_string(&full).map_err(|e| format!("cannot read {}: {e}", full.display()))?;
        let m: SeifertMatrix = text.parse().map_err(|e| format!("{}: {e}", full.display()))?;
        Ok(m.with_name(path))
    }
}

enum Failure {
    Usage(String),
    Inconclusive(String),
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

impl From<ConcordanceError> for Failure {
    fn from(e: ConcordanceError) -> Self {
        match e {
            ConcordanceError::MissingInvariantData { .. } | ConcordanceError::IndeterminateSign { .. } => {
                Failure::Inconclusive(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let resolver = FileMatrices { root: cli.matrix_dir };
    let parse = |s: &str| -> Result<KnotExpr, Failure> { Ok(parse_expr(s, &resolver)?) };
    let digits = cli.digits;
    let out = match cli.command {
        Command::Upsilon { expr, format, grid } => {
            let k = parse(&expr)?;
            let u = expr_upsilon(&k)?;
            match format {
                UpsilonFormat::Breakpoints => render::upsilon_breakpoints(&u),
                UpsilonFormat::Csv => render::upsilon_csv(&u, &grid, digits),
                UpsilonFormat::Svg => render::upsilon_svg(&u, &grid, &format!("Upsilon(t)/t of {k}")),
            }
        }
        Command::Signature { expr, format } => {
            let k = parse(&expr)?;
            let steps = render::signature_steps(&k)?;
            match format {
                SignatureFormat::Svg => render::signature_svg(&steps, &format!("signature function of {k}")),
                SignatureFormat::Text => {
                    let mut s = format!("expr: {k}\n");
                    for (x, j) in &steps.jumps {
                        s.push_str(&format!("jump: {x:.6} {j:+}\n"));
                    }
                    s.push_str(&format!("signature_at_minus_one: {}\n", steps.final_value()));
                    s
                }
            }
        }
        Command::Bound { expr } => render::render_bound_report(&bound_report(&parse(&expr)?)?, digits),
        Command::Deltan { n } => render::render_deltan(&deltan_report(n)?, digits),
        Command::Obstruct { expr } => render::render_obstruction(&alternating_obstruction(&parse(&expr)?)?),
        Command::Independent { exprs, functionals } => {
            let knots = exprs.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
            let choice = if functionals.is_empty() {
                FunctionalChoice::Auto
            } else {
                FunctionalChoice::Explicit(functionals)
            };
            let cert = independence_certificate(&knots, &choice)?;
            let ok = cert.verdict == Verdict::Independent;
            return Ok((render::render_certificate(&cert), ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok { ExitCode::SUCCESS } else { ExitCode::from(2) }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(2)
        }
    }
}
