//! `degbell`: tables, single values and identity verification for the
//! degenerate central Bell polynomials and their companion number families.

mod family;
mod output;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degbell_core::bell::{self, CentralKernel};
use degbell_core::identities::{run_suite, LambdaMode, SuiteConfig};
use degbell_core::ring::parse_rational;
use degbell_core::Rational;

use family::{parse_rational_list, Family, LambdaArg, Shape};
use output::{Format, Row, Table};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl From<degbell_core::Error> for CliError {
    fn from(e: degbell_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "degbell", version, about = "Exact degenerate central Bell polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one member of a family.
    Eval(EvalArgs),
    /// Print the triangle 0 ≤ k ≤ n ≤ n-max of a family.
    Table(TableArgs),
    /// Run the identity suite and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated rational arguments x₁,x₂,…
    #[arg(long, allow_hyphen_values = true)]
    xs: Option<String>,
    /// Scalar argument for bell-deg and bell-central-deg.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// `sym` or a rational p/q.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    family: String,
    #[arg(long)]
    n_max: usize,
    /// Arguments x₁,x₂,…; all ones when omitted, otherwise a prefix is used per row.
    #[arg(long, allow_hyphen_values = true)]
    xs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// `sym`, or a comma-separated list of rational λ sample points.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    lambda: String,
    /// Random argument vectors per (n, k) shape.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum, hide = true)]
    mutant: Option<Mutant>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutant {
    FlipCentralSign,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => eval(args),
        Command::Table(args) => table(args),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Io(_) => ExitCode::from(3),
            }
        }
    }
}

fn scalar_x(family: Family, x: Option<&str>) -> Result<Rational, CliError> {
    match (family.shape(), x) {
        (Shape::Scalar, None) => Ok(Rational::from_integer(1.into())),
        (Shape::Scalar, Some(s)) => {
            parse_rational(s).map_err(|_| CliError::Usage(format!("invalid rational {s:?} in --x")))
        }
        (_, Some(_)) => Err(CliError::Usage(format!("{family} does not take --x"))),
        (_, None) => Ok(Rational::from_integer(0.into())),
    }
}

fn parse_xs(family: Family, xs: Option<&str>) -> Result<Option<Vec<Rational>>, CliError> {
    match (family.shape(), xs) {
        (Shape::Incomplete | Shape::Complete, Some(s)) => parse_rational_list(s, "--xs").map(Some),
        (_, Some(_)) => Err(CliError::Usage(format!("{family} does not take --xs"))),
        (_, None) => Ok(None),
    }
}

fn eval(args: EvalArgs) -> Result<ExitCode, CliError> {
    let family: Family = args.family.parse()?;
    let lambda = LambdaArg::parse(&args.lambda)?;
    let x = scalar_x(family, args.x.as_deref())?;
    let xs = parse_xs(family, args.xs.as_deref())?.unwrap_or_default();
    if args.k.is_some() && !family.has_k() {
        return Err(CliError::Usage(format!("{family} is indexed by n only and does not take --k")));
    }
    if family.has_k() && args.k.is_none() {
        return Err(CliError::Usage(format!("{family} needs --k")));
    }
    let need = family.arity(args.n, args.k);
    if xs.len() != need {
        return Err(CliError::Usage(format!(
            "{family} at this shape needs exactly {need} --xs values, got {}",
            xs.len()
        )));
    }
    let value = lambda.apply(&family.evaluate(args.n, args.k, &xs, &x)?);
    let text = match args.format {
        Format::Plain => format!("{value}\n"),
        format => Table {
            family,
            lambda,
            rows: vec![Row { n: args.n, k: args.k, value }],
        }
        .render(format),
    };
    emit(&text, None)?;
    Ok(ExitCode::SUCCESS)
}

fn table(args: TableArgs) -> Result<ExitCode, CliError> {
    let family: Family = args.family.parse()?;
    let lambda = LambdaArg::parse(&args.lambda)?;
    let x = scalar_x(family, args.x.as_deref())?;
    let need = match family.shape() {
        Shape::Incomplete => args.n_max + 1,
        Shape::Complete => args.n_max,
        Shape::Triangle | Shape::Scalar => 0,
    };
    let xs = parse_xs(family, args.xs.as_deref())?.unwrap_or_else(|| bell::ones(need));
    if xs.len() < need {
        return Err(CliError::Usage(format!(
            "{family} up to n-max {} needs at least {need} --xs values, got {}",
            args.n_max,
            xs.len()
        )));
    }

    let mut rows = Vec::new();
    for n in 0..=args.n_max {
        let ks: Vec<Option<usize>> = if family.has_k() {
            (0..=n).map(Some).collect()
        } else {
            vec![None]
        };
        for k in ks {
            let args_here = &xs[..family.arity(n, k)];
            let value = lambda.apply(&family.evaluate(n, k, args_here, &x)?);
            rows.push(Row { n, k, value });
        }
    }
    let text = Table { family, lambda, rows }.render(args.format);
    emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let lambda = if args.lambda == "sym" {
        LambdaMode::Symbolic
    } else {
        let points = parse_rational_list(&args.lambda, "--lambda")?;
        if points.is_empty() {
            return Err(CliError::Usage("--lambda needs at least one sample point".into()));
        }
        LambdaMode::Samples(points)
    };
    let config = SuiteConfig {
        n_max: args.n_max,
        seed: args.seed,
        lambda,
        samples: args.samples,
        kernel: match args.mutant {
            Some(Mutant::FlipCentralSign) => CentralKernel::FlippedSign,
            None => CentralKernel::Standard,
        },
    };
    let reports = run_suite(&config);
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        eprintln!("{:<4} {status}  {}", r.check_id, r.description);
    }
    let mut text = serde_json::to_string_pretty(&reports).expect("reports serialize");
    text.push('\n');
    emit(&text, args.out.as_deref())?;
    Ok(if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit(text: &str, out: Option<&str>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {path}: {e}"))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}
