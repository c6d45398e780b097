//! `diagcat`: enumerate, compose and realize diagrams from the shell.
//!
//! Exit codes: 0 ok, 1 check failure, 2 invalid arguments, 3 parse error,
//! 4 diagram kind not valid for the functor or category, 5 length or shape
//! mismatch, 6 size cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagcat::algebra::{compose, tensor, CategoryContext, ContextKind, DiagramSum, Rule1Variant};
use diagcat::check::{CheckConfig, SuiteRegistry};
use diagcat::counting::{bell, bell_bounded, brauer_count, brauer_grood_count};
use diagcat::fast::{apply_dense, apply_fast, bench, format_vector, parse_vector, planarize, BenchReport, Mode};
use diagcat::functors::dense::checked_power;
use diagcat::functors::emit::{format_matrix, MatrixLayout};
use diagcat::functors::{realize, FunctorRegistry, MatrixFunctor, Theta, DEFAULT_ENTRY_CAP};
use diagcat::groups::GroupTag;
use diagcat::notation::{parse_diagram, parse_sum};
use diagcat::setpart::{
    enumerate_bg, enumerate_brauer, enumerate_partition_diagrams, enumerate_partition_diagrams_bounded, DiagramShape,
};
use diagcat::Error;

#[derive(Parser)]
#[command(name = "diagcat", version, about = "Exact diagram categories and equivariant matrices")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest dense matrix, in entries.
    #[arg(long, global = true, default_value_t = DEFAULT_ENTRY_CAP)]
    cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the diagrams of a family, then `count=N`.
    Enumerate(EnumerateArgs),
    /// Compose two diagram sums, `upper • lower`.
    Compose(BinaryArgs),
    /// Tensor two diagram sums, `left ⊗ right`.
    Tensor(BinaryArgs),
    /// Print the matrix of a diagram sum under a functor.
    Matrix(MatrixArgs),
    /// Apply a partition diagram to a vector file.
    Apply(ApplyArgs),
    /// Time the dense and factored paths on a random diagram.
    Bench(BenchArgs),
    /// Run the property suites.
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Partition,
    Bounded,
    Brauer,
    Bg,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
    /// Required for `bounded` and `bg`.
    #[arg(long)]
    n: Option<usize>,
    /// Print only the closed-form count.
    #[arg(long)]
    count_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Context {
    Partition,
    Brauer,
    Bg,
}

impl Context {
    fn kind(self) -> ContextKind {
        match self {
            Context::Partition => ContextKind::Partition,
            Context::Brauer => ContextKind::Brauer,
            Context::Bg => ContextKind::BrauerGrood,
        }
    }
}

#[derive(Args)]
struct BinaryArgs {
    #[arg(long, value_enum, default_value = "partition")]
    context: Context,
    #[arg(long)]
    n: usize,
    first: String,
    second: String,
    /// Flip Rule 1 signs; a fixture for the check suites.
    #[arg(long, hide = true)]
    mutate_rule1: bool,
}

#[derive(Args)]
struct MatrixArgs {
    /// One of theta, phi, x_sp, psi.
    #[arg(long)]
    functor: String,
    #[arg(long)]
    n: usize,
    /// Emit `row col value` triplets instead of dense rows.
    #[arg(long)]
    sparse: bool,
    diagram: String,
}

#[derive(Args)]
struct ApplyArgs {
    diagram: String,
    /// Vector file, `-` for stdin.
    #[arg(long)]
    input: String,
    /// Must match the vector file when given.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, conflicts_with = "dense")]
    fast: bool,
    #[arg(long)]
    dense: bool,
    /// Run both paths and print `deviation=<max abs difference>`.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
}

#[derive(Args)]
struct CheckArgs {
    /// Suites to run; all when omitted.
    #[arg(long)]
    suite: Vec<String>,
    /// Restrict the equivariance suite to one group (sym, orth, symp, so).
    #[arg(long)]
    group: Option<String>,
    /// Restrict suites that sweep n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, hide = true)]
    mutate_rule1: bool,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 3,
        Error::OddDimension { .. }
        | Error::NotBrauer { .. }
        | Error::NotBrauerGrood { .. }
        | Error::KindMismatch { .. }
        | Error::KindNotInContext { .. } => 4,
        Error::ShapeMismatch { .. } | Error::DimensionMismatch(_) | Error::ModeMismatch(_) | Error::LegCountMismatch { .. } => 5,
        Error::SizeLimitExceeded { .. } => 6,
        _ => 2,
    }
}

type Out<'a> = &'a mut dyn Write;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}

fn run(cli: &Cli, out: Out) -> Result<(), Failure> {
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, out),
        Command::Compose(a) => binary(a, out, compose),
        Command::Tensor(a) => binary(a, out, tensor),
        Command::Matrix(a) => matrix(cli, a, out),
        Command::Apply(a) => apply(a, out),
        Command::Bench(a) => {
            let r = bench(DiagramShape::new(a.k, a.l), a.n, a.trials, cli.seed, cli.cap)?;
            writeln!(out, "{}", BenchReport::csv_header()).map_err(io_err)?;
            writeln!(out, "{}", r.csv_row()).map_err(io_err)?;
            Ok(())
        }
        Command::Check(a) => check(cli, a, out),
    }
}

fn io_err(e: io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn enumerate(a: &EnumerateArgs, out: Out) -> Result<(), Failure> {
    let shape = DiagramShape::new(a.k, a.l);
    let total = shape.total();
    let need_n = || a.n.filter(|&n| n > 0).ok_or_else(|| Failure::Usage("this family needs --n <positive>".into()));
    if a.count_only {
        let count = match a.family {
            Family::Partition => bell(total),
            Family::Bounded => bell_bounded(total, need_n()?),
            Family::Brauer => {
                if total % 2 == 1 {
                    0u8.into()
                } else {
                    brauer_count(total)
                }
            }
            Family::Bg => brauer_grood_count(total, need_n()?),
        };
        writeln!(out, "count={count}").map_err(io_err)?;
        return Ok(());
    }
    let list = match a.family {
        Family::Partition => enumerate_partition_diagrams(shape),
        Family::Bounded => enumerate_partition_diagrams_bounded(shape, need_n()?),
        Family::Brauer => enumerate_brauer(shape),
        Family::Bg => enumerate_bg(shape, need_n()?),
    };
    for d in &list {
        writeln!(out, "{d}").map_err(io_err)?;
    }
    writeln!(out, "count={}", list.len()).map_err(io_err)?;
    Ok(())
}

fn binary(
    a: &BinaryArgs,
    out: Out,
    op: fn(&CategoryContext, &DiagramSum, &DiagramSum) -> diagcat::Result<DiagramSum>,
) -> Result<(), Failure> {
    let mut ctx = CategoryContext::new(a.context.kind(), a.n)?;
    if a.mutate_rule1 {
        ctx = ctx.with_rule1(Rule1Variant::Unsigned);
    }
    let first = parse_sum(&a.first)?;
    let second = parse_sum(&a.second)?;
    let result = op(&ctx, &first, &second)?;
    writeln!(out, "{result}").map_err(io_err)?;
    Ok(())
}

fn matrix(cli: &Cli, a: &MatrixArgs, out: Out) -> Result<(), Failure> {
    let registry = FunctorRegistry::standard();
    let f = registry.get(&a.functor).map_err(|e| Failure::Usage(e.to_string()))?;
    f.check_dimension(a.n)?;
    let s = parse_sum(&a.diagram)?;
    checked_power(a.n, s.shape().total(), cli.cap)?;
    let m = realize(f, a.n, &s)?;
    let layout = if a.sparse { MatrixLayout::Sparse } else { MatrixLayout::Dense };
    write!(out, "{}", format_matrix(f.name(), &m, layout)).map_err(io_err)?;
    Ok(())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn apply(a: &ApplyArgs, out: Out) -> Result<(), Failure> {
    let d = parse_diagram(&a.diagram)?;
    let v = parse_vector(&read_input(&a.input)?)?;
    let n = v.n();
    if a.n.is_some_and(|m| m != n) {
        return Err(Error::DimensionMismatch(format!("--n {} but the vector has n={n}", a.n.unwrap())).into());
    }
    if v.order() != d.shape().k {
        return Err(Error::DimensionMismatch(format!(
            "diagram expects order {} (length {}), vector has order {} (length {})",
            d.shape().k,
            n.pow(d.shape().k as u32),
            v.order(),
            v.len()
        ))
        .into());
    }
    let fast = || -> diagcat::Result<_> { apply_fast(&planarize(&d, n)?, &v) };
    let dense = || -> diagcat::Result<_> { apply_dense(&Theta.realize_diagram(n, &d)?, &v) };
    if a.verify {
        let (x, y) = (fast()?, dense()?);
        let dev = x.max_abs_diff(&y)?;
        match v.mode() {
            Mode::Exact if dev == 0.0 => writeln!(out, "deviation=0"),
            _ => writeln!(out, "deviation={dev:e}"),
        }
        .map_err(io_err)?;
        return Ok(());
    }
    let result = if a.dense { dense()? } else { fast()? };
    write!(out, "{}", format_vector(&result)).map_err(io_err)?;
    Ok(())
}

fn check(cli: &Cli, a: &CheckArgs, out: Out) -> Result<(), Failure> {
    let registry = SuiteRegistry::standard();
    let group = a
        .group
        .as_deref()
        .map(GroupTag::from_name)
        .transpose()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let config = CheckConfig {
        seed: cli.seed,
        trials: a.trials,
        n: a.n,
        group,
        rule1: if a.mutate_rule1 { Rule1Variant::Unsigned } else { Rule1Variant::Signed },
    };
    let names: Vec<String> = if a.suite.is_empty() {
        registry.names().into_iter().map(String::from).collect()
    } else {
        a.suite.clone()
    };
    let mut failed = false;
    for name in &names {
        let suite = registry.get(name).map_err(|e| Failure::Usage(e.to_string()))?;
        let report = suite.run(&config)?;
        writeln!(out, "{report}").map_err(io_err)?;
        if let Some(f) = &report.failure {
            eprintln!("counterexample in {}: {f}", report.suite);
            failed = true;
            break;
        }
    }
    if failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}
