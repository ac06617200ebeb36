use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use binmat::io::{emit_grid, emit_tuple, parse_grid, parse_tuple};
use binmat::{fit_exponent, BitMatrix, Error, Impl, MatrixOp, MAX_DIM};

use crate::bench::{self, CSV_HEADER};
use crate::verify::{self, Outcome, PackedOps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "binmat",
    version,
    about = "Packed vs dense boolean matrices: verify, benchmark, count"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ImplChoice {
    Packed,
    Dense,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SingleImpl {
    Packed,
    Dense,
}

impl From<SingleImpl> for Impl {
    fn from(i: SingleImpl) -> Self {
        match i {
            SingleImpl::Packed => Impl::Packed,
            SingleImpl::Dense => Impl::Dense,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TextFormat {
    Grid,
    Tuple,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mutation {
    Product,
}

fn parse_size(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    if n == 0 || n > MAX_DIM {
        return Err(format!("size {n} outside 1..={MAX_DIM}"));
    }
    Ok(n)
}

fn parse_op(s: &str) -> Result<MatrixOp, String> {
    s.parse::<MatrixOp>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every packed operation against the dense reference.
    Verify {
        #[arg(long, value_delimiter = ',', value_parser = parse_size,
              default_value = "1,2,3,4,8,16,33,64,65,128")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run against a deliberately broken implementation.
        #[arg(long, hide = true)]
        mutate: Option<Mutation>,
    },
    /// Time an operation and print CSV records.
    Bench {
        #[arg(long, value_parser = parse_op)]
        op: MatrixOp,
        #[arg(long = "impl", value_enum, default_value = "both")]
        implementation: ImplChoice,
        #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "16,32,64,128")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long, default_value_t = 3)]
        warmup: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Print payload bytes per representation and size to stderr.
        #[arg(long)]
        mem: bool,
        /// Fill the total_ops column from a counted run.
        #[arg(long)]
        count_ops: bool,
    },
    /// Count primitive operations and fit the growth exponent.
    Count {
        #[arg(long, value_parser = parse_op)]
        op: MatrixOp,
        #[arg(long = "impl", value_enum)]
        implementation: SingleImpl,
        #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "8,16,32,64")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the per-category tallies to stderr.
        #[arg(long)]
        breakdown: bool,
    },
    /// Convert a matrix between the grid and tuple text formats.
    Convert {
        #[arg(long, value_enum)]
        from: TextFormat,
        #[arg(long, value_enum)]
        to: TextFormat,
        /// Input file, or `-` for stdin.
        input: PathBuf,
    },
    /// Boolean K-th power of a grid matrix.
    Power {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Input grid file, or `-` for stdin.
        input: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(m) => Failure::Usage(m),
            other => Failure::Failed(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Failed(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Verify {
            sizes,
            trials,
            seed,
            mutate,
        } => {
            let ops = match mutate {
                Some(Mutation::Product) => PackedOps::with_broken_product(),
                None => PackedOps::shipped(),
            };
            cmd_verify(&ops, &sizes, trials as usize, seed, out, err)
        }
        Command::Bench {
            op,
            implementation,
            sizes,
            reps,
            warmup,
            seed,
            format: Format::Csv,
            mem,
            count_ops,
        } => {
            let impls: &[Impl] = match implementation {
                ImplChoice::Packed => &[Impl::Packed],
                ImplChoice::Dense => &[Impl::Dense],
                ImplChoice::Both => &[Impl::Packed, Impl::Dense],
            };
            cmd_bench(
                op, impls, &sizes, reps, warmup, seed, mem, count_ops, out, err,
            )
        }
        Command::Count {
            op,
            implementation,
            sizes,
            seed,
            breakdown,
        } => cmd_count(op, implementation.into(), &sizes, seed, breakdown, out, err),
        Command::Convert { from, to, input } => cmd_convert(from, to, &input, out),
        Command::Power { k, input } => cmd_power(k, &input, out),
    }
}

fn cmd_verify(
    ops: &PackedOps,
    sizes: &[usize],
    trials: usize,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match verify::run(ops, sizes, trials, seed)? {
        Outcome::Passed(summary) => {
            for s in &summary {
                writeln!(out, "n={} pairs={} ok", s.n, s.pairs)?;
            }
            writeln!(out, "verify: all operations agree")?;
            Ok(EXIT_OK)
        }
        Outcome::Failed(m) => {
            let operands = if m.b.is_some() { "A and B" } else { "A" };
            writeln!(
                err,
                "verify: packed and dense disagree on {} at n={}; operands {operands} follow on stdout as grid text",
                m.op, m.n
            )?;
            out.write_all(emit_grid(&m.a).as_bytes())?;
            if let Some(b) = &m.b {
                out.write_all(emit_grid(b).as_bytes())?;
            }
            Ok(EXIT_FAILURE)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    op: MatrixOp,
    impls: &[Impl],
    sizes: &[usize],
    reps: u64,
    warmup: u64,
    seed: u64,
    mem: bool,
    count_ops: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if op == MatrixOp::NotFast && impls.contains(&Impl::Dense) {
        return Err(Failure::Usage(
            "not-fast exists only for the packed representation".into(),
        ));
    }
    writeln!(out, "{CSV_HEADER}")?;
    for &n in sizes {
        for &imp in impls {
            let mut rec = bench::measure(imp, op, n, reps, warmup, seed)?;
            if count_ops {
                rec.total_ops = Some(binmat::counted_run(imp, op, n, seed)?.total_ops);
            }
            writeln!(out, "{rec}")?;
            if mem {
                writeln!(
                    err,
                    "payload_bytes impl={imp} n={n} bytes={}",
                    bench::payload_bytes(imp, n)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_count(
    op: MatrixOp,
    imp: Impl,
    sizes: &[usize],
    seed: u64,
    breakdown: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if sizes.len() < 3 {
        return Err(Failure::Usage(format!(
            "count needs at least 3 sizes to fit an exponent, got {}",
            sizes.len()
        )));
    }
    if sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Failure::Usage("sizes must be strictly increasing".into()));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        rows.push(bench::counted_record(imp, op, n, seed)?);
    }
    writeln!(out, "{CSV_HEADER}")?;
    let mut series = Vec::with_capacity(rows.len());
    for (rec, report) in &rows {
        writeln!(out, "{rec}")?;
        series.push((report.n as f64, report.total_ops as f64));
        if breakdown {
            let parts: Vec<String> = report
                .counter
                .breakdown()
                .map(|(c, v)| format!("{c}={v}"))
                .collect();
            writeln!(err, "n={} {}", report.n, parts.join(" "))?;
        }
    }
    writeln!(out, "fit_exponent={:.4}", fit_exponent(&series)?)?;
    Ok(EXIT_OK)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))
}

fn parse_input(path: &Path, format: TextFormat) -> Result<BitMatrix, Failure> {
    let text = read_input(path)?;
    let parsed = match format {
        TextFormat::Grid => parse_grid(&text),
        TextFormat::Tuple => parse_tuple(&text),
    };
    parsed.map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))
}

fn cmd_convert(from: TextFormat, to: TextFormat, input: &Path, out: &mut dyn Write) -> CmdResult {
    let m = parse_input(input, from)?;
    let text = match to {
        TextFormat::Grid => emit_grid(&m),
        TextFormat::Tuple => emit_tuple(&m)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

/// `m^k` by `k - 1` successive products; `m^0` is the identity.
pub fn boolean_power(m: &BitMatrix, k: u64) -> binmat::Result<BitMatrix> {
    if k == 0 {
        return BitMatrix::identity(m.n());
    }
    let mut acc = m.clone();
    for _ in 1..k {
        acc = acc.product(m)?;
    }
    Ok(acc)
}

fn cmd_power(k: i64, input: &Path, out: &mut dyn Write) -> CmdResult {
    if k < 0 {
        return Err(Failure::Usage(format!("--k must be non-negative, got {k}")));
    }
    let m = parse_input(input, TextFormat::Grid)?;
    let p = boolean_power(&m, k as u64)?;
    out.write_all(emit_grid(&p).as_bytes())?;
    Ok(EXIT_OK)
}
