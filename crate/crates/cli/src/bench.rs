//! Wall-clock measurement and the CSV record shared by `bench` and `count`.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use binmat::cost::{negate_per_bit, run_operands};
use binmat::{counted_run, DenseMatrix, Error, Impl, MatrixOp, Result};

pub const CSV_HEADER: &str = "impl,op,n,reps,total_ns,ns_per_op,total_ops,seed";

/// One measurement row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub implementation: Impl,
    pub op: MatrixOp,
    pub n: usize,
    pub reps: u64,
    pub total_ns: u128,
    pub total_ops: Option<u64>,
    pub seed: u64,
}

impl BenchRecord {
    pub fn ns_per_op(&self) -> f64 {
        self.total_ns as f64 / self.reps as f64
    }
}

impl fmt::Display for BenchRecord {
    /// The CSV row, without a trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{:.3},",
            self.implementation,
            self.op,
            self.n,
            self.reps,
            self.total_ns,
            self.ns_per_op()
        )?;
        if let Some(ops) = self.total_ops {
            write!(f, "{ops}")?;
        }
        write!(f, ",{}", self.seed)
    }
}

/// Payload bytes of an order-`n` matrix in the given representation.
pub fn payload_bytes(implementation: Impl, n: usize) -> usize {
    match implementation {
        Impl::Packed => n * n.div_ceil(64) * std::mem::size_of::<u64>(),
        Impl::Dense => n * n * std::mem::size_of::<u8>(),
    }
}

fn time_reps(reps: u64, warmup: u64, mut f: impl FnMut() -> Result<()>) -> Result<u128> {
    for _ in 0..warmup {
        f()?;
    }
    let start = Instant::now();
    for _ in 0..reps {
        f()?;
    }
    Ok(start.elapsed().as_nanos())
}

/// Times `reps` executions of `op` after `warmup` discarded ones. Inputs are
/// generated before the clock starts and are the same ones `count` uses.
pub fn measure(
    implementation: Impl,
    op: MatrixOp,
    n: usize,
    reps: u64,
    warmup: u64,
    seed: u64,
) -> Result<BenchRecord> {
    if reps == 0 {
        return Err(Error::Usage("--reps must be at least 1".into()));
    }
    let (a, b) = run_operands(op, n, seed)?;
    let total_ns = match implementation {
        Impl::Packed => time_reps(reps, warmup, || {
            match op {
                MatrixOp::And => drop(black_box(black_box(&a).and(&b)?)),
                MatrixOp::Or => drop(black_box(black_box(&a).or(&b)?)),
                MatrixOp::Not => drop(black_box(negate_per_bit(black_box(&a), &mut ()))),
                MatrixOp::NotFast => drop(black_box(black_box(&a).not())),
                MatrixOp::Transpose => drop(black_box(black_box(&a).transpose())),
                MatrixOp::Product => drop(black_box(black_box(&a).product(&b)?)),
                MatrixOp::Compare => drop(black_box(black_box(&a).compare(&b)?)),
                MatrixOp::Assign => drop(black_box(black_box(&a).clone())),
            }
            Ok(())
        })?,
        Impl::Dense => {
            let (a, b) = (DenseMatrix::from_packed(&a), DenseMatrix::from_packed(&b));
            time_reps(reps, warmup, || {
                match op {
                    MatrixOp::And => drop(black_box(black_box(&a).and(&b)?)),
                    MatrixOp::Or => drop(black_box(black_box(&a).or(&b)?)),
                    MatrixOp::Not => drop(black_box(black_box(&a).not())),
                    MatrixOp::NotFast => {
                        return Err(Error::Usage(
                            "not-fast exists only for the packed representation".into(),
                        ))
                    }
                    MatrixOp::Transpose => drop(black_box(black_box(&a).transpose())),
                    MatrixOp::Product => drop(black_box(black_box(&a).product(&b)?)),
                    MatrixOp::Compare => drop(black_box(black_box(&a).compare(&b)?)),
                    MatrixOp::Assign => drop(black_box(black_box(&a).clone())),
                }
                Ok(())
            })?
        }
    };
    Ok(BenchRecord {
        implementation,
        op,
        n,
        reps,
        total_ns,
        total_ops: None,
        seed,
    })
}

/// A single counted run, timed, as a CSV record with `reps = 1`.
pub fn counted_record(
    implementation: Impl,
    op: MatrixOp,
    n: usize,
    seed: u64,
) -> Result<(BenchRecord, binmat::CountReport)> {
    let start = Instant::now();
    let report = counted_run(implementation, op, n, seed)?;
    let total_ns = start.elapsed().as_nanos();
    let record = BenchRecord {
        implementation,
        op,
        n,
        reps: 1,
        total_ns,
        total_ops: Some(report.total_ops),
        seed,
    };
    Ok((record, report))
}
