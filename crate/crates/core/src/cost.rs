//! Machine-independent operation counting.
//!
//! [`counted_run`] drives one algorithm of either representation with an
//! [`OpCounter`] attached and reports how many primitive operations it
//! executed, broken down by [`OpCategory`]. Loop control (increment and bound
//! check) is counted. Allocation and zero-initialisation of result storage is
//! not.

use std::fmt;
use std::str::FromStr;

use crate::bitrow::BitMatrix;
use crate::dense::{DenseMatrix, DenseOp};
use crate::error::{Error, Result};
use crate::meter::{Meter, OpCategory};
use crate::seeded_rng;

/// Largest order accepted by [`counted_run`].
pub const MAX_COUNTED_DIM: usize = 4096;

/// Per-category tallies of executed primitives.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounter {
    tallies: [u64; 7],
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, category: OpCategory) -> u64 {
        self.tallies[category.index()]
    }

    pub fn total(&self) -> u64 {
        self.tallies.iter().sum()
    }

    pub fn breakdown(&self) -> impl Iterator<Item = (OpCategory, u64)> + '_ {
        OpCategory::ALL.iter().map(|&c| (c, self.get(c)))
    }
}

impl Meter for OpCounter {
    #[inline]
    fn add(&mut self, category: OpCategory, count: u64) {
        self.tallies[category.index()] += count;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Impl {
    Packed,
    Dense,
}

impl Impl {
    pub fn as_str(self) -> &'static str {
        match self {
            Impl::Packed => "packed",
            Impl::Dense => "dense",
        }
    }
}

impl fmt::Display for Impl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Impl {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "packed" => Ok(Impl::Packed),
            "dense" => Ok(Impl::Dense),
            _ => Err(Error::Usage(format!(
                "unknown implementation {s:?} (expected packed or dense)"
            ))),
        }
    }
}

/// Operations that can be counted or benchmarked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixOp {
    And,
    Or,
    /// For the packed representation: the element-by-element negation.
    Not,
    /// The word-parallel packed negation. Packed only.
    NotFast,
    Transpose,
    Product,
    /// Counted on two equal operands, which forces a full scan.
    Compare,
    Assign,
}

impl MatrixOp {
    pub const ALL: [MatrixOp; 8] = [
        MatrixOp::And,
        MatrixOp::Or,
        MatrixOp::Not,
        MatrixOp::NotFast,
        MatrixOp::Transpose,
        MatrixOp::Product,
        MatrixOp::Compare,
        MatrixOp::Assign,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MatrixOp::And => "and",
            MatrixOp::Or => "or",
            MatrixOp::Not => "not",
            MatrixOp::NotFast => "not-fast",
            MatrixOp::Transpose => "transpose",
            MatrixOp::Product => "product",
            MatrixOp::Compare => "compare",
            MatrixOp::Assign => "assign",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(
            self,
            MatrixOp::And | MatrixOp::Or | MatrixOp::Product | MatrixOp::Compare
        )
    }
}

impl fmt::Display for MatrixOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatrixOp::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown op {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub implementation: Impl,
    pub op: MatrixOp,
    pub n: usize,
    pub seed: u64,
    pub total_ops: u64,
    pub counter: OpCounter,
}

/// Element-by-element packed negation: every element is read and the
/// opposite value is written into a fresh matrix.
pub fn negate_per_bit<M: Meter>(a: &BitMatrix, m: &mut M) -> BitMatrix {
    let n = a.n();
    let mut out = BitMatrix::new_zero(n).expect("order already validated");
    for i in 0..n {
        m.loop_step();
        for j in 0..n {
            m.loop_step();
            // get_element: index arithmetic, shift, mask, test
            m.add(OpCategory::Arith, 2);
            m.add(OpCategory::Shift, 1);
            m.add(OpCategory::Bitwise, 1);
            m.add(OpCategory::Compare, 1);
            m.add(OpCategory::Branch, 1);
            let bit = a.get(i, j).expect("index in range");
            // set_0 / set_1
            m.add(OpCategory::Arith, 2);
            m.add(OpCategory::Shift, 1);
            m.add(OpCategory::Bitwise, if bit { 2 } else { 1 });
            m.add(OpCategory::Assign, 1);
            out.set(i, j, !bit).expect("index in range");
        }
    }
    out
}

/// The operands [`counted_run`] uses for `op` at order `n`: `a` is random;
/// `b` is random for the binary ops, a copy of `a` for `Compare` and an
/// unused `1 x 1` zero matrix otherwise.
pub fn run_operands(op: MatrixOp, n: usize, seed: u64) -> Result<(BitMatrix, BitMatrix)> {
    let rng = &mut seeded_rng(seed);
    let a = BitMatrix::random(n, rng)?;
    let b = match op {
        MatrixOp::Compare => a.clone(),
        _ if op.is_binary() => BitMatrix::random(n, rng)?,
        _ => BitMatrix::new_zero(1)?,
    };
    Ok((a, b))
}

/// Runs the instrumented algorithm for `(implementation, op)` on pseudo-random
/// order-`n` operands drawn from a ChaCha8 generator seeded with `seed`.
///
/// Both representations draw the same packed operands, so a dense and a
/// packed run with equal arguments see the same matrices.
pub fn counted_run(implementation: Impl, op: MatrixOp, n: usize, seed: u64) -> Result<CountReport> {
    if n == 0 || n > MAX_COUNTED_DIM {
        return Err(Error::Usage(format!(
            "counted runs need 1 <= n <= {MAX_COUNTED_DIM}, got {n}"
        )));
    }
    let (a, b) = run_operands(op, n, seed)?;
    let mut c = OpCounter::new();
    match implementation {
        Impl::Packed => match op {
            MatrixOp::And => drop(a.and_metered(&b, &mut c)?),
            MatrixOp::Or => drop(a.or_metered(&b, &mut c)?),
            MatrixOp::Not => drop(negate_per_bit(&a, &mut c)),
            MatrixOp::NotFast => drop(a.not_metered(&mut c)),
            MatrixOp::Transpose => drop(a.transpose_metered(&mut c)),
            MatrixOp::Product => drop(a.product_metered(&b, &mut c)?),
            MatrixOp::Compare => drop(a.compare_metered(&b, &mut c)?),
            MatrixOp::Assign => drop(a.assign_metered(&mut c)),
        },
        Impl::Dense => {
            let (a, b) = (DenseMatrix::from_packed(&a), DenseMatrix::from_packed(&b));
            match op {
                MatrixOp::And => drop(a.elementwise_metered(DenseOp::And, Some(&b), &mut c)?),
                MatrixOp::Or => drop(a.elementwise_metered(DenseOp::Or, Some(&b), &mut c)?),
                MatrixOp::Not => drop(a.elementwise_metered(DenseOp::Not, None, &mut c)?),
                MatrixOp::NotFast => {
                    return Err(Error::Usage(
                        "not-fast exists only for the packed representation".into(),
                    ))
                }
                MatrixOp::Transpose => drop(a.transpose_metered(&mut c)),
                MatrixOp::Product => drop(a.product_metered(&b, &mut c)?),
                MatrixOp::Compare => drop(a.compare_metered(&b, &mut c)?),
                MatrixOp::Assign => drop(a.assign_metered(&mut c)),
            }
        }
    }
    Ok(CountReport {
        implementation,
        op,
        n,
        seed,
        total_ops: c.total(),
        counter: c,
    })
}

/// Least-squares slope of `ln(count)` against `ln(n)`.
pub fn fit_exponent(series: &[(f64, f64)]) -> Result<f64> {
    if series.len() < 3 {
        return Err(Error::Usage(format!(
            "exponent fit needs at least 3 points, got {}",
            series.len()
        )));
    }
    if series.iter().any(|&(n, c)| !(n > 0.0 && c > 0.0)) {
        return Err(Error::Usage(
            "exponent fit needs positive sizes and counts".into(),
        ));
    }
    if series.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::Usage(
            "exponent fit needs strictly increasing sizes".into(),
        ));
    }
    let pts: Vec<(f64, f64)> = series.iter().map(|&(n, c)| (n.ln(), c.ln())).collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = pts.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}
