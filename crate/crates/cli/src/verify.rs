//! Cross-checks every packed operation against the dense reference.

use std::thread;

use binmat::{seeded_rng, BitMatrix, DenseMatrix, Ordering, Result};

pub const DEFAULT_SIZES: [usize; 10] = [1, 2, 3, 4, 8, 16, 33, 64, 65, 128];
pub const DEFAULT_TRIALS: usize = 200;

/// The packed operations under test. Swapping one out lets the harness be
/// checked against a deliberately broken implementation.
#[derive(Clone, Copy)]
pub struct PackedOps {
    pub and: fn(&BitMatrix, &BitMatrix) -> Result<BitMatrix>,
    pub or: fn(&BitMatrix, &BitMatrix) -> Result<BitMatrix>,
    pub not: fn(&BitMatrix) -> BitMatrix,
    pub transpose: fn(&BitMatrix) -> BitMatrix,
    pub product: fn(&BitMatrix, &BitMatrix) -> Result<BitMatrix>,
    pub compare: fn(&BitMatrix, &BitMatrix) -> Result<Ordering>,
}

impl PackedOps {
    pub fn shipped() -> Self {
        Self {
            and: BitMatrix::and,
            or: BitMatrix::or,
            not: BitMatrix::not,
            transpose: BitMatrix::transpose,
            product: BitMatrix::product,
            compare: BitMatrix::compare,
        }
    }

    /// Shipped operations except that the product loses its last row.
    pub fn with_broken_product() -> Self {
        fn broken(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
            let mut c = a.product(b)?;
            let last = c.n() - 1;
            for j in 0..c.n() {
                c.set(last, j, false)?;
            }
            Ok(c)
        }
        Self {
            product: broken,
            ..Self::shipped()
        }
    }
}

impl Default for PackedOps {
    fn default() -> Self {
        Self::shipped()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub op: &'static str,
    pub n: usize,
    pub a: BitMatrix,
    /// Absent for the unary operations.
    pub b: Option<BitMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeSummary {
    pub n: usize,
    pub pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed(Vec<SizeSummary>),
    Failed(Mismatch),
}

/// Runs all six operations on `(a, b)` through both representations and
/// returns the first disagreement.
pub fn check_pair(ops: &PackedOps, a: &BitMatrix, b: &BitMatrix) -> Result<Option<Mismatch>> {
    let (da, db) = (DenseMatrix::from_packed(a), DenseMatrix::from_packed(b));
    let mismatch = |op, binary: bool| Mismatch {
        op,
        n: a.n(),
        a: a.clone(),
        b: binary.then(|| b.clone()),
    };
    if (ops.and)(a, b)? != da.and(&db)?.to_packed() {
        return Ok(Some(mismatch("and", true)));
    }
    if (ops.or)(a, b)? != da.or(&db)?.to_packed() {
        return Ok(Some(mismatch("or", true)));
    }
    if (ops.not)(a) != da.not().to_packed() {
        return Ok(Some(mismatch("not", false)));
    }
    if (ops.transpose)(a) != da.transpose().to_packed() {
        return Ok(Some(mismatch("transpose", false)));
    }
    if (ops.product)(a, b)? != da.product(&db)?.to_packed() {
        return Ok(Some(mismatch("product", true)));
    }
    if (ops.compare)(a, b)? != da.compare(&db)? {
        return Ok(Some(mismatch("compare", true)));
    }
    Ok(None)
}

/// All 256 ordered pairs of `2 x 2` matrices.
pub fn exhaustive_order_two(ops: &PackedOps) -> Result<Option<Mismatch>> {
    let all = (0u64..16)
        .map(|v| BitMatrix::from_row_values(&[v >> 2, v & 3]))
        .collect::<Result<Vec<_>>>()?;
    for a in &all {
        for b in &all {
            if let Some(m) = check_pair(ops, a, b)? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

fn size_seed(seed: u64, n: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ n as u64
}

fn random_trials(ops: &PackedOps, n: usize, trials: usize, seed: u64) -> Result<Option<Mismatch>> {
    let mut rng = seeded_rng(size_seed(seed, n));
    for _ in 0..trials {
        let a = BitMatrix::random(n, &mut rng)?;
        let b = BitMatrix::random(n, &mut rng)?;
        if let Some(m) = check_pair(ops, &a, &b)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Exhaustive `n = 2` sweep followed by `trials` random pairs per size. Sizes
/// run on separate threads; the reported mismatch is the one for the earliest
/// size in `sizes`.
pub fn run(ops: &PackedOps, sizes: &[usize], trials: usize, seed: u64) -> Result<Outcome> {
    if let Some(m) = exhaustive_order_two(ops)? {
        return Ok(Outcome::Failed(m));
    }
    let results: Vec<Result<Option<Mismatch>>> = thread::scope(|s| {
        let handles: Vec<_> = sizes
            .iter()
            .map(|&n| s.spawn(move || random_trials(ops, n, trials, seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut summary = vec![SizeSummary { n: 2, pairs: 256 }];
    for (&n, r) in sizes.iter().zip(results) {
        if let Some(m) = r? {
            return Ok(Outcome::Failed(m));
        }
        summary.push(SizeSummary { n, pairs: trials });
    }
    Ok(Outcome::Passed(summary))
}
