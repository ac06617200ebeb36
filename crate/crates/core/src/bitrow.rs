//! Bit-packed square boolean matrices.
//!
//! Each row is stored as `ceil(n / 64)` `u64` words holding the row's bits as
//! one big-endian binary numeral: element `(i, 0)` is the most significant bit
//! and element `(i, n - 1)` the least significant. Unused high bits of the
//! first word of each row are padding and are always zero. For `n <= 64` a
//! row is therefore exactly its integer value in `[0, 2^n - 1]`, and comparing
//! rows numerically is the same as comparing their bit strings
//! lexicographically.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::meter::{Meter, OpCategory};
use crate::MAX_DIM;

const WORD_BITS: usize = 64;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::Dimension { n });
    }
    Ok(())
}

/// An `n x n` boolean matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// The all-zero matrix of order `n`.
    pub fn new_zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        let words_per_row = n.div_ceil(WORD_BITS);
        Ok(Self {
            n,
            words_per_row,
            data: vec![0; n * words_per_row],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::new_zero(n)?;
        for i in 0..n {
            m.put_one(i, i, &mut ());
        }
        Ok(m)
    }

    /// Builds a matrix of order `rows.len()` from single-word row values.
    pub fn from_row_values(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mut m = Self::new_zero(n)?;
        for (i, &r) in rows.iter().enumerate() {
            m.set_row(i, r)?;
        }
        Ok(m)
    }

    /// A uniformly random matrix of order `n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut m = Self::new_zero(n)?;
        let mask = m.first_word_mask();
        for row in m.data.chunks_exact_mut(m.words_per_row) {
            for w in row.iter_mut() {
                *w = rng.random();
            }
            row[0] &= mask;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Bytes occupied by the packed rows.
    pub fn payload_bytes(&self) -> usize {
        self.data.len() * std::mem::size_of::<u64>()
    }

    /// The packed words of row `i`, most significant first.
    pub fn row_words(&self, i: usize) -> &[u64] {
        let w = self.words_per_row;
        &self.data[i * w..(i + 1) * w]
    }

    fn padding(&self) -> usize {
        self.words_per_row * WORD_BITS - self.n
    }

    fn first_word_mask(&self) -> u64 {
        u64::MAX >> self.padding()
    }

    /// True when every padding bit is zero.
    pub fn padding_is_clean(&self) -> bool {
        let mask = self.first_word_mask();
        self.data
            .chunks_exact(self.words_per_row)
            .all(|row| row[0] & !mask == 0)
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::Index { i, j, n: self.n });
        }
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    #[inline(always)]
    fn locate(&self, i: usize, j: usize) -> (usize, u64) {
        let offset = self.padding() + j;
        (
            i * self.words_per_row + offset / WORD_BITS,
            1u64 << (WORD_BITS - 1 - offset % WORD_BITS),
        )
    }

    #[inline(always)]
    fn read<M: Meter>(&self, i: usize, j: usize, m: &mut M) -> bool {
        m.add(OpCategory::Arith, 2);
        m.add(OpCategory::Shift, 1);
        m.add(OpCategory::Bitwise, 1);
        m.add(OpCategory::Compare, 1);
        let (idx, mask) = self.locate(i, j);
        self.data[idx] & mask != 0
    }

    #[inline(always)]
    fn put_one<M: Meter>(&mut self, i: usize, j: usize, m: &mut M) {
        m.add(OpCategory::Arith, 2);
        m.add(OpCategory::Shift, 1);
        m.add(OpCategory::Bitwise, 1);
        m.add(OpCategory::Assign, 1);
        let (idx, mask) = self.locate(i, j);
        self.data[idx] |= mask;
    }

    #[inline(always)]
    fn put_zero<M: Meter>(&mut self, i: usize, j: usize, m: &mut M) {
        m.add(OpCategory::Arith, 2);
        m.add(OpCategory::Shift, 1);
        m.add(OpCategory::Bitwise, 2);
        m.add(OpCategory::Assign, 1);
        let (idx, mask) = self.locate(i, j);
        self.data[idx] &= !mask;
    }

    pub fn get(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i, j)?;
        Ok(self.read(i, j, &mut ()))
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) -> Result<()> {
        self.check_index(i, j)?;
        if value {
            self.put_one(i, j, &mut ());
        } else {
            self.put_zero(i, j, &mut ());
        }
        Ok(())
    }

    /// Returns a copy with element `(i, j)` set to `value`.
    pub fn with(&self, i: usize, j: usize, value: bool) -> Result<Self> {
        let mut m = self.clone();
        m.set(i, j, value)?;
        Ok(m)
    }

    fn check_row_access(&self, i: usize) -> Result<()> {
        if self.n > WORD_BITS {
            return Err(Error::UnsupportedForDimension { n: self.n });
        }
        if i >= self.n {
            return Err(Error::Index { i, j: 0, n: self.n });
        }
        Ok(())
    }

    /// Overwrites row `i` with the `n`-bit value `r`. Only for `n <= 64`.
    pub fn set_row(&mut self, i: usize, r: u64) -> Result<()> {
        self.check_row_access(i)?;
        if r & !self.first_word_mask() != 0 {
            return Err(Error::Value {
                value: r,
                n: self.n,
            });
        }
        self.data[i] = r;
        Ok(())
    }

    /// The integer value of row `i`. Only for `n <= 64`.
    pub fn get_row(&self, i: usize) -> Result<u64> {
        self.check_row_access(i)?;
        Ok(self.data[i])
    }

    /// Row values for `n <= 64`.
    pub fn row_values(&self) -> Result<Vec<u64>> {
        if self.n > WORD_BITS {
            return Err(Error::UnsupportedForDimension { n: self.n });
        }
        Ok(self.data.clone())
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.and_metered(other, &mut ())
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.or_metered(other, &mut ())
    }

    pub fn not(&self) -> Self {
        self.not_metered(&mut ())
    }

    pub fn transpose(&self) -> Self {
        self.transpose_metered(&mut ())
    }

    /// Boolean matrix product over `({0, 1}, or, and)`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.product_metered(other, &mut ())
    }

    /// Lexicographic comparison of the row-major bit sequences.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.compare_metered(other, &mut ())
    }

    fn zip_words<M: Meter>(
        &self,
        other: &Self,
        m: &mut M,
        f: impl Fn(u64, u64) -> u64,
    ) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::new_zero(self.n)?;
        for ((c, &a), &b) in out.data.iter_mut().zip(&self.data).zip(&other.data) {
            m.loop_step();
            m.add(OpCategory::Bitwise, 1);
            m.add(OpCategory::Assign, 1);
            *c = f(a, b);
        }
        Ok(out)
    }

    pub fn and_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Self> {
        self.zip_words(other, m, |a, b| a & b)
    }

    pub fn or_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Self> {
        self.zip_words(other, m, |a, b| a | b)
    }

    /// Word complement followed by clearing the padding of every row.
    pub fn not_metered<M: Meter>(&self, m: &mut M) -> Self {
        let mut out = self.clone();
        for w in out.data.iter_mut() {
            m.loop_step();
            m.add(OpCategory::Bitwise, 1);
            m.add(OpCategory::Assign, 1);
            *w = !*w;
        }
        let mask = self.first_word_mask();
        for row in out.data.chunks_exact_mut(self.words_per_row) {
            m.loop_step();
            m.add(OpCategory::Bitwise, 1);
            m.add(OpCategory::Assign, 1);
            row[0] &= mask;
        }
        out
    }

    /// Element-by-element transpose: every `(i, j)` is read and written to
    /// `(j, i)` as either a one or a zero.
    pub fn transpose_metered<M: Meter>(&self, m: &mut M) -> Self {
        let n = self.n;
        let mut out = Self {
            n,
            words_per_row: self.words_per_row,
            data: vec![0; self.data.len()],
        };
        for i in 0..n {
            m.loop_step();
            for j in 0..n {
                m.loop_step();
                let bit = self.read(i, j, m);
                m.add(OpCategory::Branch, 1);
                if bit {
                    out.put_one(j, i, m);
                } else {
                    out.put_zero(j, i, m);
                }
            }
        }
        out
    }

    /// Transposes `other`, then sets `c[i][j]` iff row `i` of `self` and row
    /// `j` of the transpose have a common one bit.
    pub fn product_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let w = self.words_per_row;
        let tb = other.transpose_metered(m);
        let mut out = Self::new_zero(n)?;
        for i in 0..n {
            m.loop_step();
            let ra = &self.data[i * w..(i + 1) * w];
            for j in 0..n {
                m.loop_step();
                let rb = &tb.data[j * w..(j + 1) * w];
                let mut common = 0u64;
                for (&x, &y) in ra.iter().zip(rb) {
                    m.loop_step();
                    m.add(OpCategory::Bitwise, 2);
                    m.add(OpCategory::Assign, 1);
                    common |= x & y;
                }
                m.add(OpCategory::Compare, 1);
                m.add(OpCategory::Branch, 1);
                if common != 0 {
                    out.put_one(i, j, m);
                } else {
                    out.put_zero(i, j, m);
                }
            }
        }
        Ok(out)
    }

    /// Scans rows upward from 0 and, within a row, words from the most
    /// significant; the first differing word decides.
    pub fn compare_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Ordering> {
        self.check_same(other)?;
        for (ra, rb) in self
            .data
            .chunks_exact(self.words_per_row)
            .zip(other.data.chunks_exact(self.words_per_row))
        {
            m.loop_step();
            for (&x, &y) in ra.iter().zip(rb) {
                m.loop_step();
                m.add(OpCategory::Compare, 1);
                m.add(OpCategory::Branch, 1);
                if x != y {
                    m.add(OpCategory::Compare, 1);
                    return Ok(x.cmp(&y));
                }
            }
        }
        Ok(Ordering::Equal)
    }

    /// Word-by-word copy.
    pub fn assign_metered<M: Meter>(&self, m: &mut M) -> Self {
        let mut out = Self {
            n: self.n,
            words_per_row: self.words_per_row,
            data: vec![0; self.data.len()],
        };
        for (dst, &src) in out.data.iter_mut().zip(&self.data) {
            m.loop_step();
            m.add(OpCategory::Assign, 1);
            *dst = src;
        }
        out
    }
}

impl PartialOrd for BitMatrix {
    /// `None` when the orders differ.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                f.write_str(if self.read(i, j, &mut ()) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{}):\n{}", self.n, self.n, self)
    }
}
