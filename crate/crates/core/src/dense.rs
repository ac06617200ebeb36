//! Dense reference representation: one byte per element, row-major.
//!
//! The algorithms follow the matrix definitions literally (cell-by-cell loops,
//! the triple loop for the product with no early exit) and serve as the oracle
//! for [`BitMatrix`] as well as the slow side of the benchmarks.

use std::cmp::Ordering;
use std::str::FromStr;

use crate::bitrow::{check_dim, BitMatrix};
use crate::error::{Error, Result};
use crate::meter::{Meter, OpCategory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenseOp {
    And,
    Or,
    Not,
}

impl FromStr for DenseOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "and" => Ok(DenseOp::And),
            "or" => Ok(DenseOp::Or),
            "not" => Ok(DenseOp::Not),
            _ => Err(Error::Usage(format!("unknown elementwise op {s:?}"))),
        }
    }
}

/// An `n x n` boolean matrix with one storage cell per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    n: usize,
    cells: Vec<u8>,
}

impl DenseMatrix {
    pub fn new_zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            cells: vec![0; n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::new_zero(n)?;
        for i in 0..n {
            m.cells[i * n + i] = 1;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn payload_bytes(&self) -> usize {
        self.cells.len() * std::mem::size_of::<u8>()
    }

    pub fn get(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i, j)?;
        Ok(self.cells[i * self.n + j] != 0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) -> Result<()> {
        self.check_index(i, j)?;
        self.cells[i * self.n + j] = u8::from(value);
        Ok(())
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

    pub fn from_packed(m: &BitMatrix) -> Self {
        let n = m.n();
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            cells.extend((0..n).map(|j| u8::from(m.get(i, j).unwrap())));
        }
        Self { n, cells }
    }

    pub fn to_packed(&self) -> BitMatrix {
        let mut m = BitMatrix::new_zero(self.n).expect("dimension already validated");
        for (p, &c) in self.cells.iter().enumerate() {
            if c != 0 {
                m.set(p / self.n, p % self.n, true).unwrap();
            }
        }
        m
    }

    /// Cell-by-cell AND, OR or NOT. `other` must be present for the binary
    /// operations and absent for NOT.
    pub fn elementwise(&self, op: DenseOp, other: Option<&Self>) -> Result<Self> {
        self.elementwise_metered(op, other, &mut ())
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.elementwise(DenseOp::And, Some(other))
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.elementwise(DenseOp::Or, Some(other))
    }

    pub fn not(&self) -> Self {
        self.elementwise(DenseOp::Not, None)
            .expect("unary op cannot fail")
    }

    pub fn transpose(&self) -> Self {
        self.transpose_metered(&mut ())
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.product_metered(other, &mut ())
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.compare_metered(other, &mut ())
    }

    pub fn elementwise_metered<M: Meter>(
        &self,
        op: DenseOp,
        other: Option<&Self>,
        m: &mut M,
    ) -> Result<Self> {
        let mut out = Self::new_zero(self.n)?;
        match (op, other) {
            (DenseOp::Not, None) => {
                for (c, &a) in out.cells.iter_mut().zip(&self.cells) {
                    m.loop_step();
                    m.add(OpCategory::Branch, 1);
                    m.add(OpCategory::Assign, 1);
                    *c = if a != 0 { 0 } else { 1 };
                }
            }
            (DenseOp::And | DenseOp::Or, Some(b)) => {
                self.check_same(b)?;
                let and = op == DenseOp::And;
                for ((c, &x), &y) in out.cells.iter_mut().zip(&self.cells).zip(&b.cells) {
                    m.loop_step();
                    m.add(OpCategory::Logical, 1);
                    m.add(OpCategory::Assign, 1);
                    let (x, y) = (x != 0, y != 0);
                    *c = u8::from(if and { x && y } else { x || y });
                }
            }
            (DenseOp::Not, Some(_)) => {
                return Err(Error::Usage("NOT takes a single operand".into()));
            }
            (_, None) => {
                return Err(Error::Usage(format!("{op:?} needs a second operand")));
            }
        }
        Ok(out)
    }

    pub fn transpose_metered<M: Meter>(&self, m: &mut M) -> Self {
        let n = self.n;
        let mut out = Self {
            n,
            cells: vec![0; n * n],
        };
        for i in 0..n {
            m.loop_step();
            for j in 0..n {
                m.loop_step();
                m.add(OpCategory::Arith, 4);
                m.add(OpCategory::Assign, 1);
                out.cells[i * n + j] = self.cells[j * n + i];
            }
        }
        out
    }

    /// Triple loop `c = c || (a[i][k] && b[k][j])` over all `n^3` index
    /// triples, with no early exit once `c` becomes 1.
    pub fn product_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let mut out = Self::new_zero(n)?;
        for i in 0..n {
            m.loop_step();
            for j in 0..n {
                m.loop_step();
                m.add(OpCategory::Assign, 1);
                let mut c = false;
                for k in 0..n {
                    m.loop_step();
                    m.add(OpCategory::Arith, 4);
                    m.add(OpCategory::Logical, 2);
                    m.add(OpCategory::Assign, 1);
                    c |= self.cells[i * n + k] != 0 && other.cells[k * n + j] != 0;
                }
                m.add(OpCategory::Arith, 2);
                m.add(OpCategory::Assign, 1);
                out.cells[i * n + j] = u8::from(c);
            }
        }
        Ok(out)
    }

    /// Flattened row-major scan; the first differing cell decides.
    pub fn compare_metered<M: Meter>(&self, other: &Self, m: &mut M) -> Result<Ordering> {
        self.check_same(other)?;
        let last = self.cells.len() - 1;
        let mut p = 0;
        loop {
            m.add(OpCategory::Compare, 1);
            m.add(OpCategory::Logical, 1);
            let same = self.cells[p] == other.cells[p];
            if !same {
                break;
            }
            m.add(OpCategory::Arith, 1);
            m.add(OpCategory::Compare, 1);
            if p >= last {
                break;
            }
            m.add(OpCategory::Arith, 1);
            p += 1;
        }
        m.add(OpCategory::Compare, 2);
        m.add(OpCategory::Branch, 1);
        Ok(self.cells[p].cmp(&other.cells[p]))
    }

    /// Cell-by-cell copy.
    pub fn assign_metered<M: Meter>(&self, m: &mut M) -> Self {
        let mut out = Self {
            n: self.n,
            cells: vec![0; self.cells.len()],
        };
        for (dst, &src) in out.cells.iter_mut().zip(&self.cells) {
            m.loop_step();
            m.add(OpCategory::Assign, 1);
            *dst = src;
        }
        out
    }
}

impl From<&BitMatrix> for DenseMatrix {
    fn from(m: &BitMatrix) -> Self {
        DenseMatrix::from_packed(m)
    }
}

impl From<&DenseMatrix> for BitMatrix {
    fn from(m: &DenseMatrix) -> Self {
        m.to_packed()
    }
}
