//! Hooks through which the matrix algorithms report the primitive operations
//! they execute.
//!
//! Every algorithm in [`crate::bitrow`] and [`crate::dense`] is written once,
//! generic over a [`Meter`]. The public methods pass `&mut ()`, whose hooks
//! compile away, so the shipped code path and the counted code path are the
//! same code.

use std::fmt;

/// Categories partitioning the primitive integer operations
/// `+ - * / % << >> & | ^ ~ && || ! = if < <= > >= == !=`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpCategory {
    /// `+ - * / %`
    Arith,
    /// `<< >>`
    Shift,
    /// `& | ^ ~`
    Bitwise,
    /// `&& || !`
    Logical,
    /// `=`
    Assign,
    /// `if`
    Branch,
    /// `< <= > >= == !=`
    Compare,
}

impl OpCategory {
    pub const ALL: [OpCategory; 7] = [
        OpCategory::Arith,
        OpCategory::Shift,
        OpCategory::Bitwise,
        OpCategory::Logical,
        OpCategory::Assign,
        OpCategory::Branch,
        OpCategory::Compare,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OpCategory::Arith => "arith",
            OpCategory::Shift => "shift",
            OpCategory::Bitwise => "bitwise",
            OpCategory::Logical => "logical",
            OpCategory::Assign => "assign",
            OpCategory::Branch => "branch",
            OpCategory::Compare => "compare",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for OpCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sink for primitive-operation events.
pub trait Meter {
    fn add(&mut self, category: OpCategory, count: u64);

    /// One iteration of a counted loop: the increment and the bound check.
    #[inline(always)]
    fn loop_step(&mut self) {
        self.add(OpCategory::Arith, 1);
        self.add(OpCategory::Compare, 1);
    }
}

impl Meter for () {
    #[inline(always)]
    fn add(&mut self, _category: OpCategory, _count: u64) {}
}
