//! Free abelian group `Z^n` with simples the coordinate subsets.

use crate::error::{GarsideError, Result};
use crate::structure::GarsideStructure;

pub const MAX_RANK: usize = 64;

/// `Z^n`: atoms `x_1..x_n`, Δ = x_1⋯x_n, τ = id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeAbelian {
    n: usize,
}

impl FreeAbelian {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(GarsideError::InvalidRank {
                family: "zn",
                min: 1,
                got: n,
            });
        }
        if n > MAX_RANK {
            return Err(GarsideError::RankTooLarge {
                family: "zn",
                max: MAX_RANK,
                got: n,
            });
        }
        Ok(FreeAbelian { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

/// Shorthand for [`FreeAbelian::new`].
pub fn free_abelian(n: usize) -> Result<FreeAbelian> {
    FreeAbelian::new(n)
}

impl GarsideStructure for FreeAbelian {
    /// Bit `i` set means `x_{i+1}` divides the element.
    type Simple = u64;

    fn descriptor(&self) -> String {
        format!("zn:{}", self.n)
    }

    fn atom_count(&self) -> usize {
        self.n
    }

    fn atom(&self, i: usize) -> u64 {
        assert!(i < self.n, "atom index out of range");
        1 << i
    }

    fn identity(&self) -> u64 {
        0
    }

    fn delta(&self) -> u64 {
        self.full()
    }

    fn delta_length(&self) -> usize {
        self.n
    }

    fn letter_length(&self, s: &u64) -> usize {
        s.count_ones() as usize
    }

    fn is_prefix(&self, a: &u64, b: &u64) -> bool {
        a & !b == 0
    }

    fn is_suffix(&self, a: &u64, b: &u64) -> bool {
        a & !b == 0
    }

    fn left_quotient(&self, a: &u64, b: &u64) -> Option<u64> {
        self.is_prefix(a, b).then_some(b & !a)
    }

    fn right_quotient(&self, a: &u64, b: &u64) -> Option<u64> {
        self.is_prefix(b, a).then_some(a & !b)
    }

    fn product(&self, a: &u64, b: &u64) -> Option<u64> {
        (a & b == 0).then_some(a | b)
    }

    fn right_complement(&self, a: &u64) -> u64 {
        self.full() & !a
    }

    fn left_complement(&self, a: &u64) -> u64 {
        self.full() & !a
    }

    fn tau(&self, a: &u64, _k: i64) -> u64 {
        *a
    }

    fn simple_count(&self) -> u128 {
        1u128 << self.n
    }

    fn all_simples(&self) -> Vec<u64> {
        (0..=self.full()).collect()
    }
}
