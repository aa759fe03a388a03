use core::fmt;
use core::iter::Sum;
use core::ops::Add;

use crate::error::{Error, Result};

/// Exact non-negative edge cost or cut value.
///
/// Graphs bound their total edge weight by `u64::MAX / 2`, so every cut
/// value and every σ-value fits; sums and products are still checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub u64);

impl Weight {
    pub const ZERO: Weight = Weight(0);

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, other: Weight) -> Result<Weight> {
        self.0.checked_add(other.0).map(Weight).ok_or(Error::Overflow)
    }

    /// Product in a double-width integer; cannot overflow.
    #[inline]
    pub fn widening_mul(self, factor: u64) -> u128 {
        self.0 as u128 * factor as u128
    }
}

impl Add for Weight {
    type Output = Weight;

    /// Panics on overflow, which the graph's total-weight bound rules out.
    fn add(self, other: Weight) -> Weight {
        Weight(self.0.checked_add(other.0).expect("weight overflow"))
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl From<u64> for Weight {
    fn from(v: u64) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
