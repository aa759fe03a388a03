//! Exact non-negative rationals for approximation factors.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::weight::Weight;

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::InvalidRatio(alloc::format!("{num}/0")));
        }
        let g = gcd(num, den).max(1);
        Ok(Ratio { num: num / g, den: den / g })
    }

    pub fn integer(v: u64) -> Ratio {
        Ratio { num: v, den: 1 }
    }

    /// `d / λ` for a cut value and the min-cut value.
    pub fn of_weights(value: Weight, lambda: Weight) -> Result<Ratio> {
        Ratio::new(value.get(), lambda.get())
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn floor(self) -> u64 {
        self.num / self.den
    }

    /// `⌊2·self⌋ + 1`, the terminal-set size bound.
    pub fn terminal_size_bound(self) -> u64 {
        (2 * self.num as u128 / self.den as u128) as u64 + 1
    }

    /// `⌊4·self⌋ + 2`, an integer lower bound on the exponent `4α + 2`.
    pub fn count_exponent_floor(self) -> u64 {
        (4 * self.num as u128 / self.den as u128) as u64 + 2
    }

    /// Exact test of `value ≤ self · base`, compared as `den·value ≤ num·base`.
    #[inline]
    pub fn admits(self, value: Weight, base: Weight) -> bool {
        value.widening_mul(self.den) <= base.widening_mul(self.num)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn parse_u64(s: &str, whole: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidRatio(whole.to_string()));
    }
    s.parse().map_err(|_| Error::InvalidRatio(whole.to_string()))
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `"p/q"`, `"p"` and finite decimals such as `"1.5"`; decimals
    /// are converted exactly (`"1.5"` is `3/2`).
    fn from_str(s: &str) -> Result<Ratio> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            return Ratio::new(parse_u64(p.trim(), s)?, parse_u64(q.trim(), s)?);
        }
        match t.split_once('.') {
            None => Ok(Ratio::integer(parse_u64(t, s)?)),
            Some((int, frac)) => {
                let frac = frac.trim_end_matches('0');
                let int_part = if int.is_empty() { 0 } else { parse_u64(int, s)? };
                if frac.is_empty() {
                    return Ok(Ratio::integer(int_part));
                }
                let frac_part = parse_u64(frac, s)?;
                let overflow = || Error::InvalidRatio(s.to_string());
                let den = 10u64.checked_pow(frac.len() as u32).ok_or_else(overflow)?;
                let num = int_part
                    .checked_mul(den)
                    .and_then(|v| v.checked_add(frac_part))
                    .ok_or_else(overflow)?;
                Ratio::new(num, den)
            }
        }
    }
}
