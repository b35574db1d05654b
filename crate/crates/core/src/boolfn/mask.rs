use super::{reverse_bits, rotate_bits};
use crate::error::{Error, Result};

/// A linear form `c . x` on `n <= 64` variables, encoded as `sum c_i 2^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearMask {
    n: usize,
    bits: u64,
}

impl LinearMask {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::arg(format!("mask length {n} outside 1..=64")));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::arg(format!("mask {bits} does not fit in {n} bits")));
        }
        Ok(LinearMask { n, bits })
    }

    pub fn zero(n: usize) -> Self {
        assert!((1..=64).contains(&n));
        LinearMask { n, bits: 0 }
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let enc = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
        Self::new(bits.len(), enc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn enc(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        i < self.n && (self.bits >> i) & 1 == 1
    }

    /// Parity of `c . x`.
    #[inline]
    pub fn dot(&self, x: u64) -> bool {
        (self.bits & x).count_ones() & 1 == 1
    }

    /// The first `m` coordinates, `(c_0, .., c_{m-1})`.
    pub fn prefix(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.n {
            return Err(Error::arg(format!("prefix length {m} outside 1..={}", self.n)));
        }
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Ok(LinearMask {
            n: m,
            bits: self.bits & mask,
        })
    }

    pub fn flip(&self, i: usize) -> Self {
        assert!(i < self.n);
        LinearMask {
            n: self.n,
            bits: self.bits ^ (1 << i),
        }
    }

    /// `(c_0, .., c_{n-1}) -> (c_{n-1}, c_0, .., c_{n-2})` applied `k` times.
    pub fn rotate(&self, k: usize) -> Self {
        LinearMask {
            n: self.n,
            bits: rotate_bits(self.bits, k, self.n),
        }
    }

    pub fn reverse(&self) -> Self {
        LinearMask {
            n: self.n,
            bits: reverse_bits(self.bits, self.n),
        }
    }
}
