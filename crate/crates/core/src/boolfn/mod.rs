//! Explicit Boolean functions on up to [`TableCap`] variables.
//!
//! A function on `n` variables is stored as a packed truth table of `2^n`
//! bits. Bit `x` of the table holds `f(x_0, .., x_{n-1})` where
//! `x = sum x_i 2^i`, so `x_0` is the least significant bit of the index.

mod anf;
mod file;
mod mask;

pub use anf::{anf_to_table, table_to_anf, AnfForm, Monomial};
pub use file::FunctionFile;
pub use mask::LinearMask;

use crate::error::{Error, Result};
use std::fmt;

/// Upper bound on the number of variables an explicit table may have.
///
/// Tables and spectra grow as `2^n`; at the default of 26 a full spectrum of
/// `i64` values takes about 0.5 GiB.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableCap(usize);

impl TableCap {
    pub const DEFAULT: usize = 26;
    /// Hard ceiling regardless of configuration.
    pub const HARD_MAX: usize = 30;

    pub fn new(max_vars: usize) -> Result<Self> {
        if max_vars == 0 || max_vars > Self::HARD_MAX {
            return Err(Error::arg(format!(
                "table cap must be in 1..={}, got {max_vars}",
                Self::HARD_MAX
            )));
        }
        Ok(TableCap(max_vars))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::TooManyVariables { n, cap: self.0 })
        } else {
            Ok(())
        }
    }

    /// Bytes needed for the truth table plus a full `i64` spectrum at `n` variables.
    pub fn memory_estimate(n: usize) -> u64 {
        let len = 1u64 << n;
        len / 8 + len * 8
    }
}

impl Default for TableCap {
    fn default() -> Self {
        TableCap(Self::DEFAULT)
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// Rotate the low `n` bits of `x` left by `k`: bit `i` moves to bit `i + k mod n`.
#[inline]
pub fn rotate_bits(x: u64, k: usize, n: usize) -> u64 {
    if n == 0 {
        return x;
    }
    let k = k % n;
    if k == 0 {
        return x;
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((x << k) | (x >> (n - k))) & mask
}

/// Reverse the order of the low `n` bits of `x`.
#[inline]
pub fn reverse_bits(x: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        x.reverse_bits() >> (64 - n)
    }
}

/// A Boolean function given by its packed truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    pub fn zero(n: usize, cap: TableCap) -> Result<Self> {
        if n == 0 {
            return Err(Error::arg("a Boolean function needs at least one variable"));
        }
        cap.check(n)?;
        Ok(BooleanFunction {
            n,
            words: vec![0; words_for(n)],
        })
    }

    pub fn from_fn(n: usize, cap: TableCap, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut out = Self::zero(n, cap)?;
        for x in 0..out.len() {
            if f(x) {
                out.words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(out)
    }

    /// Build from packed words; bits beyond `2^n` must be clear.
    pub fn from_words(n: usize, cap: TableCap, words: Vec<u64>) -> Result<Self> {
        let proto = Self::zero(n, cap)?;
        if words.len() != proto.words.len() {
            return Err(Error::arg(format!(
                "expected {} table words for n={n}, got {}",
                proto.words.len(),
                words.len()
            )));
        }
        if n < 6 && words[0] & !low_mask(n) != 0 {
            return Err(Error::arg("truth table has bits set beyond 2^n"));
        }
        Ok(BooleanFunction { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Table length `2^n`.
    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, x: u64) -> bool {
        debug_assert!(x < self.len());
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    /// Number of inputs mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn distance(&self, other: &BooleanFunction) -> Result<u64> {
        self.same_dim(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum())
    }

    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        self.same_dim(other)?;
        Ok(BooleanFunction {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn complement(&self) -> BooleanFunction {
        let mask = low_mask(self.n);
        BooleanFunction {
            n: self.n,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }

    /// `g(x) = f(rot^k(x))` where `rot(x_0, .., x_{n-1}) = (x_{n-1}, x_0, .., x_{n-2})`.
    pub fn rotate_variables(&self, k: i64) -> BooleanFunction {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as usize;
        if k == 0 {
            return self.clone();
        }
        self.permute_inputs(|x| rotate_bits(x, k, n))
    }

    /// `g(x_0, .., x_{n-1}) = f(x_{n-1}, .., x_0)`.
    pub fn reverse_variables(&self) -> BooleanFunction {
        let n = self.n;
        self.permute_inputs(|x| reverse_bits(x, n))
    }

    /// Invariance under one cyclic shift of the inputs, which generates the whole rotation group.
    pub fn is_rotation_symmetric(&self) -> bool {
        let n = self.n;
        (0..self.len()).all(|x| self.get(x) == self.get(rotate_bits(x, 1, n)))
    }

    fn permute_inputs(&self, map: impl Fn(u64) -> u64) -> BooleanFunction {
        let mut words = vec![0u64; self.words.len()];
        for x in 0..self.len() {
            if self.get(map(x)) {
                words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        BooleanFunction { n: self.n, words }
    }

    fn same_dim(&self, other: &BooleanFunction) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    /// Hex rendering: character `i` holds table bits `4i..4i+3`, bit `4i` in the
    /// nibble's least significant position.
    pub fn to_hex(&self) -> String {
        let nibbles = self.len().div_ceil(4) as usize;
        let mut s = String::with_capacity(nibbles);
        for i in 0..nibbles {
            let w = self.words[i / 16];
            let nib = (w >> ((i % 16) * 4)) & 0xF;
            s.push(char::from_digit(nib as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(n: usize, cap: TableCap, hex: &str) -> Result<BooleanFunction> {
        let mut out = Self::zero(n, cap)?;
        let nibbles = out.len().div_ceil(4) as usize;
        if hex.len() != nibbles {
            return Err(Error::Parse(format!(
                "table_hex for n={n} needs {nibbles} hex digits, got {}",
                hex.len()
            )));
        }
        for (i, ch) in hex.chars().enumerate() {
            let nib = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {ch:?}")))? as u64;
            out.words[i / 16] |= nib << ((i % 16) * 4);
        }
        if n < 6 && out.words[0] & !low_mask(n) != 0 {
            return Err(Error::Parse("table_hex sets bits beyond 2^n".into()));
        }
        Ok(out)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, 0x{})", self.n, self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap() -> TableCap {
        TableCap::default()
    }

    fn x0(n: usize) -> BooleanFunction {
        BooleanFunction::from_fn(n, cap(), |x| x & 1 == 1).unwrap()
    }

    #[test]
    fn cap_is_enforced() {
        let small = TableCap::new(4).unwrap();
        assert_eq!(
            BooleanFunction::zero(5, small),
            Err(Error::TooManyVariables { n: 5, cap: 4 })
        );
        assert!(TableCap::new(31).is_err());
        assert!(TableCap::new(0).is_err());
        assert_eq!(TableCap::default().get(), 26);
    }

    #[test]
    fn weight_and_distance_basics() {
        let z = BooleanFunction::zero(4, cap()).unwrap();
        assert_eq!(z.weight(), 0);
        let f = x0(4);
        assert_eq!(f.weight(), 8);
        assert_eq!(f.distance(&f).unwrap(), 0);
        assert_eq!(f.distance(&f.complement()).unwrap(), 16);
        assert_eq!(z.complement().weight(), 16);
        let big = x0(9);
        assert_eq!(big.distance(&big.complement()).unwrap(), 512);
    }

    #[test]
    fn distance_rejects_mismatched_sizes() {
        let a = BooleanFunction::zero(3, cap()).unwrap();
        let b = BooleanFunction::zero(4, cap()).unwrap();
        assert_eq!(a.distance(&b), Err(Error::DimensionMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn rotation_and_reversal_are_group_actions() {
        let f = BooleanFunction::from_fn(7, cap(), |x| (x * 37 + 11) % 5 == 1).unwrap();
        assert_eq!(f.rotate_variables(0), f);
        assert_eq!(f.rotate_variables(7), f);
        assert_eq!(f.rotate_variables(1).rotate_variables(6), f);
        assert_eq!(f.rotate_variables(-2), f.rotate_variables(5));
        assert_eq!(f.reverse_variables().reverse_variables(), f);
    }

    #[test]
    fn rotation_direction_matches_definition() {
        // g = rotate(f, 1) must satisfy g(x_0..x_{n-1}) = f(x_{n-1}, x_0, ..).
        // With f = x_0, g(x) = x_{n-1}.
        let g = x0(5).rotate_variables(1);
        for x in 0..32u64 {
            assert_eq!(g.get(x), (x >> 4) & 1 == 1);
        }
    }

    #[test]
    fn constants_are_rotation_symmetric() {
        for n in 1..=8 {
            let z = BooleanFunction::zero(n, cap()).unwrap();
            assert!(z.is_rotation_symmetric());
            assert!(z.complement().is_rotation_symmetric());
        }
        assert!(!x0(3).is_rotation_symmetric());
    }

    #[test]
    fn hex_layout_is_little_endian_nibbles() {
        // x_0 on two variables: bits 0,1,0,1 -> nibble 0b1010.
        let f = x0(2);
        assert_eq!(f.to_hex(), "a");
        // Single 1 at index 7 on three variables: bit 7 -> nibble 1 holds 0b1000.
        let g = BooleanFunction::from_fn(3, cap(), |x| x == 7).unwrap();
        assert_eq!(g.to_hex(), "08");
        assert_eq!(BooleanFunction::from_hex(3, cap(), "08").unwrap(), g);
        assert_eq!(BooleanFunction::from_hex(3, cap(), "0F").unwrap().weight(), 4);
        let one_var = BooleanFunction::from_fn(1, cap(), |x| x == 1).unwrap();
        assert_eq!(one_var.to_hex(), "2");
        assert!(BooleanFunction::from_hex(1, cap(), "4").is_err());
        assert!(BooleanFunction::from_hex(3, cap(), "0").is_err());
        assert!(BooleanFunction::from_hex(3, cap(), "0g").is_err());
    }

    #[test]
    fn hex_round_trips_multiword_tables() {
        let f = BooleanFunction::from_fn(9, cap(), |x| x.count_ones() % 3 == 0).unwrap();
        let hex = f.to_hex();
        assert_eq!(hex.len(), 128);
        assert_eq!(BooleanFunction::from_hex(9, cap(), &hex).unwrap(), f);
    }

    #[test]
    fn bit_helpers() {
        assert_eq!(rotate_bits(0b0001, 1, 4), 0b0010);
        assert_eq!(rotate_bits(0b1000, 1, 4), 0b0001);
        assert_eq!(rotate_bits(0b1011, 4, 4), 0b1011);
        assert_eq!(reverse_bits(0b0011, 4), 0b1100);
        assert_eq!(reverse_bits(1, 1), 1);
    }
}
