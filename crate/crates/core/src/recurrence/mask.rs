use crate::boolfn::LinearMask;
use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Positional read access to a mask `(c_0, .., c_{n-1})` of any length.
pub trait BitMask {
    fn len(&self) -> usize;
    fn bit(&self, i: usize) -> bool;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn is_zero(&self) -> bool {
        (0..self.len()).all(|i| !self.bit(i))
    }
}

impl BitMask for LinearMask {
    fn len(&self) -> usize {
        self.n()
    }

    fn bit(&self, i: usize) -> bool {
        LinearMask::bit(self, i)
    }
}

/// The first `len` coordinates of another mask.
#[derive(Debug, Clone, Copy)]
pub struct Prefix<'a, M: ?Sized> {
    inner: &'a M,
    len: usize,
}

impl<'a, M: BitMask + ?Sized> Prefix<'a, M> {
    pub fn new(inner: &'a M, len: usize) -> Self {
        assert!(len <= inner.len());
        Prefix { inner, len }
    }
}

impl<M: BitMask + ?Sized> BitMask for Prefix<'_, M> {
    fn len(&self) -> usize {
        self.len
    }

    fn bit(&self, i: usize) -> bool {
        i < self.len && self.inner.bit(i)
    }
}

/// Masks for large `n` that would be unwieldy as literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuredMask {
    Zero {
        n: usize,
    },
    Ones {
        n: usize,
    },
    /// Only `c_k` set.
    SingleBit {
        n: usize,
        k: usize,
    },
    /// `c_i = block[i mod block.len()]`.
    Periodic {
        n: usize,
        block: Vec<bool>,
    },
    Dense {
        n: usize,
        words: Vec<u64>,
    },
}

impl StructuredMask {
    pub fn zero(n: usize) -> Self {
        StructuredMask::Zero { n }
    }

    pub fn ones(n: usize) -> Self {
        StructuredMask::Ones { n }
    }

    pub fn single_bit(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::arg(format!("bit {k} out of range for length {n}")));
        }
        Ok(StructuredMask::SingleBit { n, k })
    }

    pub fn periodic(n: usize, block: Vec<bool>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::arg("period block must be non-empty"));
        }
        Ok(StructuredMask::Periodic { n, block })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut words = vec![0u64; n.div_ceil(64)];
        for i in (0..n).filter(|&i| f(i)) {
            words[i / 64] |= 1 << (i % 64);
        }
        StructuredMask::Dense { n, words }
    }

    /// Dense mask from the integer encoding `sum c_i 2^i`.
    pub fn from_biguint(n: usize, value: &BigUint) -> Result<Self> {
        if value.bits() > n as u64 {
            return Err(Error::arg(format!(
                "mask value needs {} bits, exceeds length {n}",
                value.bits()
            )));
        }
        let mut words = value.to_u64_digits();
        words.resize(n.div_ceil(64), 0);
        Ok(StructuredMask::Dense { n, words })
    }

    pub fn from_linear(c: &LinearMask) -> Self {
        Self::from_fn(c.n(), |i| c.bit(i))
    }

    /// Same rotation as [`LinearMask::rotate`]: bit `i` moves to `i + k mod n`.
    pub fn rotate(&self, k: usize) -> StructuredMask {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        match self {
            StructuredMask::Zero { .. } | StructuredMask::Ones { .. } => self.clone(),
            StructuredMask::SingleBit { n, k: j } => StructuredMask::SingleBit { n: *n, k: (j + k) % n },
            _ => Self::from_fn(n, |i| self.bit((i + n - k) % n)),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        let n = self.len();
        let mut words = vec![0u64; n.div_ceil(64).max(1)];
        for i in (0..n).filter(|&i| self.bit(i)) {
            words[i / 64] |= 1 << (i % 64);
        }
        BigUint::from_slice(
            &words
                .iter()
                .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                .collect::<Vec<_>>(),
        )
    }
}

impl BitMask for StructuredMask {
    fn len(&self) -> usize {
        match self {
            StructuredMask::Zero { n }
            | StructuredMask::Ones { n }
            | StructuredMask::SingleBit { n, .. }
            | StructuredMask::Periodic { n, .. }
            | StructuredMask::Dense { n, .. } => *n,
        }
    }

    fn bit(&self, i: usize) -> bool {
        if i >= self.len() {
            return false;
        }
        match self {
            StructuredMask::Zero { .. } => false,
            StructuredMask::Ones { .. } => true,
            StructuredMask::SingleBit { k, .. } => i == *k,
            StructuredMask::Periodic { block, .. } => block[i % block.len()],
            StructuredMask::Dense { words, .. } => (words[i / 64] >> (i % 64)) & 1 == 1,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            StructuredMask::Zero { .. } => true,
            StructuredMask::Ones { n } => *n == 0,
            StructuredMask::SingleBit { .. } => false,
            StructuredMask::Periodic { n, block } => !block.iter().take(*n).any(|&b| b),
            StructuredMask::Dense { words, .. } => words.iter().all(|&w| w == 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(m: &impl BitMask) -> Vec<bool> {
        (0..m.len()).map(|i| m.bit(i)).collect()
    }

    #[test]
    fn patterns_read_positionally() {
        assert_eq!(bits(&StructuredMask::zero(3)), vec![false; 3]);
        assert_eq!(bits(&StructuredMask::ones(2)), vec![true; 2]);
        assert_eq!(
            bits(&StructuredMask::single_bit(4, 2).unwrap()),
            vec![false, false, true, false]
        );
        let p = StructuredMask::periodic(7, vec![true, false, false]).unwrap();
        assert_eq!(bits(&p), vec![true, false, false, true, false, false, true]);
        assert!(StructuredMask::single_bit(4, 4).is_err());
        assert!(StructuredMask::periodic(4, vec![]).is_err());
    }

    #[test]
    fn rotation_agrees_with_linear_mask() {
        let c = LinearMask::new(11, 0b101_1001_0110).unwrap();
        let s = StructuredMask::from_linear(&c);
        for k in 0..11 {
            assert_eq!(bits(&s.rotate(k)), bits(&c.rotate(k)), "k={k}");
        }
        let single = StructuredMask::single_bit(10, 9).unwrap();
        assert_eq!(single.rotate(3), StructuredMask::single_bit(10, 2).unwrap());
    }

    #[test]
    fn biguint_round_trip_and_bounds() {
        let v = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let m = StructuredMask::from_biguint(100, &v).unwrap();
        assert_eq!(m.to_biguint(), v);
        assert!(StructuredMask::from_biguint(10, &BigUint::from(1024u32)).is_err());
        assert!(StructuredMask::from_biguint(11, &BigUint::from(1024u32))
            .unwrap()
            .bit(10));
    }

    #[test]
    fn zero_detection() {
        assert!(StructuredMask::zero(5).is_zero());
        assert!(StructuredMask::from_fn(200, |_| false).is_zero());
        assert!(!StructuredMask::from_fn(200, |i| i == 199).is_zero());
        assert!(StructuredMask::periodic(3, vec![false, false, false, true])
            .unwrap()
            .is_zero());
        let top_only = StructuredMask::single_bit(9, 8).unwrap();
        let prefix = Prefix::new(&top_only, 8);
        assert!(prefix.is_zero());
    }
}
