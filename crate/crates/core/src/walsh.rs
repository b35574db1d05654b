//! Walsh (Fourier) transforms of Boolean functions and nonlinearity.
//!
//! `W_f(c) = sum_x (-1)^(f(x) + c.x)`, with the spectrum indexed by the
//! little-endian encoding of `c`. Everything is exact integer arithmetic.

use crate::boolfn::{BooleanFunction, LinearMask};
use crate::error::{Error, Result};
use rayon::prelude::*;

/// Blocks of this many entries are transformed independently before the
/// cross-block butterflies.
const BLOCK: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn from_values(n: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() as u64 != 1u64 << n {
            return Err(Error::arg(format!(
                "spectrum of n={n} needs {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        Ok(WalshSpectrum { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, enc: u64) -> i64 {
        self.values[enc as usize]
    }

    pub fn at(&self, c: &LinearMask) -> Result<i64> {
        if c.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: c.n(),
            });
        }
        Ok(self.get(c.enc()))
    }

    /// `sum_c W(c)^2`, which is `4^n` for every Boolean function.
    pub fn parseval_sum(&self) -> u128 {
        self.values.iter().map(|&v| (v as i128 * v as i128) as u128).sum()
    }

    /// Largest `|W(c)|` over `c != 0`, with the smallest mask attaining it.
    pub fn max_abs_nonzero(&self) -> Option<(u64, u64)> {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(c, v)| (v.unsigned_abs(), c as u64))
            .fold(None, |best, (v, c)| match best {
                Some((bv, _)) if bv >= v => best,
                _ => Some((v, c)),
            })
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// Distances of `f` to the linear functions (`linear_nl`) and to the linear
/// functions together with their complements (`affine_nl`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonlinearityReport {
    pub linear_nl: u64,
    pub affine_nl: u64,
    pub max_signed_coeff: i64,
    pub max_abs_coeff: u64,
    /// Masks with `|W(c)| = max_abs_coeff`, ascending.
    pub argmax_masks: Vec<u64>,
}

/// Single coefficient by direct summation over all `2^n` inputs.
pub fn walsh_point(f: &BooleanFunction, c: &LinearMask) -> Result<i64> {
    if f.n() != c.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: c.n(),
        });
    }
    let mut sum = 0i64;
    for x in 0..f.len() {
        if f.get(x) ^ c.dot(x) {
            sum -= 1;
        } else {
            sum += 1;
        }
    }
    Ok(sum)
}

/// Full spectrum by the fast butterfly transform, `O(n 2^n)`.
pub fn walsh_spectrum(f: &BooleanFunction) -> WalshSpectrum {
    let mut values: Vec<i64> = (0..f.len()).map(|x| if f.get(x) { -1 } else { 1 }).collect();
    fwht_in_place(&mut values);
    WalshSpectrum { n: f.n(), values }
}

/// Unnormalized Walsh-Hadamard transform of a length `2^k` slice.
pub fn fwht_in_place(values: &mut [i64]) {
    let len = values.len();
    assert!(len.is_power_of_two(), "transform length must be a power of two");
    if len <= BLOCK {
        fwht_sequential(values);
        return;
    }
    values.par_chunks_mut(BLOCK).for_each(fwht_sequential);
    let mut h = BLOCK;
    while h < len {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            lo.par_chunks_mut(BLOCK)
                .zip(hi.par_chunks_mut(BLOCK))
                .for_each(|(a, b)| butterfly(a, b));
        }
        h *= 2;
    }
}

fn fwht_sequential(values: &mut [i64]) {
    let len = values.len();
    let mut h = 1;
    while h < len {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            butterfly(lo, hi);
        }
        h *= 2;
    }
}

#[inline]
fn butterfly(lo: &mut [i64], hi: &mut [i64]) {
    for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
        let (x, y) = (*a, *b);
        *a = x + y;
        *b = x - y;
    }
}

/// Both nonlinearity conventions from a spectrum, using
/// `d(f, c.x) = (2^n - W(c)) / 2`.
pub fn nonlinearity(spectrum: &WalshSpectrum) -> NonlinearityReport {
    let half = 1u64 << spectrum.n >> 1;
    let max_signed = *spectrum.values.iter().max().expect("non-empty spectrum");
    let max_abs = spectrum
        .values
        .iter()
        .map(|v| v.unsigned_abs())
        .max()
        .expect("non-empty spectrum");
    let argmax_masks = spectrum
        .values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.unsigned_abs() == max_abs)
        .map(|(c, _)| c as u64)
        .collect();
    // Spectrum values share the parity of 2^n, so the halvings are exact for n >= 1.
    let linear_nl = (half as i64 - max_signed / 2) as u64;
    let affine_nl = half - max_abs / 2;
    NonlinearityReport {
        linear_nl,
        affine_nl,
        max_signed_coeff: max_signed,
        max_abs_coeff: max_abs,
        argmax_masks,
    }
}
