//! Exact sequences for `W_F3(0)`, weight and nonlinearity at any `n`.
//!
//! Values grow roughly like `1.77^n`, so everything is `BigInt`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `W_F3(0)` for `n = 3, 4, 5`.
const ZERO_VALUE_SEEDS: [i64; 3] = [6, 8, 20];
/// Weight of `F3` for `n = 3, 4, 5`.
const WEIGHT_SEEDS: [i64; 3] = [1, 4, 6];

/// The three independently generated sequences, indexed by `n` (entries below 3 are zero).
#[derive(Debug, Clone)]
pub struct F3Sequences {
    n_max: usize,
    /// `Z(n) = 2 (Z(n-2) + Z(n-3))`.
    zero_primary: Vec<BigInt>,
    /// `Z(n) = Z(n-1) + 2 Z(n-4) + 4 Z(n-5)` for `n >= 8`, seeded from the primary values for `n <= 7`.
    zero_alternate: Vec<BigInt>,
    /// `wt(n) = 2 (wt(n-2) + wt(n-3)) + 2^(n-3)`.
    weight_additive: Vec<BigInt>,
}

impl F3Sequences {
    pub fn compute(n_max: usize) -> Result<Self> {
        if n_max < 3 {
            return Err(Error::arg(format!("sequences start at n = 3, got n_max = {n_max}")));
        }
        let len = n_max + 1;
        let mut zero_primary = vec![BigInt::zero(); len];
        let mut weight_additive = vec![BigInt::zero(); len];
        for n in 3..len {
            if n <= 5 {
                zero_primary[n] = BigInt::from(ZERO_VALUE_SEEDS[n - 3]);
                weight_additive[n] = BigInt::from(WEIGHT_SEEDS[n - 3]);
            } else {
                zero_primary[n] = (&zero_primary[n - 2] + &zero_primary[n - 3]) << 1;
                weight_additive[n] =
                    ((&weight_additive[n - 2] + &weight_additive[n - 3]) << 1) + (BigInt::one() << (n - 3));
            }
        }
        let mut zero_alternate = vec![BigInt::zero(); len];
        for n in 3..len {
            zero_alternate[n] = if n <= 7 {
                zero_primary[n].clone()
            } else {
                &zero_alternate[n - 1] + (&zero_alternate[n - 4] << 1) + (&zero_alternate[n - 5] << 2)
            };
        }
        Ok(F3Sequences {
            n_max,
            zero_primary,
            zero_alternate,
            weight_additive,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn zero_value(&self, n: usize) -> &BigInt {
        assert!((3..=self.n_max).contains(&n));
        &self.zero_primary[n]
    }

    pub fn zero_value_alternate(&self, n: usize) -> &BigInt {
        assert!((3..=self.n_max).contains(&n));
        &self.zero_alternate[n]
    }

    pub fn weight_additive(&self, n: usize) -> &BigInt {
        assert!((3..=self.n_max).contains(&n));
        &self.weight_additive[n]
    }

    /// `(2^n - W(0)) / 2`.
    pub fn weight_from_zero_value(&self, n: usize) -> BigInt {
        ((BigInt::one() << n) - self.zero_value(n)) >> 1
    }

    /// First `n >= 8` where the two `W(0)` recurrences disagree.
    pub fn alternate_disagreement(&self) -> Option<usize> {
        (8..=self.n_max).find(|&n| self.zero_primary[n] != self.zero_alternate[n])
    }

    /// First `n` where the two weight routes disagree.
    pub fn weight_disagreement(&self) -> Option<usize> {
        (3..=self.n_max).find(|&n| self.weight_from_zero_value(n) != self.weight_additive[n])
    }
}

pub fn f3_zero_value(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::arg(format!("F3 needs n >= 3, got {n}")));
    }
    Ok(F3Sequences::compute(n)?.zero_primary.swap_remove(n))
}

/// Weight and nonlinearity of `F3`. Both nonlinearity conventions equal the
/// weight because `W(0)` is the unique largest coefficient in absolute value.
pub fn f3_weight_and_nonlinearity(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 3 {
        return Err(Error::arg(format!("F3 needs n >= 3, got {n}")));
    }
    let seq = F3Sequences::compute(n)?;
    let weight = seq.weight_from_zero_value(n);
    assert_eq!(&weight, seq.weight_additive(n), "weight routes disagree at n={n}");
    Ok((weight.clone(), weight))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichViolation {
    pub n: usize,
    pub previous: BigInt,
    pub value: BigInt,
}

/// Outcome of checking `W(n-1) <= W(n) <= 2 W(n-1)` over `7..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub n_max: usize,
    pub violations: Vec<SandwichViolation>,
    pub tight_lower: Vec<usize>,
    pub tight_upper: Vec<usize>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_sandwich_bounds(n_max: usize) -> Result<SandwichReport> {
    if n_max < 7 {
        return Err(Error::arg(format!("sandwich bounds start at n = 7, got {n_max}")));
    }
    let seq = F3Sequences::compute(n_max)?;
    Ok(sandwich_from(&seq))
}

pub fn sandwich_from(seq: &F3Sequences) -> SandwichReport {
    let mut report = SandwichReport {
        n_max: seq.n_max,
        violations: Vec::new(),
        tight_lower: Vec::new(),
        tight_upper: Vec::new(),
    };
    for n in 7..=seq.n_max {
        let prev = seq.zero_value(n - 1);
        let cur = seq.zero_value(n);
        let upper: BigInt = prev << 1;
        if cur < prev || cur > &upper {
            report.violations.push(SandwichViolation {
                n,
                previous: prev.clone(),
                value: cur.clone(),
            });
        }
        if cur == prev {
            report.tight_lower.push(n);
        }
        if cur == &upper {
            report.tight_upper.push(n);
        }
    }
    report
}
