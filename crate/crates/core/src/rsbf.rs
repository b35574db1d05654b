//! Rotation-symmetric function families and the machinery around them.
//!
//! `F3` on `n` variables is the XOR of all cyclic shifts of `x0 x1 x2`.
//! Fixing its top two inputs splits it into four functions on `n - 2`
//! variables built on the non-wrapping triple sum
//! `t_n = sum_{i <= n-3} x_i x_{i+1} x_{i+2}`:
//!
//! | index | function |
//! |-------|----------|
//! | `F0`  | `t_n` |
//! | `F1`  | `t_n + x0 x1` |
//! | `F2`  | `t_n + x_{n-2} x_{n-1}` |
//! | `F3`  | `t_n + x0 x1 + x_{n-2} x_{n-1} + x0 + x_{n-1}` |
//!
//! and `W_F3(c)` is a signed sum of their coefficients at the low `n - 2`
//! bits of `c` (see [`compose_f3_point`]).

use crate::boolfn::{AnfForm, BooleanFunction, LinearMask, Monomial, TableCap};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Index, Neg};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubFamilyIndex {
    F0,
    F1,
    F2,
    F3,
}

impl SubFamilyIndex {
    pub const ALL: [SubFamilyIndex; 4] = [Self::F0, Self::F1, Self::F2, Self::F3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::F0 => "f0",
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F3 => "f3",
        }
    }
}

impl fmt::Display for SubFamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SubFamilyIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f0" | "0" => Ok(Self::F0),
            "f1" | "1" => Ok(Self::F1),
            "f2" | "2" => Ok(Self::F2),
            "f3" | "3" => Ok(Self::F3),
            _ => Err(Error::Parse(format!("unknown sub-function {s:?}, expected f0..f3"))),
        }
    }
}

/// The four sub-functions on a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubFamily {
    members: [AnfForm; 4],
}

impl SubFamily {
    pub fn get(&self, i: SubFamilyIndex) -> &AnfForm {
        &self.members[i.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubFamilyIndex, &AnfForm)> {
        SubFamilyIndex::ALL.into_iter().zip(self.members.iter())
    }
}

impl Index<SubFamilyIndex> for SubFamily {
    type Output = AnfForm;

    fn index(&self, i: SubFamilyIndex) -> &AnfForm {
        self.get(i)
    }
}

/// XOR of the `n` cyclic shifts of `base`. Shifts that coincide cancel in pairs.
pub fn generate_rsbf(n: usize, base: &[usize]) -> Result<AnfForm> {
    if base.is_empty() {
        return Err(Error::arg("base monomial must be non-empty"));
    }
    let top = *base.iter().max().unwrap();
    if n < top + 1 {
        return Err(Error::arg(format!("base monomial uses x{top}, needs n >= {}", top + 1)));
    }
    let mut anf = AnfForm::zero(n);
    for shift in 0..n {
        let vars = base.iter().map(|&v| (v + shift) % n).collect::<Vec<_>>();
        anf.toggle(Monomial::new(vars))?;
    }
    Ok(anf)
}

/// `F3 = sum_i x_i x_{i+1} x_{i+2}` with indices mod `n`.
pub fn cubic_rsbf(n: usize) -> Result<AnfForm> {
    if n < 3 {
        return Err(Error::arg(format!("cubic rotation family needs n >= 3, got {n}")));
    }
    generate_rsbf(n, &[0, 1, 2])
}

/// `F2 = sum_i x_i x_{i+s}` with indices mod `n`.
pub fn quadratic_rsbf(n: usize, stride: usize) -> Result<AnfForm> {
    if n < 2 {
        return Err(Error::arg(format!("quadratic rotation family needs n >= 2, got {n}")));
    }
    if stride.is_multiple_of(n) {
        return Err(Error::arg(format!("stride {stride} is 0 mod {n}")));
    }
    generate_rsbf(n, &[0, stride % n])
}

fn triple_sum(n: usize) -> AnfForm {
    AnfForm::from_monomials(n, (0..n - 2).map(|i| [i, i + 1, i + 2])).expect("indices below n")
}

pub fn subfunction(i: SubFamilyIndex, n: usize) -> Result<AnfForm> {
    if n < 3 {
        return Err(Error::arg(format!("sub-functions need n >= 3, got {n}")));
    }
    let mut anf = triple_sum(n);
    let extra: &[Vec<usize>] = match i {
        SubFamilyIndex::F0 => &[],
        SubFamilyIndex::F1 => &[vec![0, 1]],
        SubFamilyIndex::F2 => &[vec![n - 2, n - 1]],
        SubFamilyIndex::F3 => &[vec![0, 1], vec![n - 2, n - 1], vec![0], vec![n - 1]],
    };
    for m in extra {
        anf.toggle(Monomial::new(m.clone()))?;
    }
    Ok(anf)
}

pub fn subfunction_family(n: usize) -> Result<SubFamily> {
    Ok(SubFamily {
        members: [
            subfunction(SubFamilyIndex::F0, n)?,
            subfunction(SubFamilyIndex::F1, n)?,
            subfunction(SubFamilyIndex::F2, n)?,
            subfunction(SubFamilyIndex::F3, n)?,
        ],
    })
}

/// Signed combination of the four sub-function coefficients at the prefix,
/// given the top two mask bits `(c_{n-2}, c_{n-1})`.
pub(crate) fn compose_from_top_bits<T>(c_second: bool, c_top: bool, sub: [T; 4]) -> T
where
    T: Add<Output = T> + Neg<Output = T>,
{
    let [w0, w1, w2, w3] = sub;
    let signed = |v: T, neg: bool| if neg { -v } else { v };
    w0 + signed(w2, c_second) + signed(w1, c_top) + signed(w3, c_second ^ c_top)
}

/// `W_F3(c) = W_f0(c') + (-1)^{c_{n-2}} W_f2(c') + (-1)^{c_{n-1}} W_f1(c')
/// + (-1)^{c_{n-2}+c_{n-1}} W_f3(c')` where `c'` is the low `n - 2` bits of `c`.
///
/// `sub_values` is indexed by [`SubFamilyIndex`], i.e. `[W_f0, W_f1, W_f2, W_f3]`.
pub fn compose_f3_point<T>(n: usize, c: &LinearMask, sub_values: [T; 4]) -> Result<T>
where
    T: Add<Output = T> + Neg<Output = T>,
{
    if n < 5 {
        return Err(Error::arg(format!("composition needs n >= 5, got {n}")));
    }
    if c.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: c.n() });
    }
    Ok(compose_from_top_bits(c.bit(n - 2), c.bit(n - 1), sub_values))
}

/// One canonical mask per rotation class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    n: usize,
    /// Minimum encoding within each class, ascending.
    representatives: Vec<u32>,
    orbit_sizes: Vec<u8>,
}

impl OrbitSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    pub fn orbit_sizes(&self) -> &[u8] {
        &self.orbit_sizes
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u8)> + '_ {
        self.representatives
            .iter()
            .copied()
            .zip(self.orbit_sizes.iter().copied())
    }
}

/// Binary necklaces by the Fredricksen-Kessler-Maiorana recursion.
///
/// Reading a mask from `c_{n-1}` down to `c_0` turns its encoding into a
/// big-endian string, and rotations of the mask into rotations of the string,
/// so the lexicographically least rotation is the least encoding. The
/// algorithm emits those strings in lexicographic order with their period.
pub fn orbit_representatives(n: usize) -> Result<OrbitSet> {
    if !(1..=30).contains(&n) {
        return Err(Error::arg(format!("orbit enumeration supports 1..=30 bits, got {n}")));
    }
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut a = vec![0u8; n + 1];
    reps.push(0);
    sizes.push(1);
    loop {
        let mut i = n;
        while i > 0 && a[i] == 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        a[i] = 1;
        for j in i + 1..=n {
            a[j] = a[j - i];
        }
        if n.is_multiple_of(i) {
            let enc = a[1..].iter().fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
            reps.push(enc);
            sizes.push(i as u8);
        }
    }
    Ok(OrbitSet {
        n,
        representatives: reps,
        orbit_sizes: sizes,
    })
}

/// Brute-force `sum_{x : x_{n-1} = 1} (-1)^(f_i(x) + c.x)` from an explicit table.
///
/// This is the upper half of the coefficient sum when `c_{n-1} = 1`; it is
/// computed without reference to any recurrence and serves as ground truth for
/// the high-bit case rules.
pub struct RestrictedSumOracle {
    family: SubFamilyIndex,
    table: BooleanFunction,
}

impl RestrictedSumOracle {
    pub const MIN_N: usize = 8;

    pub fn new(family: SubFamilyIndex, n: usize, cap: TableCap) -> Result<Self> {
        if n < Self::MIN_N {
            return Err(Error::arg(format!(
                "restricted-sum oracle needs n >= {}, got {n}",
                Self::MIN_N
            )));
        }
        let table = subfunction(family, n)?.to_table(cap)?;
        Ok(RestrictedSumOracle { family, table })
    }

    pub fn family(&self) -> SubFamilyIndex {
        self.family
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn eval(&self, c: &LinearMask) -> Result<i64> {
        let n = self.table.n();
        if c.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: c.n() });
        }
        if !c.bit(n - 1) {
            return Err(Error::arg("restricted-sum oracle requires c_{n-1} = 1"));
        }
        let top = 1u64 << (n - 1);
        let mut sum = 0i64;
        for x in top..2 * top {
            if self.table.get(x) ^ c.dot(x) {
                sum -= 1;
            } else {
                sum += 1;
            }
        }
        Ok(sum)
    }
}

pub fn restricted_sum_oracle(i: SubFamilyIndex, n: usize, c: &LinearMask) -> Result<i64> {
    RestrictedSumOracle::new(i, n, TableCap::default())?.eval(c)
}
