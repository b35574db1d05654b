use super::{BooleanFunction, TableCap};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A product of distinct variables, kept sorted. The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    /// Duplicate indices collapse since `x * x = x`.
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        Monomial(vars)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn table_index(&self) -> u64 {
        self.0.iter().fold(0, |acc, &v| acc | (1u64 << v))
    }
}

impl From<&[usize]> for Monomial {
    fn from(vars: &[usize]) -> Self {
        Monomial::new(vars.to_vec())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for v in &self.0 {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// Algebraic normal form: an XOR of monomials over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnfForm {
    n: usize,
    monomials: BTreeSet<Monomial>,
}

impl AnfForm {
    /// The zero function.
    pub fn zero(n: usize) -> Self {
        AnfForm {
            n,
            monomials: BTreeSet::new(),
        }
    }

    /// XOR-accumulates the given monomials; equal pairs cancel.
    pub fn from_monomials<I, M>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: Into<Monomial>,
    {
        let mut out = Self::zero(n);
        for m in monomials {
            out.toggle(m.into())?;
        }
        Ok(out)
    }

    /// Add `m` modulo 2.
    pub fn toggle(&mut self, m: Monomial) -> Result<()> {
        if let Some(&v) = m.vars().iter().find(|&&v| v >= self.n) {
            return Err(Error::arg(format!("variable x{v} out of range for n={}", self.n)));
        }
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, vars: &[usize]) -> bool {
        self.monomials.contains(&Monomial::from(vars))
    }

    /// `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.monomials.iter().map(Monomial::degree).max()
    }

    pub fn to_table(&self, cap: TableCap) -> Result<BooleanFunction> {
        anf_to_table(self, cap)
    }
}

impl From<Vec<usize>> for Monomial {
    fn from(vars: Vec<usize>) -> Self {
        Monomial::new(vars)
    }
}

impl<const K: usize> From<[usize; K]> for Monomial {
    fn from(vars: [usize; K]) -> Self {
        Monomial::new(vars.to_vec())
    }
}

impl fmt::Display for AnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Binary Moebius transform over the packed table, in place. It is an
/// involution and maps ANF coefficient vectors to truth tables and back.
fn moebius_in_place(words: &mut [u64], n: usize) {
    const LOW: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    for (i, &low) in LOW.iter().enumerate().take(n.min(6)) {
        let shift = 1u32 << i;
        for w in words.iter_mut() {
            *w ^= (*w & low) << shift;
        }
    }
    for i in 6..n {
        let stride = 1usize << (i - 6);
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

pub fn anf_to_table(anf: &AnfForm, cap: TableCap) -> Result<BooleanFunction> {
    let mut coeffs = BooleanFunction::zero(anf.n, cap)?;
    for m in &anf.monomials {
        let idx = m.table_index();
        coeffs.words[(idx >> 6) as usize] ^= 1 << (idx & 63);
    }
    moebius_in_place(&mut coeffs.words, anf.n);
    Ok(coeffs)
}

pub fn table_to_anf(f: &BooleanFunction) -> AnfForm {
    let mut words = f.words.clone();
    moebius_in_place(&mut words, f.n);
    let mut monomials = BTreeSet::new();
    for (wi, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            let idx = (wi << 6) | b;
            let vars = (0..f.n).filter(|v| (idx >> v) & 1 == 1).collect();
            monomials.insert(Monomial(vars));
        }
    }
    AnfForm { n: f.n, monomials }
}
