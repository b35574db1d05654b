use super::cases::{combine_terms, select_rule};
use super::mask::{BitMask, Prefix};
use crate::boolfn::TableCap;
use crate::error::{Error, Result};
use crate::rsbf::{compose_from_top_bits, subfunction, SubFamilyIndex};
use crate::walsh::walsh_spectrum;
use num_bigint::BigInt;
use std::sync::OnceLock;

/// Prefix lengths up to this are answered from explicit spectra.
pub const BASE_THRESHOLD: usize = 8;
const MIN_LEN: usize = 3;
/// Rules reach back at most five positions.
const WINDOW: usize = 6;

/// Memo key: a sub-function on the first `m` mask bits, with bit 0 and/or
/// bit `m-1` flipped relative to the source mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EvalKey {
    pub family: SubFamilyIndex,
    pub m: usize,
    pub flip_low: bool,
    pub flip_top: bool,
}

/// 16 states per length: family x flip_low x flip_top.
#[derive(Clone, Copy, PartialEq, Eq)]
struct State(u8);

impl State {
    fn new(family: SubFamilyIndex, flip_low: bool, flip_top: bool) -> Self {
        State((family.index() as u8) << 2 | (flip_low as u8) << 1 | flip_top as u8)
    }

    fn family(self) -> SubFamilyIndex {
        SubFamilyIndex::ALL[(self.0 >> 2) as usize]
    }

    fn flip_low(self) -> bool {
        self.0 & 2 != 0
    }

    fn flip_top(self) -> bool {
        self.0 & 1 != 0
    }

    fn bit(self) -> u16 {
        1 << self.0
    }

    fn members(set: u16) -> impl Iterator<Item = State> {
        (0..16u8).filter(move |s| set >> s & 1 == 1).map(State)
    }
}

/// Explicit spectra of the four sub-functions at every length `3..=BASE_THRESHOLD`.
pub struct SeedTables {
    spectra: Vec<[Vec<i64>; 4]>,
}

impl SeedTables {
    fn build() -> Self {
        let spectra = (MIN_LEN..=BASE_THRESHOLD)
            .map(|m| {
                SubFamilyIndex::ALL.map(|i| {
                    let table = subfunction(i, m)
                        .and_then(|a| a.to_table(TableCap::default()))
                        .expect("seed sizes are tiny");
                    walsh_spectrum(&table).into_values()
                })
            })
            .collect();
        SeedTables { spectra }
    }

    pub fn get(&self, family: SubFamilyIndex, m: usize, enc: usize) -> i64 {
        self.spectra[m - MIN_LEN][family.index()][enc]
    }
}

pub fn seed_tables() -> &'static SeedTables {
    static SEEDS: OnceLock<SeedTables> = OnceLock::new();
    SEEDS.get_or_init(SeedTables::build)
}

struct Evaluator<'a, M: ?Sized> {
    mask: &'a M,
}

impl<M: BitMask + ?Sized> Evaluator<'_, M> {
    #[inline]
    fn bit(&self, pos: usize, m: usize, s: State) -> bool {
        self.mask.bit(pos) ^ (s.flip_low() && pos == 0) ^ (s.flip_top() && pos == m - 1)
    }

    fn seed(&self, m: usize, s: State) -> i64 {
        let enc = (0..m).fold(0usize, |acc, j| acc | (self.bit(j, m, s) as usize) << j);
        seed_tables().get(s.family(), m, enc)
    }

    fn mark_needed(&self, top: usize, roots: u16) -> Vec<u16> {
        let mut needed = vec![0u16; top + 1];
        needed[top] = roots;
        for m in (BASE_THRESHOLD + 1..=top).rev() {
            for s in State::members(needed[m]) {
                let rule = select_rule(s.family(), |k| self.bit(m - k, m, s));
                for t in rule.terms {
                    let child = State::new(t.family, s.flip_low() ^ t.flip_low, t.flip_top);
                    needed[m - t.shrink] |= child.bit();
                }
            }
        }
        needed
    }

    /// Evaluate every state in `roots` at length `top`. Two passes: mark
    /// reachable states top-down, then fill values bottom-up over a sliding
    /// window, so the work is linear in `top` with no recursion.
    fn run(&self, top: usize, roots: u16) -> [Option<BigInt>; 16] {
        let needed = self.mark_needed(top, roots);
        let mut window: Vec<[Option<BigInt>; 16]> = vec![Default::default(); WINDOW];
        for m in MIN_LEN..=top {
            let mut level: [Option<BigInt>; 16] = Default::default();
            for s in State::members(needed[m]) {
                let value = if m <= BASE_THRESHOLD {
                    BigInt::from(self.seed(m, s))
                } else {
                    let bit_from_top = |k: usize| self.bit(m - k, m, s);
                    let rule = select_rule(s.family(), bit_from_top);
                    combine_terms(rule.terms, bit_from_top, |t| {
                        let child = State::new(t.family, s.flip_low() ^ t.flip_low, t.flip_top);
                        window[(m - t.shrink) % WINDOW][child.0 as usize]
                            .clone()
                            .expect("child state was marked as needed")
                    })
                };
                level[s.0 as usize] = Some(value);
            }
            window[m % WINDOW] = level;
        }
        std::mem::take(&mut window[top % WINDOW])
    }
}

/// Exact `W_{f_i}(c)` for a sub-function on `n = mask.len()` variables, in
/// `O(n)` big-integer operations.
pub fn eval_subfunction_point<M: BitMask + ?Sized>(family: SubFamilyIndex, mask: &M) -> Result<BigInt> {
    let n = mask.len();
    if n < MIN_LEN {
        return Err(Error::arg(format!("sub-functions need n >= {MIN_LEN}, got {n}")));
    }
    let root = State::new(family, false, false);
    let mut out = Evaluator { mask }.run(n, root.bit());
    Ok(out[root.0 as usize].take().expect("root evaluated"))
}

/// Every memo entry a point query for `family` at `mask` touches, longest prefix first.
pub fn reachable_states<M: BitMask + ?Sized>(family: SubFamilyIndex, mask: &M) -> Vec<EvalKey> {
    let n = mask.len();
    let needed = Evaluator { mask }.mark_needed(n, State::new(family, false, false).bit());
    (MIN_LEN..=n)
        .rev()
        .flat_map(|m| {
            State::members(needed[m]).map(move |s| EvalKey {
                family: s.family(),
                m,
                flip_low: s.flip_low(),
                flip_top: s.flip_top(),
            })
        })
        .collect()
}

/// All four sub-function coefficients at the same mask.
pub fn eval_subfamily_point<M: BitMask + ?Sized>(mask: &M) -> Result<[BigInt; 4]> {
    let n = mask.len();
    if n < MIN_LEN {
        return Err(Error::arg(format!("sub-functions need n >= {MIN_LEN}, got {n}")));
    }
    let roots = SubFamilyIndex::ALL.map(|i| State::new(i, false, false));
    let mut out = Evaluator { mask }.run(n, roots.iter().fold(0, |acc, s| acc | s.bit()));
    Ok(roots.map(|s| out[s.0 as usize].take().expect("root evaluated")))
}

/// Smallest `n` accepted by [`eval_f3_point`].
pub const F3_POINT_MIN_N: usize = 5;

/// Exact `W_F3(c)` on `n = mask.len()` variables, composed from the four
/// sub-function coefficients at the first `n - 2` bits.
pub fn eval_f3_point<M: BitMask + ?Sized>(mask: &M) -> Result<BigInt> {
    let n = mask.len();
    if n < F3_POINT_MIN_N {
        return Err(Error::arg(format!(
            "point evaluation of F3 needs n >= {F3_POINT_MIN_N}, got {n}"
        )));
    }
    let sub = eval_subfamily_point(&Prefix::new(mask, n - 2))?;
    Ok(compose_from_top_bits(mask.bit(n - 2), mask.bit(n - 1), sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::LinearMask;
    use crate::recurrence::StructuredMask;
    use crate::rsbf::cubic_rsbf;
    use SubFamilyIndex::*;

    fn mask(n: usize, c: u64) -> LinearMask {
        LinearMask::new(n, c).unwrap()
    }

    #[test]
    fn seed_lookups() {
        assert_eq!(eval_subfunction_point(F0, &mask(6, 21)).unwrap(), BigInt::from(4));
        assert_eq!(eval_subfunction_point(F3, &mask(6, 63)).unwrap(), BigInt::from(20));
        assert_eq!(eval_subfunction_point(F0, &mask(6, 0)).unwrap(), BigInt::from(36));
    }

    #[test]
    fn recursion_matches_spectrum_at_eleven() {
        let cap = TableCap::default();
        for i in SubFamilyIndex::ALL {
            let spec = walsh_spectrum(&subfunction(i, 11).unwrap().to_table(cap).unwrap());
            for c in (0..2048u64).step_by(7) {
                assert_eq!(
                    eval_subfunction_point(i, &mask(11, c)).unwrap(),
                    BigInt::from(spec.get(c)),
                    "{i} c={c}"
                );
            }
        }
    }

    #[test]
    fn f3_point_small_and_zero() {
        assert_eq!(eval_f3_point(&mask(10, 0)).unwrap(), BigInt::from(304));
        assert_eq!(eval_f3_point(&mask(5, 0)).unwrap(), BigInt::from(20));
        assert!(eval_f3_point(&mask(4, 0)).is_err());
        assert!(eval_subfunction_point(F0, &mask(2, 0)).is_err());
        let big = cubic_rsbf(9).unwrap().to_table(TableCap::default()).unwrap();
        let spec = walsh_spectrum(&big);
        for c in 0..512u64 {
            assert_eq!(eval_f3_point(&mask(9, c)).unwrap(), BigInt::from(spec.get(c)));
        }
    }

    #[test]
    fn memo_footprint_is_linear() {
        let mask = StructuredMask::from_fn(400, |i| (i * 7 + 3) % 5 < 2);
        let keys = reachable_states(F2, &mask);
        assert_eq!(
            keys[0],
            EvalKey {
                family: F2,
                m: 400,
                flip_low: false,
                flip_top: false
            }
        );
        assert!(keys.len() <= 16 * 400);
        // Top flips only ever come from the f2 rules.
        assert!(keys.iter().filter(|k| k.flip_top).all(|k| k.family == F2));
    }

    #[test]
    fn structured_zero_matches_dense_zero() {
        let a = eval_f3_point(&StructuredMask::zero(60)).unwrap();
        let b = eval_f3_point(&StructuredMask::from_fn(60, |_| false)).unwrap();
        assert_eq!(a, b);
    }
}
