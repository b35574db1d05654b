//! Analysis toolkit for rotation-symmetric Boolean functions.
//!
//! The crate covers explicit truth tables and their algebraic normal form
//! ([`boolfn`]), exact Walsh spectra and nonlinearity ([`walsh`]), generators
//! and decompositions for the cubic rotation-symmetric family `F3` and its
//! four sub-functions ([`rsbf`]), and an exact big-integer evaluator that
//! computes single Walsh coefficients of `F3` in `O(n)` arithmetic operations
//! ([`recurrence`]).
//!
//! Bit conventions are little-endian throughout: variable `x_i` is bit `i` of
//! a truth-table index, and mask coordinate `c_i` is bit `i` of the mask's
//! integer encoding.

pub mod boolfn;
mod error;
pub mod recurrence;
pub mod reference;
pub mod rsbf;
pub mod walsh;

pub use boolfn::{AnfForm, BooleanFunction, FunctionFile, LinearMask, Monomial, TableCap};
pub use error::{Error, Result};
pub use recurrence::{BitMask, StructuredMask};
pub use rsbf::{OrbitSet, SubFamilyIndex};
pub use walsh::{NonlinearityReport, WalshSpectrum};
