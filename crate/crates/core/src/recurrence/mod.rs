//! Exact evaluation of `F3` quantities far beyond explicit-table sizes.
//!
//! [`eval_subfunction_point`] computes one Walsh coefficient of a sub-function
//! on `n` variables by peeling the top mask bits with the rules in [`cases`];
//! [`eval_f3_point`] composes four of those into a coefficient of `F3`.
//! [`F3Sequences`] produces `W_F3(0)`, the weight and the nonlinearity for
//! every `n` up to a limit.

pub mod cases;
mod checks;
mod engine;
mod mask;
mod sequence;

pub use checks::{
    adjudicate_high_rules, check_subfunction_bound, rule_candidates, AdjudicationReport, AdjudicationWitness,
    BoundReport, BoundRow, CandidateOutcome, RuleCandidate,
};
pub use engine::{
    eval_f3_point, eval_subfamily_point, eval_subfunction_point, reachable_states, seed_tables, EvalKey, SeedTables,
    BASE_THRESHOLD, F3_POINT_MIN_N,
};
pub use mask::{BitMask, Prefix, StructuredMask};
pub use sequence::{
    check_sandwich_bounds, f3_weight_and_nonlinearity, f3_zero_value, sandwich_from, F3Sequences, SandwichReport,
    SandwichViolation,
};
