//! Exact counting of non-negative integer solutions of `a·x + b·y + c·z = n`.
//!
//! The crate provides, entirely in exact arithmetic:
//!
//! - [`arith`]: overflow-safe kernels — extended gcd, modular inverses with
//!   the `1..=m` representative convention, logarithmic-time floor sums,
//!   sawtooth sums, and integer square roots;
//! - [`counting`]: the closed-form counter for pairwise-coprime coefficients,
//!   an equivalent sawtooth-form evaluator, the two-variable counter, the
//!   reduction of an arbitrary `gcd(a,b,c) = 1` triple to a pairwise-coprime
//!   one, a total dispatcher for any coefficients, and enumeration oracles;
//! - [`bounds`]: strict two-sided bounds on the count, as exact rationals and
//!   as the tightest integer envelope;
//! - [`rk`]: the inverse problem — for large `k`, which targets `n` have
//!   exactly `k` representations — with the max/min/cardinality/sum
//!   statistics in the pairwise-coprime, `gcd = 1`, and arbitrary-gcd
//!   regimes;
//! - [`conjecture`]: boundary solution profiles (`x = 0`, `y = 0`, `z = 0`),
//!   the `3·C(N̂,3)` counting consequence of the boundary-decomposition
//!   conjecture, per-solution decomposition search, and a full
//!   counterexample report.
//!
//! All scalar quantities ride on checked 128-bit arithmetic and escalate to
//! arbitrary precision on overflow; no floating point is used anywhere.

pub mod arith;
pub mod bounds;
pub mod conjecture;
pub mod counting;
pub mod error;
pub mod rk;
mod scalar;

pub use arith::{ext_gcd, floor_sum, isqrt, mod_inverse, residue_rep, sawtooth_sum};
pub use bounds::{count_bounds, BoundInterval};
pub use conjecture::{
    boundary_profile, check_counterexample, check_counterexample_with_audit, consequence_bound,
    decomposition_search, decomposition_search_capped, enumerate_solutions, BoundaryProfile,
    CounterexampleReport, DecompositionAudit, DecompositionOutcome, Solution, DEFAULT_SEARCH_CAP,
};
pub use counting::{
    brute_force_count, brute_force_count_capped, count, count_pairwise_coprime, count_sawtooth,
    count_two_var, reduce_instance, residue_params, CoinTriple, ReducedInstance, ResidueSystem,
    BRUTE_FORCE_CAP,
};
pub use error::{Error, Result};
pub use rk::{
    brute_force_rk, classify, delta_k, gamma_k, rk_general, rk_pairwise, rk_scan_limit, rk_setwise,
    threshold_m, AlphaBeta, Category, CategoryReason, CategoryTag, Regime, RkResult,
    ThresholdVariant,
};

// Re-export the backing numeric types so downstream code does not need to
// name the num-* crates explicitly.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
