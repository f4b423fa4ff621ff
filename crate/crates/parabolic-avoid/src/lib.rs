//! Exact enumeration of permutations avoiding left cosets of maximal
//! parabolic subgroups of the symmetric group.
//!
//! The subgroup `P_{l,m}` of `S_{l+m}` is generated by every simple
//! transposition except `s_l`. The counting sequence of permutations in
//! `S_n` avoiding the coset `σ^a P_{l,m}` has a rational generating
//! function whose denominator is the rook polynomial of an `l × m` board
//! evaluated at `-x`. This crate provides:
//!
//! * brute-force pattern avoidance enumeration ([`perm`]),
//! * exact rational polynomial arithmetic, rook and Laguerre polynomials
//!   ([`poly`]),
//! * the rational and algebraic generating functions with exact
//!   coefficient extraction ([`gf`]),
//! * the fast linear recurrence for the counts, prefix-count oracles, and
//!   exact verifiers for the supporting identities ([`counting`]),
//! * certified growth-rate analysis via rational root isolation
//!   ([`asympt`]),
//! * machine-readable verification sweeps ([`verify`]) and output
//!   formatting ([`output`]).
//!
//! Everything outside [`asympt`]'s reported float midpoints is computed in
//! exact integer/rational arithmetic.

pub mod asympt;
pub mod counting;
pub mod gf;
pub mod output;
pub mod perm;
pub mod poly;
pub mod verify;

use thiserror::Error;

/// Default cap on `n` for brute-force oracles; above it they refuse
/// rather than run for hours. Override with the
/// `PARABOLIC_AVOID_BF_CEILING` environment variable.
pub const BRUTE_FORCE_CEILING: usize = 12;

/// Effective brute-force ceiling, honoring the environment override.
pub fn brute_force_ceiling() -> usize {
    std::env::var("PARABOLIC_AVOID_BF_CEILING")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(BRUTE_FORCE_CEILING)
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation word {0:?}: not a bijection of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("pattern set members must share one length")]
    MixedPatternLengths,
    #[error("invalid avoidance class parameters l={l}, m={m}, a={a}")]
    InvalidClass { l: usize, m: usize, a: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("brute-force ceiling exceeded: n={n} > {ceiling} (set PARABOLIC_AVOID_BF_CEILING to override)")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("denominator has zero constant term; no series expansion at 0")]
    ZeroConstantTerm,
    #[error("square root series requires constant term 1, found {0}")]
    BadSqrtConstantTerm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
