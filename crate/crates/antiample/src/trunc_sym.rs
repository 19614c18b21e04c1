//! Truncated symmetric powers and the conormal filtration they grade.
//!
//! For a rank-`c` vector space V in characteristic p, the l-th truncated
//! symmetric power T^l(V) is the quotient of Sym^l(V) by all monomials
//! with an exponent >= p. Its dimension is the number of exponent
//! vectors in [0, p-1]^c with coordinate sum l, so everything in this
//! module reduces to exact bounded-composition counts.
//!
//! The same counts give the graded ranks of the ideal-adic filtration on
//! I/I^[p] for a smooth codimension-c center inside a smooth n-fold: the
//! i-th graded piece is T^(i+1) of the conormal bundle, the top piece is
//! a line (the (p-1)-st power of the determinant), and the pushforward
//! of the whole module has rank p^n - p^(n-c).

use crate::combinatorics::{big_pow, bounded_compositions, is_prime};
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TruncError {
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("rank c must be at least 1")]
    ZeroRank,
    #[error("ambient dimension {n} is smaller than the codimension {c}")]
    AmbientTooSmall { c: u64, n: u64 },
}

/// Validated parameters (c, p, l) for a truncated power T^l of a
/// rank-c space in characteristic p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruncParams {
    c: u64,
    p: u64,
    l: u64,
}

impl TruncParams {
    /// Rejects non-prime p and c = 0; any l >= 0 is allowed (powers past
    /// c(p-1) are zero-dimensional, not invalid).
    pub fn new(c: u64, p: u64, l: u64) -> Result<Self, TruncError> {
        if c == 0 {
            return Err(TruncError::ZeroRank);
        }
        if !is_prime(p) {
            return Err(TruncError::NotPrime(p));
        }
        Ok(TruncParams { c, p, l })
    }

    pub fn rank(&self) -> u64 {
        self.c
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn power(&self) -> u64 {
        self.l
    }

    /// Largest l with T^l nonzero, namely c(p-1).
    pub fn top_power(&self) -> u64 {
        self.c * (self.p - 1)
    }
}

/// A monomial exponent vector: c entries in [0, p-1].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExponentVector(pub Vec<u64>);

impl ExponentVector {
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// dim T^l(V) for V of rank c in characteristic p: the number of
/// exponent vectors in [0, p-1]^c with sum l, computed by
/// inclusion-exclusion rather than enumeration.
pub fn trunc_dim(params: &TruncParams) -> BigUint {
    bounded_compositions(params.c, params.p - 1, params.l as i64)
}

/// All exponent vectors in [0, p-1]^c with sum l, in lexicographic
/// order. The length always equals [`trunc_dim`]; intended for small
/// parameters, since the count grows like p^c.
pub fn enumerate_basis(params: &TruncParams) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(params.c as usize);
    extend_basis(params.c, params.p - 1, params.l as i64, &mut current, &mut out);
    out
}

fn extend_basis(
    remaining: u64,
    bound: u64,
    target: i64,
    current: &mut Vec<u64>,
    out: &mut Vec<ExponentVector>,
) {
    if target < 0 {
        return;
    }
    if remaining == 0 {
        if target == 0 {
            out.push(ExponentVector(current.clone()));
        }
        return;
    }
    // Remaining coordinates cannot exceed remaining * bound.
    if target > (remaining * bound) as i64 {
        return;
    }
    for a in 0..=bound {
        current.push(a);
        extend_basis(remaining - 1, bound, target - a as i64, current, out);
        current.pop();
    }
}

/// Graded ranks of the I-adic filtration on I/I^[p] for a smooth
/// codimension-c center, plus the rank of its Frobenius pushforward when
/// the ambient dimension is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationRankTable {
    /// Entry i is the rank of the i-th graded quotient, i.e. dim T^(i+1)
    /// of the conormal bundle, for i = 0 .. c(p-1)-1.
    #[serde(serialize_with = "crate::bigjson::biguint_vec")]
    pub graded_ranks: Vec<BigUint>,
    /// Rank of I/I^[p] itself: p^c - 1.
    #[serde(serialize_with = "crate::bigjson::biguint")]
    pub total_rank: BigUint,
    /// Rank p^n - p^(n-c) of the pushforward, when n was supplied.
    #[serde(serialize_with = "crate::bigjson::biguint_opt")]
    pub pushforward_rank: Option<BigUint>,
}

/// Ranks of the filtration on I/I^[p]. `ambient_dim`, when given, must
/// be at least c and yields the pushforward rank as well.
pub fn filtration_ranks(
    c: u64,
    p: u64,
    ambient_dim: Option<u64>,
) -> Result<FiltrationRankTable, TruncError> {
    let base = TruncParams::new(c, p, 0)?;
    if let Some(n) = ambient_dim {
        if n < c {
            return Err(TruncError::AmbientTooSmall { c, n });
        }
    }
    let graded_ranks: Vec<BigUint> = (1..=base.top_power())
        .map(|l| trunc_dim(&TruncParams { l, ..base }))
        .collect();
    let total_rank = big_pow(p, c) - BigUint::one();
    let pushforward_rank = ambient_dim.map(|n| big_pow(p, n) - big_pow(p, n - c));
    Ok(FiltrationRankTable { graded_ranks, total_rank, pushforward_rank })
}
