//! Exact integer combinatorics shared across the crate.
//!
//! Everything here is arbitrary-precision: dimensions of the spaces we
//! count grow like p^c, so no operation is allowed to round or overflow.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Binomial coefficient C(m, k) in the combinatorial convention:
/// zero whenever `m < 0`, `k < 0`, or `k > m`.
pub fn binomial(m: i64, k: i64) -> BigUint {
    if m < 0 || k < 0 || k > m {
        return BigUint::zero();
    }
    // C(m, k) = C(m, m - k); use the smaller k.
    let k = k.min(m - k) as u64;
    let m = m as u64;
    let mut result = BigUint::one();
    for t in 1..=k {
        result = result * BigUint::from(m - k + t) / BigUint::from(t);
    }
    result
}

/// Signed binomial in the polynomial convention:
/// C(s + n, n) = (s+1)(s+2)...(s+n) / n!, which may be negative.
///
/// Used for Euler characteristics chi(O(s)) on projective n-space, where
/// the defining polynomial must be evaluated at negative twists as well.
pub fn binomial_poly(s: i64, n: u64) -> BigInt {
    let mut num = BigInt::one();
    for t in 1..=n as i64 {
        num *= BigInt::from(s + t);
    }
    let mut den = BigInt::one();
    for t in 1..=n {
        den *= BigInt::from(t);
    }
    num / den
}

/// Number of vectors a in [0, bound]^parts with sum(a) = total, by
/// inclusion-exclusion over coordinates forced above the bound:
///
///   sum_j (-1)^j C(parts, j) C(total - j(bound+1) + parts - 1, parts - 1)
pub fn bounded_compositions(parts: u64, bound: u64, total: i64) -> BigUint {
    if total < 0 {
        return BigUint::zero();
    }
    let modulus = bound as i64 + 1;
    let mut acc = BigInt::zero();
    for j in 0..=parts as i64 {
        let inner = binomial(total - j * modulus + parts as i64 - 1, parts as i64 - 1);
        let term = BigInt::from(binomial(parts as i64, j)) * BigInt::from(inner);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative(), "inclusion-exclusion count is a cardinality");
    acc.to_biguint().unwrap_or_default()
}

/// Trial-division primality test. Exact for all u64 inputs.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    if p.is_multiple_of(3) {
        return p == 3;
    }
    let mut d = 5u64;
    while let Some(sq) = d.checked_mul(d) {
        if sq > p {
            break;
        }
        if p.is_multiple_of(d) || p.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// p^e as a big integer.
pub fn big_pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}
