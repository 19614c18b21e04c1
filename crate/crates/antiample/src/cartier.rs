//! Rank bookkeeping for the Cartier complex on a smooth n-fold in
//! characteristic p.
//!
//! Inside the pushforward F_* of the de Rham complex sit the subsheaves
//! of closed forms Z^i (kernel of F_* d) and exact forms B^i (image of
//! F_* d). Two short exact sequences tie their ranks together:
//!
//!   0 -> B^i -> Z^i -> Omega^i -> 0
//!   0 -> Z^i -> F_* Omega^i -> B^(i+1) -> 0
//!
//! Starting from rank B^0 = 0, those two relations determine every rank
//! in the table; this module generates the unique solution by forward
//! recursion and provides an independent consistency predicate. The
//! i = 1 row recovers the Frobenius cokernel, of rank p^n - 1.

use crate::combinatorics::{big_pow, binomial, is_prime};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartierError {
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

/// Ranks of the three sheaves in cohomological degree i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartierRow {
    /// rank F_* Omega^i = p^n C(n, i)
    #[serde(serialize_with = "crate::bigjson::biguint")]
    pub pushforward_forms: BigUint,
    /// rank Z^i (closed forms)
    #[serde(serialize_with = "crate::bigjson::biguint")]
    pub closed_forms: BigUint,
    /// rank B^i (exact forms); B^1 is the Frobenius cokernel
    #[serde(serialize_with = "crate::bigjson::biguint")]
    pub exact_forms: BigUint,
}

/// Full rank table for degrees i = 0 .. n+1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartierRankTable {
    pub n: u64,
    pub p: u64,
    pub rows: Vec<CartierRow>,
}

impl CartierRankTable {
    /// Rank of the Frobenius cokernel B^1, i.e. p^n - 1.
    pub fn frobenius_cokernel_rank(&self) -> &BigUint {
        &self.rows[1].exact_forms
    }
}

/// Generate the rank table by forward recursion from B^0 = 0:
///
///   Z^i = B^i + C(n, i),   B^(i+1) = p^n C(n, i) - Z^i.
pub fn cartier_rank_table(n: u64, p: u64) -> Result<CartierRankTable, CartierError> {
    if n == 0 {
        return Err(CartierError::ZeroDimension);
    }
    if !is_prime(p) {
        return Err(CartierError::NotPrime(p));
    }
    let pn = big_pow(p, n);
    let mut rows = Vec::with_capacity(n as usize + 2);
    let mut exact = BigUint::zero();
    for i in 0..=n + 1 {
        let forms = binomial(n as i64, i as i64);
        let pushforward_forms = &pn * &forms;
        let closed_forms = &exact + &forms;
        let next_exact = &pushforward_forms - &closed_forms;
        rows.push(CartierRow { pushforward_forms, closed_forms, exact_forms: exact });
        exact = next_exact;
    }
    Ok(CartierRankTable { n, p, rows })
}

/// Check every rank relation on an arbitrary table: row count, the
/// pushforward ranks p^n C(n, i), both exact-sequence identities
/// (term by term, so the alternating sums agree automatically), and the
/// boundary conditions B^0 = B^(n+1) = 0.
pub fn verify_cartier_consistency(table: &CartierRankTable) -> bool {
    let n = table.n;
    if table.rows.len() != n as usize + 2 {
        return false;
    }
    let pn = big_pow(table.p, n);
    for (i, row) in table.rows.iter().enumerate() {
        let forms = binomial(n as i64, i as i64);
        if row.pushforward_forms != &pn * &forms {
            return false;
        }
        // First sequence: Z^i = B^i + rank Omega^i.
        if row.closed_forms != &row.exact_forms + &forms {
            return false;
        }
        // Second sequence: F_* Omega^i = Z^i + B^(i+1).
        if let Some(next) = table.rows.get(i + 1) {
            if row.pushforward_forms != &row.closed_forms + &next.exact_forms {
                return false;
            }
        }
    }
    table.rows[0].exact_forms.is_zero() && table.rows[n as usize + 1].exact_forms.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn curve_in_characteristic_two() {
        let table = cartier_rank_table(1, 2).unwrap();
        assert_eq!(table.frobenius_cokernel_rank(), &BigUint::one());
        assert_eq!(table.rows[0].closed_forms, BigUint::one());
        assert_eq!(table.rows[0].pushforward_forms, BigUint::from(2u32));
    }

    #[test]
    fn threefold_cokernel_rank() {
        let table = cartier_rank_table(3, 3).unwrap();
        assert_eq!(table.frobenius_cokernel_rank(), &BigUint::from(26u32));
    }

    #[test]
    fn exact_forms_vanish_past_top_degree() {
        let table = cartier_rank_table(2, 2).unwrap();
        assert_eq!(table.rows[3].exact_forms, BigUint::zero());
        assert_eq!(table.rows[3].pushforward_forms, BigUint::zero());
    }

    #[test]
    fn rejects_dimension_zero_and_composite_p() {
        assert_eq!(cartier_rank_table(0, 2), Err(CartierError::ZeroDimension));
        assert_eq!(cartier_rank_table(2, 6), Err(CartierError::NotPrime(6)));
    }

    #[test]
    fn generated_tables_are_consistent() {
        assert!(verify_cartier_consistency(&cartier_rank_table(2, 3).unwrap()));
    }

    #[test]
    fn perturbed_table_fails_consistency() {
        let mut table = cartier_rank_table(3, 2).unwrap();
        table.rows[1].exact_forms -= BigUint::one();
        assert!(!verify_cartier_consistency(&table));
    }

    #[test]
    fn consistency_on_the_full_grid() {
        for n in 1..=5 {
            for p in [2, 3, 5, 7] {
                let table = cartier_rank_table(n, p).unwrap();
                assert!(verify_cartier_consistency(&table), "n={n} p={p}");
                assert_eq!(
                    table.frobenius_cokernel_rank(),
                    &(big_pow(p, n) - BigUint::one()),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn top_ranks_match_the_recursion_endpoint() {
        // Z^n must absorb all of F_* Omega^n, forcing B^n = p^n - 1.
        let table = cartier_rank_table(4, 3).unwrap();
        let pn = big_pow(3, 4);
        assert_eq!(table.rows[4].closed_forms, pn);
        assert_eq!(table.rows[4].exact_forms, &pn - BigUint::one());
    }
}
