//! Frobenius pushforwards of O(d) on projective n-space by monomial
//! counting, plus the nef/ample threshold scan in the twist d.
//!
//! F_* O(d) is the sum of O(m) with multiplicity the number of monomials
//! in n+1 variables of degree d - pm with every exponent below p. This
//! route is independent of the toric residue algorithm and serves as its
//! cross-check on projective-space fans.

use crate::combinatorics::{bounded_compositions, is_prime};
use crate::verdict::Positivity;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjectiveError {
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error(
        "scan range [{lo}, {hi}] is too small: nef threshold {}, ample threshold {}",
        fmt_found(.found_nef), fmt_found(.found_ample)
    )]
    RangeTooSmall { lo: i64, hi: i64, found_nef: Option<i64>, found_ample: Option<i64> },
}

fn fmt_found(d: &Option<i64>) -> String {
    match d {
        Some(d) => format!("found at d = {d}"),
        None => "not found".to_string(),
    }
}

/// The twist multiset of F_* O(d) on P^n in characteristic p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PnTwistDecomposition {
    pub n: u64,
    pub p: u64,
    pub d: i64,
    /// Twist m -> multiplicity of O(m); total multiplicity is p^n.
    #[serde(serialize_with = "crate::bigjson::twist_map")]
    pub summands: BTreeMap<i64, BigUint>,
}

impl PnTwistDecomposition {
    pub fn total_multiplicity(&self) -> BigUint {
        self.summands.values().sum()
    }

    pub fn min_twist(&self) -> Option<i64> {
        self.summands.keys().next().copied()
    }

    /// Ample iff every twist is >= 1, nef iff every twist is >= 0.
    pub fn positivity(&self) -> Positivity {
        match self.min_twist() {
            Some(m) if m >= 1 => Positivity::Ample,
            Some(m) if m >= 0 => Positivity::NefNotAmple,
            _ => Positivity::NotNef,
        }
    }
}

fn check_params(n: u64, p: u64) -> Result<(), ProjectiveError> {
    if n == 0 {
        return Err(ProjectiveError::ZeroDimension);
    }
    if !is_prime(p) {
        return Err(ProjectiveError::NotPrime(p));
    }
    Ok(())
}

/// Twist multiset of F_* O(d) on P^n: multiplicity of O(m) is the
/// number of exponent vectors in [0, p-1]^(n+1) with sum d - pm.
pub fn fstar_decompose_pn(n: u64, p: u64, d: i64) -> Result<PnTwistDecomposition, ProjectiveError> {
    check_params(n, p)?;
    let parts = n + 1;
    let top = (parts * (p - 1)) as i64;
    // Nonzero multiplicities need 0 <= d - pm <= (n+1)(p-1).
    let lo = Integer::div_ceil(&(d - top), &(p as i64));
    let hi = Integer::div_floor(&d, &(p as i64));
    let mut summands = BTreeMap::new();
    for m in lo..=hi {
        let mult = bounded_compositions(parts, p - 1, d - p as i64 * m);
        if !mult.is_zero() {
            summands.insert(m, mult);
        }
    }
    Ok(PnTwistDecomposition { n, p, d, summands })
}

/// Positivity of F_* O(d) on P^n as a split bundle.
pub fn fstar_positivity(n: u64, p: u64, d: i64) -> Result<Positivity, ProjectiveError> {
    Ok(fstar_decompose_pn(n, p, d)?.positivity())
}

/// Minimal twists in a scanned range at which F_* O(d) becomes nef and
/// ample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdScan {
    pub min_nef_d: i64,
    pub min_ample_d: i64,
}

/// Exhaustively scan d in [lo, hi] for the smallest nef and ample
/// twists. Errors when the range does not contain both thresholds,
/// reporting whatever was found instead of extrapolating.
pub fn threshold_scan(n: u64, p: u64, lo: i64, hi: i64) -> Result<ThresholdScan, ProjectiveError> {
    check_params(n, p)?;
    let mut found_nef = None;
    let mut found_ample = None;
    for d in lo..=hi {
        let positivity = fstar_decompose_pn(n, p, d)?.positivity();
        if found_nef.is_none() && positivity.is_nef() {
            found_nef = Some(d);
        }
        if found_ample.is_none() && positivity.is_ample() {
            found_ample = Some(d);
            break;
        }
    }
    match (found_nef, found_ample) {
        (Some(min_nef_d), Some(min_ample_d)) => Ok(ThresholdScan { min_nef_d, min_ample_d }),
        _ => Err(ProjectiveError::RangeTooSmall { lo, hi, found_nef, found_ample }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::big_pow;
    use num_traits::One;
    use proptest::prelude::*;

    fn twists(n: u64, p: u64, d: i64) -> Vec<(i64, BigUint)> {
        fstar_decompose_pn(n, p, d)
            .unwrap()
            .summands
            .into_iter()
            .collect()
    }

    #[test]
    fn p1_structure_sheaf_at_two() {
        assert_eq!(
            twists(1, 2, 0),
            vec![(-1, BigUint::one()), (0, BigUint::one())]
        );
    }

    #[test]
    fn p1_twist_one_at_two_is_trivial_of_rank_two() {
        assert_eq!(twists(1, 2, 1), vec![(0, BigUint::from(2u32))]);
    }

    #[test]
    fn enumeration_cross_check_small_cases() {
        // Count monomials x^a of degree d - pm with exponents below p
        // directly, for a few (n, p, d).
        for (n, p, d) in [(1u64, 2u64, 0i64), (2, 2, 3), (2, 3, 5), (3, 2, -1), (1, 5, 7)] {
            let parts = (n + 1) as usize;
            let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
            let mut exps = vec![0u64; parts];
            loop {
                let total: u64 = exps.iter().sum();
                let shifted = d - total as i64;
                if shifted % p as i64 == 0 {
                    *counts.entry(shifted / p as i64).or_default() += 1;
                }
                let mut k = 0;
                while k < parts {
                    exps[k] += 1;
                    if exps[k] < p {
                        break;
                    }
                    exps[k] = 0;
                    k += 1;
                }
                if k == parts {
                    break;
                }
            }
            let expected: Vec<(i64, BigUint)> =
                counts.into_iter().map(|(m, c)| (m, BigUint::from(c))).collect();
            assert_eq!(twists(n, p, d), expected, "n={n} p={p} d={d}");
        }
    }

    #[test]
    fn positivity_examples() {
        assert_eq!(fstar_positivity(1, 2, 1).unwrap(), Positivity::NefNotAmple);
        assert_eq!(fstar_positivity(2, 3, 6).unwrap(), Positivity::NefNotAmple);
        // Ample only past (n+1)(p-1) = 6.
        assert_eq!(fstar_positivity(2, 3, 7).unwrap(), Positivity::Ample);
        assert_eq!(fstar_positivity(2, 3, 8).unwrap(), Positivity::Ample);
        assert_eq!(fstar_positivity(1, 2, 0).unwrap(), Positivity::NotNef);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            threshold_scan(1, 3, -2, 10).unwrap(),
            ThresholdScan { min_nef_d: 2, min_ample_d: 5 }
        );
        assert_eq!(threshold_scan(1, 2, -2, 10).unwrap().min_nef_d, 1);
        assert_eq!(threshold_scan(2, 5, -2, 20).unwrap().min_nef_d, 8);
    }

    #[test]
    fn scan_range_too_small_is_reported() {
        let err = threshold_scan(2, 5, -2, 5).unwrap_err();
        assert_eq!(
            err,
            ProjectiveError::RangeTooSmall { lo: -2, hi: 5, found_nef: None, found_ample: None }
        );
        let err = threshold_scan(2, 5, -2, 10).unwrap_err();
        assert!(matches!(
            err,
            ProjectiveError::RangeTooSmall { found_nef: Some(8), found_ample: None, .. }
        ));
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(fstar_decompose_pn(0, 2, 0), Err(ProjectiveError::ZeroDimension));
        assert_eq!(fstar_decompose_pn(1, 9, 0), Err(ProjectiveError::NotPrime(9)));
    }

    proptest! {
        #[test]
        fn total_multiplicity_is_p_to_the_n(
            n in 1u64..=4,
            p in prop::sample::select(vec![2u64, 3, 5]),
            d in -12i64..=25,
        ) {
            let decomposition = fstar_decompose_pn(n, p, d).unwrap();
            prop_assert_eq!(decomposition.total_multiplicity(), big_pow(p, n));
        }

        #[test]
        fn duality_negates_the_twist_multiset(
            n in 1u64..=3,
            p in prop::sample::select(vec![2u64, 3, 5]),
            d in -8i64..=18,
        ) {
            let here = fstar_decompose_pn(n, p, d).unwrap();
            let dual_d = (n as i64 + 1) * (p as i64 - 1) - d;
            let there = fstar_decompose_pn(n, p, dual_d).unwrap();
            let negated: BTreeMap<i64, BigUint> =
                here.summands.iter().map(|(&m, mult)| (-m, mult.clone())).collect();
            prop_assert_eq!(negated, there.summands);
        }

        #[test]
        fn min_twist_is_monotone_in_d(
            n in 1u64..=3,
            p in prop::sample::select(vec![2u64, 3, 5]),
            d in -10i64..=20,
        ) {
            let lower = fstar_decompose_pn(n, p, d).unwrap().min_twist().unwrap();
            let upper = fstar_decompose_pn(n, p, d + 1).unwrap().min_twist().unwrap();
            prop_assert!(lower <= upper);
        }
    }
}
