//! Frobenius pushforwards of line bundles on smooth complete toric
//! varieties, and the ampleness decision procedures built on them.
//!
//! F_* O(D) splits as a direct sum of p^dim line bundles, one per
//! residue class of the character lattice mod p. With the residue box
//! {0..p-1}^dim fixed as representatives, the summand attached to u has
//! ray coefficients floor((a_v + <u, v>) / p), floor taken toward
//! negative infinity. The Frobenius cokernel drops the single trivial
//! summand coming from u = 0, and dual-ampleness of the cokernel reduces
//! to an ample test on the negation of each remaining summand.

use super::fan::{Fan, ToricDivisor, ToricError};
use super::positivity::{divisor_positivity, PositivityVerdict};
use crate::combinatorics::is_prime;
use crate::verdict::{Ampleness, Positivity, TraceStep, Verdict};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeMap;

/// Largest number of residue classes a decomposition may enumerate.
/// p^dim beyond this is refused rather than silently ground through.
pub const MAX_SUMMANDS: u64 = 1 << 21;

/// A multiset of toric divisors with multiplicities: the summands of a
/// split vector bundle. Iteration order is the lexicographic order of
/// the coefficient vectors, so output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LineBundleDecomposition {
    summands: BTreeMap<ToricDivisor, u64>,
}

impl LineBundleDecomposition {
    pub fn insert(&mut self, divisor: ToricDivisor) {
        *self.summands.entry(divisor).or_insert(0) += 1;
    }

    /// Remove one copy of `divisor`; false if it was not present.
    pub fn remove_one(&mut self, divisor: &ToricDivisor) -> bool {
        match self.summands.get_mut(divisor) {
            Some(mult) if *mult > 1 => {
                *mult -= 1;
                true
            }
            Some(_) => {
                self.summands.remove(divisor);
                true
            }
            None => false,
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ToricDivisor, u64)> {
        self.summands.iter().map(|(d, &m)| (d, m))
    }

    pub fn multiplicity(&self, divisor: &ToricDivisor) -> u64 {
        self.summands.get(divisor).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

impl FromIterator<ToricDivisor> for LineBundleDecomposition {
    fn from_iter<T: IntoIterator<Item = ToricDivisor>>(iter: T) -> Self {
        let mut out = LineBundleDecomposition::default();
        for d in iter {
            out.insert(d);
        }
        out
    }
}

fn check_prime(p: u64) -> Result<(), ToricError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(ToricError::NotPrime(p))
    }
}

/// Decompose F_* O(D) into line bundle summands, one per residue class
/// u in {0..p-1}^dim.
pub fn frobenius_pushforward(
    fan: &Fan,
    divisor: &ToricDivisor,
    p: u64,
) -> Result<LineBundleDecomposition, ToricError> {
    fan.require_valid()?;
    fan.check_divisor(divisor)?;
    check_prime(p)?;
    let residues = BigInt::from(p).pow(fan.dim as u32);
    if residues > BigInt::from(MAX_SUMMANDS) {
        return Err(ToricError::DecompositionTooLarge {
            residues: residues.to_string(),
            limit: MAX_SUMMANDS,
        });
    }
    let big_p = BigInt::from(p);
    let mut decomposition = LineBundleDecomposition::default();
    let mut residue = vec![0u64; fan.dim];
    loop {
        let coeffs = fan
            .rays
            .iter()
            .zip(&divisor.coeffs)
            .map(|(ray, &a)| {
                let pairing: BigInt = residue
                    .iter()
                    .zip(ray)
                    .map(|(&u, &v)| BigInt::from(u) * BigInt::from(v))
                    .sum();
                let shifted = BigInt::from(a) + pairing;
                shifted.div_floor(&big_p).to_i64().ok_or_else(|| {
                    ToricError::Internal("summand coefficient overflows i64".into())
                })
            })
            .collect::<Result<Vec<i64>, ToricError>>()?;
        decomposition.insert(ToricDivisor::new(coeffs));
        // Odometer over the residue box.
        let mut k = 0;
        while k < residue.len() {
            residue[k] += 1;
            if residue[k] < p {
                break;
            }
            residue[k] = 0;
            k += 1;
        }
        if k == residue.len() {
            break;
        }
    }
    Ok(decomposition)
}

/// Summands of the Frobenius cokernel: F_* O minus its trivial summand.
pub fn frobenius_cokernel(fan: &Fan, p: u64) -> Result<LineBundleDecomposition, ToricError> {
    let zero = ToricDivisor::zero(fan.num_rays());
    let mut decomposition = frobenius_pushforward(fan, &zero, p)?;
    if !decomposition.remove_one(&zero) {
        // The u = 0 residue always contributes the zero divisor.
        return Err(ToricError::Internal(
            "pushforward of the structure sheaf lost its trivial summand".into(),
        ));
    }
    Ok(decomposition)
}

/// A cokernel summand that blocks the requested positivity, with the
/// positivity verdict that rejected it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandWitness {
    pub summand: ToricDivisor,
    pub multiplicity: u64,
    pub verdict: PositivityVerdict,
}

/// Verdict for a bundle-level ampleness question on a toric variety,
/// always decidable: `value` is never `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CokernelVerdict {
    pub value: Ampleness,
    pub witness: Option<SummandWitness>,
    pub trace: Vec<TraceStep>,
}

impl CokernelVerdict {
    pub fn as_verdict(&self) -> Verdict {
        Verdict::new(self.value, self.trace.clone())
    }
}

/// Is the dual of the Frobenius cokernel ample? True exactly when every
/// summand of the cokernel is antiample; the first summand whose dual
/// fails to be ample is returned as the witness.
pub fn bx_dual_ample(fan: &Fan, p: u64) -> Result<CokernelVerdict, ToricError> {
    let decomposition = frobenius_cokernel(fan, p)?;
    let mut trace = vec![TraceStep::new(
        "toric_cokernel_split",
        format!(
            "Frobenius cokernel at p = {p} splits into {} line bundle summands",
            decomposition.total_multiplicity()
        ),
    )];
    for (summand, multiplicity) in decomposition.iter() {
        let verdict = divisor_positivity(fan, &summand.negated())?;
        if verdict.value != Positivity::Ample {
            trace.push(TraceStep::new(
                "summand_dual_not_ample",
                format!("dual of summand {summand} is {}", verdict.value),
            ));
            return Ok(CokernelVerdict {
                value: Ampleness::NotAmple,
                witness: Some(SummandWitness {
                    summand: summand.clone(),
                    multiplicity,
                    verdict,
                }),
                trace,
            });
        }
    }
    trace.push(TraceStep::new(
        "all_summands_antiample",
        "the dual of every cokernel summand is ample".to_string(),
    ));
    Ok(CokernelVerdict { value: Ampleness::Ample, witness: None, trace })
}

/// Is the Frobenius cokernel itself ample? Checks every summand
/// directly; on a toric variety the expected answer is always no.
pub fn bx_ample(fan: &Fan, p: u64) -> Result<CokernelVerdict, ToricError> {
    let decomposition = frobenius_cokernel(fan, p)?;
    let mut trace = vec![TraceStep::new(
        "toric_cokernel_split",
        format!(
            "Frobenius cokernel at p = {p} splits into {} line bundle summands",
            decomposition.total_multiplicity()
        ),
    )];
    for (summand, multiplicity) in decomposition.iter() {
        let verdict = divisor_positivity(fan, summand)?;
        if verdict.value != Positivity::Ample {
            trace.push(TraceStep::new(
                "summand_not_ample",
                format!("summand {summand} is {}", verdict.value),
            ));
            return Ok(CokernelVerdict {
                value: Ampleness::NotAmple,
                witness: Some(SummandWitness {
                    summand: summand.clone(),
                    multiplicity,
                    verdict,
                }),
                trace,
            });
        }
    }
    trace.push(TraceStep::new(
        "all_summands_ample",
        "every cokernel summand is ample".to_string(),
    ));
    Ok(CokernelVerdict { value: Ampleness::Ample, witness: None, trace })
}
