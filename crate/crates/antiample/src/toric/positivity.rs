//! Nef and ample tests for torus-invariant divisors.
//!
//! On a smooth complete fan, a divisor D = sum a_v D_v determines one
//! lattice point m per maximal cone, solving <m, v> = -a_v on the cone's
//! rays. D is nef exactly when every m satisfies <m, v> >= -a_v at every
//! ray of the fan, and ample when the inequality is strict at every ray
//! outside the cone that produced m. Negative verdicts come with the
//! cone/ray pair where the criterion fails.

use super::fan::{Fan, ToricDivisor, ToricError};
use super::linalg::{dot, solve_unimodular};
use crate::verdict::Positivity;
use num_bigint::BigInt;
use serde::Serialize;

/// Where the nef/ample criterion failed (or tightened to equality).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityWitness {
    /// Index of the maximal cone whose support-function point was used.
    pub cone: usize,
    /// Index of the ray where the inequality fails or is an equality.
    pub ray: usize,
    /// Value of <m_cone, ray> there.
    pub pairing: i64,
    /// The bound -a_ray it must (strictly) exceed.
    pub bound: i64,
}

/// Outcome of the cone-by-cone criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityVerdict {
    pub value: Positivity,
    /// Present for non-ample verdicts: an equality witness when nef but
    /// not ample, a violated inequality when not nef.
    pub witness: Option<PositivityWitness>,
}

/// Classify D on a valid fan as ample, nef-but-not-ample, or not nef.
pub fn divisor_positivity(
    fan: &Fan,
    divisor: &ToricDivisor,
) -> Result<PositivityVerdict, ToricError> {
    fan.require_valid()?;
    fan.check_divisor(divisor)?;
    let mut equality_witness: Option<PositivityWitness> = None;
    for (c, cone) in fan.max_cones.iter().enumerate() {
        let rows: Vec<Vec<i64>> = cone.iter().map(|&i| fan.rays[i].clone()).collect();
        let rhs: Vec<BigInt> =
            cone.iter().map(|&i| BigInt::from(-divisor.coeffs[i])).collect();
        let m = solve_unimodular(&rows, &rhs)
            .ok_or_else(|| ToricError::Internal("smooth cone must be unimodular".into()))?;
        for (r, ray) in fan.rays.iter().enumerate() {
            let pairing = i64::try_from(dot(&m, ray))
                .map_err(|_| ToricError::Internal("support pairing overflows i64".into()))?;
            let bound = -divisor.coeffs[r];
            if pairing < bound {
                return Ok(PositivityVerdict {
                    value: Positivity::NotNef,
                    witness: Some(PositivityWitness { cone: c, ray: r, pairing, bound }),
                });
            }
            if pairing == bound && !cone.contains(&r) && equality_witness.is_none() {
                equality_witness =
                    Some(PositivityWitness { cone: c, ray: r, pairing, bound });
            }
        }
    }
    Ok(match equality_witness {
        Some(w) => PositivityVerdict { value: Positivity::NefNotAmple, witness: Some(w) },
        None => PositivityVerdict { value: Positivity::Ample, witness: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperplane_class_on_p2_is_ample() {
        let fan = Fan::projective_space(2);
        let d = ToricDivisor::new(vec![1, 0, 0]);
        let verdict = divisor_positivity(&fan, &d).unwrap();
        assert_eq!(verdict.value, Positivity::Ample);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn fiber_class_on_quadric_surface_is_nef_not_ample() {
        let fan = Fan::p1_cross_p1();
        let d = ToricDivisor::new(vec![1, 0, 0, 0]);
        let verdict = divisor_positivity(&fan, &d).unwrap();
        assert_eq!(verdict.value, Positivity::NefNotAmple);
        let w = verdict.witness.unwrap();
        assert_eq!(w.pairing, w.bound);
    }

    #[test]
    fn negative_hyperplane_is_not_nef() {
        let fan = Fan::projective_space(2);
        let d = ToricDivisor::new(vec![-1, 0, 0]);
        let verdict = divisor_positivity(&fan, &d).unwrap();
        assert_eq!(verdict.value, Positivity::NotNef);
        let w = verdict.witness.unwrap();
        assert!(w.pairing < w.bound);
    }

    #[test]
    fn anticanonical_of_hirzebruch_two_is_nef_only() {
        // -K on the Hirzebruch surface of parameter 2 touches the
        // rigid section, so it is nef but not ample.
        let fan = Fan::hirzebruch(2);
        let anti_k = ToricDivisor::new(vec![1, 1, 1, 1]);
        let verdict = divisor_positivity(&fan, &anti_k).unwrap();
        assert_eq!(verdict.value, Positivity::NefNotAmple);
        let anti_k_f1 = ToricDivisor::new(vec![1, 1, 1, 1]);
        let fano = divisor_positivity(&Fan::hirzebruch(1), &anti_k_f1).unwrap();
        assert_eq!(fano.value, Positivity::Ample);
    }

    #[test]
    fn rejects_invalid_fan_and_bad_divisor() {
        let mut fan = Fan::projective_space(2);
        fan.max_cones.pop();
        let d = ToricDivisor::zero(3);
        assert!(matches!(
            divisor_positivity(&fan, &d),
            Err(ToricError::InvalidFan(_))
        ));
        let fan = Fan::projective_space(2);
        let short = ToricDivisor::zero(2);
        assert!(matches!(
            divisor_positivity(&fan, &short),
            Err(ToricError::DivisorLengthMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn verdicts_survive_relabeling() {
        // Reverse ray order and cone order on P^1 x P^1; the fiber class
        // keeps its verdict.
        let fan = Fan::p1_cross_p1();
        let d = ToricDivisor::new(vec![1, 0, 0, 0]);
        let base = divisor_positivity(&fan, &d).unwrap().value;

        let perm = [3usize, 2, 1, 0];
        let mut rays = vec![vec![]; 4];
        for (old, &new) in perm.iter().enumerate() {
            rays[new] = fan.rays[old].clone();
        }
        let mut cones: Vec<Vec<usize>> = fan
            .max_cones
            .iter()
            .map(|cone| cone.iter().map(|&i| perm[i]).collect())
            .collect();
        cones.reverse();
        let relabeled = Fan::new(2, rays, cones);
        let mut coeffs = vec![0i64; 4];
        for (old, &new) in perm.iter().enumerate() {
            coeffs[new] = d.coeffs[old];
        }
        let relabeled_verdict =
            divisor_positivity(&relabeled, &ToricDivisor::new(coeffs)).unwrap();
        assert_eq!(base, relabeled_verdict.value);
    }

    #[test]
    fn character_shift_preserves_verdicts() {
        let fan = Fan::projective_space(2);
        for coeffs in [vec![1, 0, 0], vec![-1, 0, 0], vec![0, 2, 1]] {
            let d = ToricDivisor::new(coeffs);
            let base = divisor_positivity(&fan, &d).unwrap().value;
            for m in [[1i64, 0], [0, -3], [2, 5]] {
                let shift = fan.character_divisor(&m);
                let moved = ToricDivisor::new(
                    d.coeffs.iter().zip(&shift.coeffs).map(|(a, b)| a + b).collect(),
                );
                assert_eq!(base, divisor_positivity(&fan, &moved).unwrap().value);
            }
        }
    }
}
