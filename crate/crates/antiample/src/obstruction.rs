//! Numerical obstruction rules for ampleness of the dual Frobenius
//! cokernel, driven by user-supplied witness data.
//!
//! Each rule encodes one theorem-shaped implication: a rational curve of
//! anticanonical degree at most 2 kills dual-ampleness, and so does a
//! linear subspace of small enough anticanonical degree; complete
//! intersections of total degree n-1 or n carry such a curve; Fano
//! threefolds are settled by classification. Rules never guess beyond
//! what they encode: everything else is `Unknown`, and every verdict
//! carries the trace of the rules that fired.
//!
//! Witnesses are taken at face value. Whether a variety containing the
//! supplied curve or subspace exists is the caller's responsibility; the
//! one existence argument mechanized here is the Grassmannian dimension
//! count for lines on complete intersections.

use crate::combinatorics::is_prime;
use crate::verdict::{Ampleness, TraceStep, Verdict};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("complete intersection needs a nonempty degree list")]
    NoDegrees,
    #[error("hypersurface degrees must be at least 1")]
    ZeroDegree,
    #[error("{c} hypersurfaces in ambient dimension {n} leave no positive-dimensional variety")]
    NotPositiveDimensional { n: u64, c: u64 },
}

/// A smooth rational curve C in X, recorded by its anticanonical degree
/// -K_X . C. Negative values are allowed; X is then simply not Fano.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveWitness {
    pub anticanonical_degree: i64,
}

/// A linear subspace Z of X isomorphic to P^r, recorded by r and the
/// degree (-K_X)^(n-r) . Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceWitness {
    pub r: u64,
    pub degree: i64,
}

/// A smooth complete intersection of hypersurfaces of the given degrees
/// in P^n over characteristic p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteIntersectionInput {
    pub n: u64,
    pub degrees: Vec<u64>,
    pub p: u64,
}

impl CompleteIntersectionInput {
    pub fn new(n: u64, degrees: Vec<u64>, p: u64) -> Result<Self, ObstructionError> {
        if degrees.is_empty() {
            return Err(ObstructionError::NoDegrees);
        }
        if degrees.contains(&0) {
            return Err(ObstructionError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(ObstructionError::NotPrime(p));
        }
        let c = degrees.len() as u64;
        if n <= c {
            return Err(ObstructionError::NotPositiveDimensional { n, c });
        }
        Ok(CompleteIntersectionInput { n, degrees, p })
    }

    pub fn codimension(&self) -> u64 {
        self.degrees.len() as u64
    }

    pub fn dim_x(&self) -> u64 {
        self.n - self.codimension()
    }

    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// The three Fano-threefold classes the classification rule tells apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FanoThreefoldKind {
    P3,
    Quadric,
    Other,
}

/// A rational curve of anticanonical degree at most 2 obstructs
/// ampleness of the dual cokernel; larger degrees yield no conclusion.
pub fn curve_obstruction(witness: &CurveWitness) -> Verdict {
    let deg = witness.anticanonical_degree;
    if deg <= 2 {
        Verdict::new(
            Ampleness::NotAmple,
            vec![TraceStep::new(
                "curve_degree_bound",
                format!("smooth rational curve with -K.C = {deg} <= 2"),
            )],
        )
    } else {
        Verdict::new(
            Ampleness::Unknown,
            vec![TraceStep::new(
                "curve_degree_inconclusive",
                format!("-K.C = {deg} > 2, the curve rule does not fire"),
            )],
        )
    }
}

/// A linear P^r inside X of anticanonical degree at most r + 1
/// obstructs ampleness of the dual cokernel.
pub fn subspace_obstruction(witness: &SubspaceWitness) -> Verdict {
    let (r, deg) = (witness.r, witness.degree);
    let bound = r as i64 + 1;
    if deg <= bound {
        Verdict::new(
            Ampleness::NotAmple,
            vec![TraceStep::new(
                "subspace_degree_bound",
                format!("linear P^{r} with (-K)^(n-{r}).Z = {deg} <= {bound}"),
            )],
        )
    } else {
        Verdict::new(
            Ampleness::Unknown,
            vec![TraceStep::new(
                "subspace_degree_inconclusive",
                format!("(-K)^(n-{r}).Z = {deg} > {bound}, the subspace rule does not fire"),
            )],
        )
    }
}

/// Outcome of the dimension count for lines on a complete intersection:
/// lines sweep out when the Grassmannian dimension 2n - 2 is at least
/// the incidence codimension sum(d_i + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineExistence {
    pub exists: bool,
    pub grassmannian_dim: i64,
    pub incidence_codim: i64,
    pub dim_x: i64,
}

pub fn ci_line_exists(n: u64, degrees: &[u64]) -> LineExistence {
    let grassmannian_dim = 2 * n as i64 - 2;
    let incidence_codim = degrees.iter().map(|&d| d as i64 + 1).sum();
    LineExistence {
        exists: grassmannian_dim >= incidence_codim,
        grassmannian_dim,
        incidence_codim,
        dim_x: n as i64 - degrees.len() as i64,
    }
}

/// Rule cascade for a complete intersection:
///
/// (a) all degrees 1: a linear space, dual cokernel ample;
/// (b) a single quadric of dimension >= 3 in odd characteristic: ample;
/// (c) total degree n-1 or n with dim X >= 2: a line with -K.C <= 2
///     exists, not ample;
/// (d) total degree >= n+1: not Fano, not ample;
/// (e) otherwise unknown.
pub fn ci_verdict(input: &CompleteIntersectionInput) -> Verdict {
    let n = input.n;
    let total = input.total_degree() as i64;
    let dim_x = input.dim_x();

    if input.degrees.iter().all(|&d| d == 1) {
        return Verdict::new(
            Ampleness::Ample,
            vec![TraceStep::new(
                "ci_linear_space",
                format!("all degrees are 1, X is a linear P^{dim_x}"),
            )],
        );
    }
    if input.degrees == [2] && dim_x >= 3 && input.p != 2 {
        return Verdict::new(
            Ampleness::Ample,
            vec![TraceStep::new(
                "ci_quadric_odd_char",
                format!(
                    "quadric of dimension {dim_x} >= 3 in characteristic {} != 2",
                    input.p
                ),
            )],
        );
    }
    if (total == n as i64 - 1 || total == n as i64) && dim_x >= 2 {
        let line = ci_line_exists(n, &input.degrees);
        let curve_degree = n as i64 + 1 - total;
        return Verdict::new(
            Ampleness::NotAmple,
            vec![
                TraceStep::new(
                    "line_in_grassmannian",
                    format!(
                        "lines on X: Grassmannian dimension {} >= incidence codimension {}",
                        line.grassmannian_dim, line.incidence_codim
                    ),
                ),
                TraceStep::new(
                    "curve_degree_bound",
                    format!("a line has -K.C = {n}+1-{total} = {curve_degree} <= 2"),
                ),
            ],
        );
    }
    if total > n as i64 {
        return Verdict::new(
            Ampleness::NotAmple,
            vec![TraceStep::new(
                "ci_not_fano",
                format!("total degree {total} >= {} makes -K non-ample", n + 1),
            )],
        );
    }
    Verdict::new(
        Ampleness::Unknown,
        vec![TraceStep::new(
            "ci_inconclusive",
            format!("total degree {total} in ambient P^{n}: no rule applies"),
        )],
    )
}

/// Classification verdict for Fano threefolds, with an optional curve
/// witness that overrides to NotAmple whenever it fires.
pub fn fano3_verdict(
    kind: FanoThreefoldKind,
    p: u64,
    curve: Option<&CurveWitness>,
) -> Verdict {
    if let Some(w) = curve {
        if w.anticanonical_degree <= 2 {
            let mut verdict = curve_obstruction(w);
            verdict.trace.insert(
                0,
                TraceStep::new(
                    "fano3_curve_override",
                    format!("supplied curve witness overrides the {kind:?} classification"),
                ),
            );
            return verdict;
        }
    }
    match kind {
        FanoThreefoldKind::P3 => Verdict::new(
            Ampleness::Ample,
            vec![TraceStep::new(
                "fano3_classification",
                "projective 3-space has ample dual Frobenius cokernel".to_string(),
            )],
        ),
        FanoThreefoldKind::Quadric if p != 2 => Verdict::new(
            Ampleness::Ample,
            vec![TraceStep::new(
                "fano3_classification",
                format!("quadric threefold in characteristic {p} != 2"),
            )],
        ),
        FanoThreefoldKind::Quadric => Verdict::new(
            Ampleness::Unknown,
            vec![TraceStep::new(
                "fano3_quadric_char_two",
                "the quadric threefold in characteristic 2 is not settled by the \
                 classification rule"
                    .to_string(),
            )],
        ),
        FanoThreefoldKind::Other => Verdict::new(
            Ampleness::NotAmple,
            vec![TraceStep::new(
                "fano3_classification",
                "a Fano threefold other than P^3 and the quadric threefold".to_string(),
            )],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn curve_rule_boundaries() {
        assert_eq!(
            curve_obstruction(&CurveWitness { anticanonical_degree: 1 }).value,
            Ampleness::NotAmple
        );
        assert_eq!(
            curve_obstruction(&CurveWitness { anticanonical_degree: 2 }).value,
            Ampleness::NotAmple
        );
        assert_eq!(
            curve_obstruction(&CurveWitness { anticanonical_degree: 3 }).value,
            Ampleness::Unknown
        );
    }

    #[test]
    fn subspace_rule_boundaries() {
        assert_eq!(
            subspace_obstruction(&SubspaceWitness { r: 1, degree: 2 }).value,
            Ampleness::NotAmple
        );
        assert_eq!(
            subspace_obstruction(&SubspaceWitness { r: 2, degree: 3 }).value,
            Ampleness::NotAmple
        );
        assert_eq!(
            subspace_obstruction(&SubspaceWitness { r: 2, degree: 4 }).value,
            Ampleness::Unknown
        );
    }

    #[test]
    fn line_existence_counts() {
        let cubic_surface = ci_line_exists(3, &[3]);
        assert!(cubic_surface.exists);
        assert_eq!(
            (cubic_surface.grassmannian_dim, cubic_surface.incidence_codim),
            (4, 4)
        );
        let intersection_of_quadrics = ci_line_exists(5, &[2, 2]);
        assert!(intersection_of_quadrics.exists);
        assert_eq!(
            (intersection_of_quadrics.grassmannian_dim, intersection_of_quadrics.incidence_codim),
            (8, 6)
        );
        let curve_case = ci_line_exists(3, &[2, 2]);
        assert!(!curve_case.exists);
        assert_eq!(curve_case.dim_x, 1);
    }

    #[test]
    fn ci_cascade_examples() {
        let cubic_3fold = CompleteIntersectionInput::new(4, vec![3], 5).unwrap();
        assert_eq!(ci_verdict(&cubic_3fold).value, Ampleness::NotAmple);

        let quadric_3fold = CompleteIntersectionInput::new(4, vec![2], 3).unwrap();
        assert_eq!(ci_verdict(&quadric_3fold).value, Ampleness::Ample);

        let high_index = CompleteIntersectionInput::new(6, vec![2, 2], 3).unwrap();
        assert_eq!(ci_verdict(&high_index).value, Ampleness::Unknown);

        let cubic_surface = CompleteIntersectionInput::new(3, vec![3], 2).unwrap();
        assert_eq!(ci_verdict(&cubic_surface).value, Ampleness::NotAmple);

        let linear = CompleteIntersectionInput::new(4, vec![1, 1], 2).unwrap();
        assert_eq!(ci_verdict(&linear).value, Ampleness::Ample);

        let general_type = CompleteIntersectionInput::new(3, vec![5], 2).unwrap();
        assert_eq!(ci_verdict(&general_type).value, Ampleness::NotAmple);
    }

    #[test]
    fn quadric_surface_is_obstructed() {
        // A quadric in P^3 has total degree n - 1 with dim X = 2.
        let q = CompleteIntersectionInput::new(3, vec![2], 5).unwrap();
        assert_eq!(ci_verdict(&q).value, Ampleness::NotAmple);
    }

    #[test]
    fn ci_input_validation() {
        assert_eq!(
            CompleteIntersectionInput::new(3, vec![], 2),
            Err(ObstructionError::NoDegrees)
        );
        assert_eq!(
            CompleteIntersectionInput::new(3, vec![2, 2, 2], 2),
            Err(ObstructionError::NotPositiveDimensional { n: 3, c: 3 })
        );
        assert_eq!(
            CompleteIntersectionInput::new(4, vec![2], 4),
            Err(ObstructionError::NotPrime(4))
        );
        assert_eq!(
            CompleteIntersectionInput::new(4, vec![0, 2], 2),
            Err(ObstructionError::ZeroDegree)
        );
    }

    #[test]
    fn fano3_classification_table() {
        assert_eq!(fano3_verdict(FanoThreefoldKind::P3, 2, None).value, Ampleness::Ample);
        assert_eq!(fano3_verdict(FanoThreefoldKind::Quadric, 3, None).value, Ampleness::Ample);
        assert_eq!(
            fano3_verdict(FanoThreefoldKind::Quadric, 2, None).value,
            Ampleness::Unknown
        );
        assert_eq!(fano3_verdict(FanoThreefoldKind::Other, 5, None).value, Ampleness::NotAmple);
    }

    #[test]
    fn fano3_curve_override_applies() {
        let witness = CurveWitness { anticanonical_degree: 2 };
        let verdict = fano3_verdict(FanoThreefoldKind::Other, 5, Some(&witness));
        assert_eq!(verdict.value, Ampleness::NotAmple);
        assert_eq!(verdict.trace[0].rule, "fano3_curve_override");
        // A slack witness changes nothing.
        let slack = CurveWitness { anticanonical_degree: 4 };
        assert_eq!(
            fano3_verdict(FanoThreefoldKind::P3, 2, Some(&slack)).value,
            Ampleness::Ample
        );
    }

    #[test]
    fn negative_verdicts_always_carry_a_trace() {
        let cases = [
            curve_obstruction(&CurveWitness { anticanonical_degree: 0 }),
            subspace_obstruction(&SubspaceWitness { r: 3, degree: -2 }),
            ci_verdict(&CompleteIntersectionInput::new(5, vec![2, 3], 2).unwrap()),
            fano3_verdict(FanoThreefoldKind::Other, 3, None),
        ];
        for verdict in cases {
            assert_eq!(verdict.value, Ampleness::NotAmple);
            assert!(!verdict.trace.is_empty());
        }
    }

    proptest! {
        #[test]
        fn curve_rule_is_the_r_one_subspace_rule(degree in -50i64..=50) {
            let from_curve = curve_obstruction(&CurveWitness { anticanonical_degree: degree });
            let from_subspace = subspace_obstruction(&SubspaceWitness { r: 1, degree });
            prop_assert_eq!(from_curve.value, from_subspace.value);
        }

        #[test]
        fn ci_never_claims_ample_under_the_obstruction(
            n in 3u64..=9,
            raw in proptest::collection::vec(1u64..=6, 1..=4),
            p in prop::sample::select(vec![2u64, 3, 5]),
        ) {
            prop_assume!(n > raw.len() as u64);
            let input = CompleteIntersectionInput::new(n, raw, p).unwrap();
            let total = input.total_degree();
            let has_big_degree = input.degrees.iter().any(|&d| d >= 2);
            if total >= n - 1 && has_big_degree && input.dim_x() >= 2 {
                prop_assert_ne!(ci_verdict(&input).value, Ampleness::Ample);
            }
        }
    }
}
