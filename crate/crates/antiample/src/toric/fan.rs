//! Smooth complete fans and torus-invariant divisors.
//!
//! A fan is plain data: primitive ray generators in Z^n plus the n-ray
//! index sets of its maximal cones. Validation is a diagnostic pass that
//! reports every violation it finds; the geometric operations in this
//! module demand a clean report first.
//!
//! Completeness is certified combinatorially: every facet (an (n-1)-ray
//! subset of a maximal cone) must belong to exactly two maximal cones,
//! and the facet-adjacency graph of maximal cones must be connected.
//! Together with smoothness this is taken as the completeness check at
//! the scales this crate targets; it is not a full coverage proof of R^n
//! in high dimension.

use super::linalg::{determinant, dot, solve_unimodular};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A torus-invariant divisor, one integer coefficient per ray.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ToricDivisor {
    pub coeffs: Vec<i64>,
}

impl ToricDivisor {
    pub fn new(coeffs: Vec<i64>) -> Self {
        ToricDivisor { coeffs }
    }

    pub fn zero(num_rays: usize) -> Self {
        ToricDivisor { coeffs: vec![0; num_rays] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// The dual divisor -D.
    pub fn negated(&self) -> Self {
        ToricDivisor { coeffs: self.coeffs.iter().map(|&a| -a).collect() }
    }

    /// Sum of the ray coefficients; on the standard projective-space fan
    /// this is the degree of the divisor class.
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for ToricDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A problem found while validating a fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FanViolation {
    EmptyFan,
    RayWrongDimension { ray: usize },
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize, gcd: u64 },
    DuplicateRay { first: usize, second: usize },
    ConeWrongSize { cone: usize, size: usize },
    ConeIndexOutOfRange { cone: usize, index: usize },
    ConeRepeatedRay { cone: usize, ray: usize },
    NonSmoothCone { cone: usize, det: String },
    UnusedRay { ray: usize },
    FacetNotShared { rays: Vec<usize>, incident_cones: usize },
    Disconnected,
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanViolation::EmptyFan => write!(f, "fan has no rays or no maximal cones"),
            FanViolation::RayWrongDimension { ray } => {
                write!(f, "ray {ray} does not have `dim` entries")
            }
            FanViolation::ZeroRay { ray } => write!(f, "ray {ray} is the zero vector"),
            FanViolation::NonPrimitiveRay { ray, gcd } => {
                write!(f, "ray {ray} is not primitive (entry gcd {gcd})")
            }
            FanViolation::DuplicateRay { first, second } => {
                write!(f, "rays {first} and {second} coincide")
            }
            FanViolation::ConeWrongSize { cone, size } => {
                write!(f, "maximal cone {cone} has {size} rays instead of dim")
            }
            FanViolation::ConeIndexOutOfRange { cone, index } => {
                write!(f, "maximal cone {cone} references missing ray {index}")
            }
            FanViolation::ConeRepeatedRay { cone, ray } => {
                write!(f, "maximal cone {cone} repeats ray {ray}")
            }
            FanViolation::NonSmoothCone { cone, det } => {
                write!(f, "maximal cone {cone} is not smooth (determinant {det})")
            }
            FanViolation::UnusedRay { ray } => {
                write!(f, "ray {ray} belongs to no maximal cone")
            }
            FanViolation::FacetNotShared { rays, incident_cones } => {
                write!(f, "facet {rays:?} lies in {incident_cones} maximal cones, expected 2")
            }
            FanViolation::Disconnected => {
                write!(f, "maximal cones are not connected through shared facets")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum ToricError {
    #[error("invalid fan: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFan(Vec<FanViolation>),
    #[error("characteristic must be prime, got {0}")]
    NotPrime(u64),
    #[error("divisor has {got} coefficients but the fan has {expected} rays")]
    DivisorLengthMismatch { expected: usize, got: usize },
    #[error("decomposition would have {residues} summands, above the supported limit {limit}")]
    DecompositionTooLarge { residues: String, limit: u64 },
    #[error("internal error: {0}")]
    Internal(String),
}

/// A fan in Z^`dim`, given by primitive rays and maximal cones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    #[serde(rename = "cones")]
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Self {
        Fan { dim, rays, max_cones }
    }

    /// The standard fan of projective n-space: rays e_1 .. e_n and
    /// -(e_1 + ... + e_n), maximal cones all n-subsets.
    pub fn projective_space(n: usize) -> Self {
        assert!(n >= 1, "projective space needs dimension >= 1");
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(j == i)).collect())
            .collect();
        rays.push(vec![-1; n]);
        let max_cones = (0..=n)
            .map(|skip| (0..=n).filter(|&i| i != skip).collect())
            .collect();
        Fan::new(n, rays, max_cones)
    }

    /// The fan of P^1 x P^1.
    pub fn p1_cross_p1() -> Self {
        Fan::new(
            2,
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
            vec![vec![0, 2], vec![2, 1], vec![1, 3], vec![3, 0]],
        )
    }

    /// The Hirzebruch surface of parameter a: rays e1, e2, -e1 + a e2,
    /// -e2. Parameter 0 is P^1 x P^1 and parameter 1 is the blowup of
    /// P^2 at a torus-fixed point.
    pub fn hirzebruch(a: i64) -> Self {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
    }

    /// Blowup of P^2 at the torus-fixed point of the cone (e1, e2):
    /// the P^2 rays plus the exceptional ray e1 + e2.
    pub fn blowup_p2_at_point() -> Self {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]],
            vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![2, 0]],
        )
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    /// Diagnostic validation: every violation found, empty when the fan
    /// is a well-formed smooth complete fan.
    pub fn violations(&self) -> Vec<FanViolation> {
        let mut out = Vec::new();
        if self.rays.is_empty() || self.max_cones.is_empty() || self.dim == 0 {
            out.push(FanViolation::EmptyFan);
            return out;
        }
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.len() != self.dim {
                out.push(FanViolation::RayWrongDimension { ray: i });
                continue;
            }
            let gcd = ray.iter().fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()));
            if gcd == 0 {
                out.push(FanViolation::ZeroRay { ray: i });
            } else if gcd != 1 {
                out.push(FanViolation::NonPrimitiveRay { ray: i, gcd });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    out.push(FanViolation::DuplicateRay { first: i, second: j });
                }
            }
        }
        let mut structural_ok = true;
        for (c, cone) in self.max_cones.iter().enumerate() {
            if cone.len() != self.dim {
                out.push(FanViolation::ConeWrongSize { cone: c, size: cone.len() });
                structural_ok = false;
                continue;
            }
            let mut seen = cone.clone();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                let ray = seen.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                out.push(FanViolation::ConeRepeatedRay { cone: c, ray });
                structural_ok = false;
                continue;
            }
            if let Some(&index) = cone.iter().find(|&&i| i >= self.rays.len()) {
                out.push(FanViolation::ConeIndexOutOfRange { cone: c, index });
                structural_ok = false;
                continue;
            }
            let rows: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
            let det = determinant(&rows);
            if !det.abs().is_one() {
                out.push(FanViolation::NonSmoothCone { cone: c, det: det.to_string() });
            }
        }
        if !structural_ok {
            return out;
        }
        let mut used = vec![false; self.rays.len()];
        for cone in &self.max_cones {
            for &i in cone {
                used[i] = true;
            }
        }
        for (i, u) in used.iter().enumerate() {
            if !u {
                out.push(FanViolation::UnusedRay { ray: i });
            }
        }
        // Facet incidence: each (dim-1)-subset of a maximal cone must be
        // shared by exactly two maximal cones.
        let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            for skip in 0..cone.len() {
                let mut facet: Vec<usize> =
                    cone.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
                facet.sort_unstable();
                facets.entry(facet).or_default().push(c);
            }
        }
        for (rays, cones) in &facets {
            if cones.len() != 2 {
                out.push(FanViolation::FacetNotShared {
                    rays: rays.clone(),
                    incident_cones: cones.len(),
                });
            }
        }
        // Connectivity of the facet-adjacency graph.
        let mut reached = vec![false; self.max_cones.len()];
        let mut stack = vec![0usize];
        reached[0] = true;
        while let Some(c) = stack.pop() {
            for cones in facets.values() {
                if cones.contains(&c) {
                    for &other in cones {
                        if !reached[other] {
                            reached[other] = true;
                            stack.push(other);
                        }
                    }
                }
            }
        }
        if reached.iter().any(|&r| !r) {
            out.push(FanViolation::Disconnected);
        }
        out
    }

    /// Error unless the fan validates cleanly.
    pub fn require_valid(&self) -> Result<(), ToricError> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ToricError::InvalidFan(violations))
        }
    }

    pub(crate) fn check_divisor(&self, divisor: &ToricDivisor) -> Result<(), ToricError> {
        if divisor.coeffs.len() != self.rays.len() {
            return Err(ToricError::DivisorLengthMismatch {
                expected: self.rays.len(),
                got: divisor.coeffs.len(),
            });
        }
        Ok(())
    }

    /// Divisor of the character with exponent vector `m`: coefficient
    /// <m, v> at each ray v. Principal, hence linearly equivalent to 0.
    pub fn character_divisor(&self, m: &[i64]) -> ToricDivisor {
        assert_eq!(m.len(), self.dim);
        let mb: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
        let coeffs = self
            .rays
            .iter()
            .map(|ray| {
                i64::try_from(dot(&mb, ray)).expect("character coefficient overflows i64")
            })
            .collect();
        ToricDivisor { coeffs }
    }

    /// Whether two divisors differ by a character divisor, i.e. define
    /// the same line bundle. Requires a valid fan.
    pub fn linearly_equivalent(
        &self,
        a: &ToricDivisor,
        b: &ToricDivisor,
    ) -> Result<bool, ToricError> {
        self.require_valid()?;
        self.check_divisor(a)?;
        self.check_divisor(b)?;
        let diff: Vec<BigInt> =
            a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| BigInt::from(x - y)).collect();
        // Solve <m, v_i> = diff_i on the rays of the first maximal cone,
        // then check the remaining rays.
        let cone = &self.max_cones[0];
        let rows: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        let rhs: Vec<BigInt> = cone.iter().map(|&i| diff[i].clone()).collect();
        let m = solve_unimodular(&rows, &rhs)
            .ok_or_else(|| ToricError::Internal("smooth cone must be unimodular".into()))?;
        Ok(self.rays.iter().zip(&diff).all(|(ray, d)| &dot(&m, ray) == d))
    }
}
