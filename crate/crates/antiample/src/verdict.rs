//! Shared verdict vocabulary.
//!
//! Two lattices appear throughout the crate:
//!
//! - [`Positivity`] grades a single divisor or split bundle on a complete
//!   variety, where the question is decidable: ample, nef but not ample,
//!   or not even nef.
//! - [`Ampleness`] is the three-valued outcome of an obstruction rule:
//!   the rules never guess, so `Unknown` is a first-class answer.
//!
//! Every non-trivial verdict carries a [`Verdict::trace`]: the ordered
//! list of rules that fired, each with a stable machine-readable id and a
//! human-readable detail line.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Decidable positivity of a divisor or split vector bundle.
///
/// `Ample` implies nef by construction of the lattice: the three values
/// are mutually exclusive and ordered `Ample > NefNotAmple > NotNef`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Positivity {
    NotNef,
    NefNotAmple,
    Ample,
}

impl Positivity {
    pub fn is_nef(self) -> bool {
        self >= Positivity::NefNotAmple
    }

    pub fn is_ample(self) -> bool {
        self == Positivity::Ample
    }
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Positivity::Ample => write!(f, "Ample"),
            Positivity::NefNotAmple => write!(f, "NefNotAmple"),
            Positivity::NotNef => write!(f, "NotNef"),
        }
    }
}

/// Three-valued ampleness answer for obstruction rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ampleness {
    Ample,
    NotAmple,
    Unknown,
}

impl fmt::Display for Ampleness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ampleness::Ample => write!(f, "Ample"),
            Ampleness::NotAmple => write!(f, "NotAmple"),
            Ampleness::Unknown => write!(f, "Unknown"),
        }
    }
}

/// One step of a derivation: which rule fired and what it concluded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Stable identifier of the rule, e.g. `curve_degree_bound`.
    pub rule: String,
    /// Human-readable account of the numbers that made the rule fire.
    pub detail: String,
}

impl TraceStep {
    pub fn new(rule: impl Into<String>, detail: impl Into<String>) -> Self {
        TraceStep { rule: rule.into(), detail: detail.into() }
    }
}

/// An ampleness verdict together with its derivation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: Ampleness,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    pub fn new(value: Ampleness, trace: Vec<TraceStep>) -> Self {
        Verdict { value, trace }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positivity_lattice_order() {
        assert!(Positivity::Ample.is_nef());
        assert!(Positivity::NefNotAmple.is_nef());
        assert!(!Positivity::NotNef.is_nef());
        assert!(Positivity::Ample > Positivity::NefNotAmple);
        assert!(Positivity::NefNotAmple > Positivity::NotNef);
    }
}
