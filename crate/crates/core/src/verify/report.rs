//! Uniform verdict carrier for every checked inequality.

use serde::{Serialize, Serializer};

use crate::upoly::fmt_rational;
use crate::Rational;

/// How a verdict should be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// An unconditional inequality; `holds = false` is a genuine failure.
    Asserted,
    /// Evaluated and reported only; no claim is made.
    Reported,
    /// The instance is degenerate (e.g. a vanishing subsum); not asserted.
    Degenerate,
    /// A hypothesis of the inequality is violated; not asserted.
    PreconditionFailed,
}

/// Direction of the comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub name: String,
    pub satisfied: bool,
    pub witness: String,
}

impl Precondition {
    pub fn new(name: impl Into<String>, satisfied: bool, witness: impl Into<String>) -> Self {
        Precondition {
            name: name.into(),
            satisfied,
            witness: witness.into(),
        }
    }
}

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(q))
}

/// `lhs <= rhs` (or `>=`) with exact values.
///
/// `slack` is the margin in the direction of the relation, so `holds` is
/// always `slack >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub status: Status,
    pub relation: Relation,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
    #[serde(serialize_with = "ser_rational")]
    pub slack: Rational,
    pub preconditions: Vec<Precondition>,
    pub notes: Vec<String>,
}

impl InequalityReport {
    pub fn new(name: impl Into<String>, status: Status, relation: Relation, lhs: Rational, rhs: Rational) -> Self {
        let slack = match relation {
            Relation::Le => &rhs - &lhs,
            Relation::Ge => &lhs - &rhs,
        };
        InequalityReport {
            name: name.into(),
            status,
            relation,
            holds: slack >= Rational::from_integer(0.into()),
            lhs,
            rhs,
            slack,
            preconditions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_preconditions(mut self, pre: Vec<Precondition>) -> Self {
        self.preconditions = pre;
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    /// Whether this is an asserted inequality that failed.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Asserted && !self.holds
    }

    /// Process exit code: 0 holds, 1 fails, 2 degenerate or precondition failure.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Degenerate | Status::PreconditionFailed => 2,
            _ if self.holds => 0,
            _ => 1,
        }
    }
}

pub(crate) fn int(v: u64) -> Rational {
    Rational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_follows_relation() {
        let r = InequalityReport::new("x", Status::Asserted, Relation::Le, int(1), int(4));
        assert!(r.holds && r.slack == int(3) && r.exit_code() == 0);
        let r = InequalityReport::new("y", Status::Reported, Relation::Ge, int(6), int(4));
        assert!(r.holds && r.slack == int(2));
        let r = InequalityReport::new("z", Status::Asserted, Relation::Le, int(5), int(4));
        assert!(r.is_failure() && r.exit_code() == 1);
        let r = InequalityReport::new("w", Status::Degenerate, Relation::Le, int(0), int(0));
        assert_eq!(r.exit_code(), 2);
    }
}
