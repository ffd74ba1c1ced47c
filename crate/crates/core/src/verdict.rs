//! Outcomes of fuel-bounded computation and of bounded searches.

use alloc::string::String;
use core::fmt;

/// Number of reduction steps (or application steps) a computation may spend.
pub type Fuel = u64;

/// Result of a fuel-bounded computation.
///
/// `Undefined` is only produced by backends on which definedness is
/// decidable (finite carriers). Combinatory-logic backends answer either
/// with a value or with `Exhausted`; they never claim divergence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict<T> {
    Value(T),
    Undefined,
    Exhausted { spent: Fuel },
}

impl<T> Verdict<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Verdict::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_value(&self) -> Option<&T> {
        match self {
            Verdict::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Verdict::Value(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Verdict::Exhausted { .. })
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Value(v) => Verdict::Value(f(v)),
            Verdict::Undefined => Verdict::Undefined,
            Verdict::Exhausted { spent } => Verdict::Exhausted { spent },
        }
    }

    pub fn and_then<U>(self, f: impl FnOnce(T) -> Verdict<U>) -> Verdict<U> {
        match self {
            Verdict::Value(v) => f(v),
            Verdict::Undefined => Verdict::Undefined,
            Verdict::Exhausted { spent } => Verdict::Exhausted { spent },
        }
    }
}

/// Kleene inclusion `lhs ⪯ rhs`: whenever `lhs` is defined, `rhs` is
/// defined with the same value.
pub fn kleene_le<T: PartialEq>(lhs: &Verdict<T>, rhs: &Verdict<T>) -> Status {
    match (lhs, rhs) {
        (Verdict::Undefined, _) => Status::Pass,
        (Verdict::Exhausted { .. }, _) => Status::Unknown,
        (Verdict::Value(_), Verdict::Exhausted { .. }) => Status::Unknown,
        (Verdict::Value(_), Verdict::Undefined) => Status::Fail,
        (Verdict::Value(a), Verdict::Value(b)) => {
            if a == b {
                Status::Pass
            } else {
                Status::Fail
            }
        }
    }
}

/// Outcome of a witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// Exhaustive search proved that no witness exists.
    Refuted,
    /// The budget ran out before a witness was found.
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Refuted => Search::Refuted,
            Search::Exhausted => Search::Exhausted,
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Search::Found(_) => Status::Pass,
            Search::Refuted => Status::Fail,
            Search::Exhausted => Status::Unknown,
        }
    }
}

/// Three-valued verdict of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }

    /// Conjunction: any failure wins, then any unknown.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Pass,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Errors raised while building witnesses or structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A computation needed for the construction ran out of fuel.
    Exhausted { spent: Fuel },
    /// A computation that had to be defined turned out undefined.
    Undefined(String),
    /// A required witness does not exist (or was not found).
    MissingWitness(String),
    /// The structure needed for the operation is not available.
    NotApplicable(String),
    /// Ill-formed input.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Exhausted { spent } => write!(f, "fuel exhausted after {spent} steps"),
            Error::Undefined(what) => write!(f, "undefined: {what}"),
            Error::MissingWitness(what) => write!(f, "missing witness: {what}"),
            Error::NotApplicable(what) => write!(f, "not applicable: {what}"),
            Error::Invalid(what) => write!(f, "invalid input: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl<T> Verdict<T> {
    /// Converts to a `Result`, describing an undefined value with `what`.
    pub fn require(self, what: &str) -> Result<T> {
        match self {
            Verdict::Value(v) => Ok(v),
            Verdict::Undefined => Err(Error::Undefined(String::from(what))),
            Verdict::Exhausted { spent } => Err(Error::Exhausted { spent }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kleene_inclusion_table() {
        let v1: Verdict<u8> = Verdict::Value(1);
        let v2: Verdict<u8> = Verdict::Value(2);
        let und: Verdict<u8> = Verdict::Undefined;
        let ex: Verdict<u8> = Verdict::Exhausted { spent: 3 };
        assert_eq!(kleene_le(&und, &v1), Status::Pass);
        assert_eq!(kleene_le(&v1, &v1), Status::Pass);
        assert_eq!(kleene_le(&v1, &v2), Status::Fail);
        assert_eq!(kleene_le(&v1, &und), Status::Fail);
        assert_eq!(kleene_le(&v1, &ex), Status::Unknown);
        assert_eq!(kleene_le(&ex, &v1), Status::Unknown);
    }

    #[test]
    fn status_conjunction() {
        assert_eq!(Status::Pass.and(Status::Unknown), Status::Unknown);
        assert_eq!(Status::Unknown.and(Status::Fail), Status::Fail);
        assert_eq!(Status::Pass.and(Status::Pass), Status::Pass);
    }
}
