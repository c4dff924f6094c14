//! Three-valued truth values.
//!
//! The derived `Ord` is the truth ordering `f < u < t`, so `min` and `max`
//! are Kleene conjunction and disjunction. The knowledge ordering is
//! available through [`TruthValue::leq_kn`].

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    False,
    Unknown,
    True,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::False, TruthValue::Unknown, TruthValue::True];

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }

    /// `t⁻¹ = f`, `f⁻¹ = t`, `u⁻¹ = u`.
    pub fn inverse(self) -> Self {
        match self {
            TruthValue::False => TruthValue::True,
            TruthValue::Unknown => TruthValue::Unknown,
            TruthValue::True => TruthValue::False,
        }
    }

    pub fn leq_tr(self, other: Self) -> bool {
        self <= other
    }

    /// Knowledge (information) ordering: `u` is below both `f` and `t`,
    /// which are incomparable.
    pub fn leq_kn(self, other: Self) -> bool {
        self == TruthValue::Unknown || self == other
    }

    pub fn is_two_valued(self) -> bool {
        self != TruthValue::Unknown
    }

    /// `Some(bool)` for `t`/`f`, `None` for `u`.
    pub fn to_bool(self) -> Option<bool> {
        match self {
            TruthValue::False => Some(false),
            TruthValue::Unknown => None,
            TruthValue::True => Some(true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TruthValue::False => 'f',
            TruthValue::Unknown => 'u',
            TruthValue::True => 't',
        }
    }
}

impl Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        self.inverse()
    }
}

impl BitAnd for TruthValue {
    type Output = TruthValue;

    fn bitand(self, rhs: TruthValue) -> TruthValue {
        self.min(rhs)
    }
}

impl BitOr for TruthValue {
    type Output = TruthValue;

    fn bitor(self, rhs: TruthValue) -> TruthValue {
        self.max(rhs)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for TruthValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t" => Ok(TruthValue::True),
            "f" => Ok(TruthValue::False),
            "u" => Ok(TruthValue::Unknown),
            other => Err(format!("not a truth value: {other:?}")),
        }
    }
}
