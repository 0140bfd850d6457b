use std::fmt;

use serde::{Serialize, Serializer};

/// A homological dimension, possibly infinite.
///
/// Ordering puts every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Finite(u32),
    Infinite,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dim::Finite(v) => Some(v),
            Dim::Infinite => None,
        }
    }

    /// Adds a finite amount; infinity absorbs.
    pub fn plus(self, k: u32) -> Dim {
        match self {
            Dim::Finite(v) => Dim::Finite(v + k),
            Dim::Infinite => Dim::Infinite,
        }
    }
}

impl From<u32> for Dim {
    fn from(v: u32) -> Self {
        Dim::Finite(v)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(v) => write!(f, "{v}"),
            Dim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(v) => s.serialize_u32(*v),
            Dim::Infinite => s.serialize_str("inf"),
        }
    }
}
