use std::fmt;

/// Position of an endomorphism in the `IA(k)` / `IE(k)` filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// Member of level `k` but not of level `k + 1`.
    Exactly(usize),
    /// Member of every level up to the search bound (e.g. the identity).
    AtLeast(usize),
}

impl Level {
    pub(crate) fn from_min_correction_degree(min_degree: Option<usize>, bound: usize) -> Level {
        match min_degree {
            Some(m) if m - 1 <= bound => Level::Exactly(m - 1),
            _ => Level::AtLeast(bound),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Exactly(k) => write!(f, "{k}"),
            Level::AtLeast(k) => write!(f, ">= {k}"),
        }
    }
}
