//! Closed formulas and bounds for the intersection ideals and their
//! relatives, each evaluated in exact integer arithmetic.
//!
//! Every bound evaluator returns a [`BoundReport`] whose `citation` names the
//! claim it encodes, so grid audits can print which statement a row checks.

use serde::Serialize;

mod bipartite;
mod multipartite;
mod path_cycle;

pub use bipartite::*;
pub use multipartite::*;
pub use path_cycle::*;

/// A window `[lower, upper]` (and possibly an exact or conjectured value) for
/// one depth invariant, with the claim it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub quantity: String,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub exact: Option<i64>,
    pub conjectured: Option<i64>,
    pub citation: String,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(quantity: impl Into<String>, citation: impl Into<String>) -> Self {
        BoundReport {
            quantity: quantity.into(),
            lower: None,
            upper: None,
            exact: None,
            conjectured: None,
            citation: citation.into(),
            notes: Vec::new(),
        }
    }

    pub fn lower(mut self, value: i64) -> Self {
        self.lower = Some(value);
        self
    }

    pub fn upper(mut self, value: i64) -> Self {
        self.upper = Some(value);
        self
    }

    pub fn exact(mut self, value: i64) -> Self {
        self.exact = Some(value);
        self
    }

    pub fn conjectured(mut self, value: i64) -> Self {
        self.conjectured = Some(value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// `lower ≤ exact ≤ upper` for whichever fields are present.
    pub fn is_consistent(&self) -> bool {
        let ordered = |a: Option<i64>, b: Option<i64>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        ordered(self.lower, self.upper) && ordered(self.lower, self.exact) && ordered(self.exact, self.upper)
    }

    /// Whether an observed value is compatible with every present field.
    pub fn admits(&self, value: i64) -> bool {
        self.lower.is_none_or(|l| l <= value)
            && self.upper.is_none_or(|u| value <= u)
            && self.exact.is_none_or(|e| e == value)
    }

    /// Compact rendering such as `[2, 3]`, `= 3`, or `[3, 4] conj 4`.
    pub fn window(&self) -> String {
        let mut out = match (self.exact, self.lower, self.upper) {
            (Some(e), _, _) => format!("= {e}"),
            (None, l, u) => format!(
                "[{}, {}]",
                l.map_or("-".to_string(), |v| v.to_string()),
                u.map_or("-".to_string(), |v| v.to_string())
            ),
        };
        if let Some(c) = self.conjectured {
            out.push_str(&format!(" conj {c}"));
        }
        out
    }
}

pub(crate) fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}
