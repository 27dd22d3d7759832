//! Verdicts shared by every experiment outcome.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Observation equals the predicted value everywhere.
    Match,
    /// Observation differs from the prediction somewhere (data, not failure).
    Deviates,
    /// A property was verified.
    Holds,
    /// A property was refuted.
    Fails,
    /// Something unexpected worth a closer look.
    Finding,
    /// The experiment could not complete.
    Error,
}

impl Verdict {
    pub fn from_match(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Deviates
        }
    }

    pub fn from_holds(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}
