//! Condition ledgers and bound reports shared by the evaluators and the CLI.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::numerics::{BoundedReal, EtaValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The hypothesis involves a constant that is not known numerically.
    Unchecked,
    /// Reported for context only; never blocks applicability.
    Info,
}

/// One named hypothesis and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Condition {
    pub fn check(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: None,
        }
    }

    pub fn unchecked(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Unchecked,
            detail: Some(detail.into()),
        }
    }

    pub fn info(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            status: Status::Info,
            detail: Some(if holds { "holds" } else { "does not hold" }.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Names of the failed conditions.
pub fn failed_names(conds: &[Condition]) -> Vec<String> {
    conds.iter().filter(|c| c.failed()).map(|c| c.name.clone()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Bm,
    Thm21,
    Cor22,
    Eq53,
    Thm31,
    Cor32,
    Eq61,
    Liouville,
    Eq12,
    Eq13,
    Eq31,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Bm => "BM",
            TheoremId::Thm21 => "T2.1",
            TheoremId::Cor22 => "C2.2",
            TheoremId::Eq53 => "Eq5.3",
            TheoremId::Thm31 => "T3.1",
            TheoremId::Cor32 => "C3.2",
            TheoremId::Eq61 => "Eq6.1",
            TheoremId::Liouville => "Liouville",
            TheoremId::Eq12 => "Eq1.2",
            TheoremId::Eq13 => "Eq1.3",
            TheoremId::Eq31 => "Eq3.1",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Outcome of applying one theorem to one input.
///
/// When `applicable`, `bound.hi` is a certified upper bound for the effective
/// irrationality measure (strictly, if `strict`), and `best` is the smaller of
/// it and the Liouville bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub applicable: bool,
    pub conditions: Vec<Condition>,
    pub eta: Option<EtaValue>,
    pub bound: Option<BoundedReal>,
    pub strict: bool,
    /// Degree bound used for the Liouville baseline.
    #[serde(serialize_with = "as_decimal")]
    pub liouville: BigUint,
    pub best: Option<BoundedReal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    pub(crate) fn assemble(
        theorem: TheoremId,
        conditions: Vec<Condition>,
        eta: Option<EtaValue>,
        bound: Option<BoundedReal>,
        liouville: BigUint,
    ) -> Self {
        let applicable = !conditions.iter().any(Condition::failed);
        let bound = if applicable { bound } else { None };
        let lv = BoundedReal::from_biguint(&liouville);
        let best = match (&bound, liouville >= BigUint::from(2u32)) {
            (Some(b), true) => Some(b.min(&lv)),
            (Some(b), false) => Some(b.clone()),
            (None, true) => Some(lv),
            (None, false) => None,
        };
        Self {
            theorem,
            applicable,
            conditions,
            eta,
            bound,
            strict: false,
            liouville,
            best,
            note: None,
        }
    }

    pub(crate) fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed_conditions(&self) -> Vec<String> {
        failed_names(&self.conditions)
    }
}

pub(crate) fn as_decimal<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}
