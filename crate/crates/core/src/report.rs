//! Verification reports: the oracle verdict plus the advisory per-condition
//! table, and the discrepancies between the two.

use serde::{Deserialize, Serialize};

use crate::algebra::{Verdict, Witness};

pub const REPORT_SCHEMA: &str = "report/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ConditionOutcome {
    Pass,
    Fail { witness: Witness },
    SkippedAmbiguous { reason: String },
}

impl ConditionOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, ConditionOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, ConditionOutcome::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, ConditionOutcome::SkippedAmbiguous { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub id: String,
    #[serde(flatten)]
    pub outcome: ConditionOutcome,
}

/// A disagreement between a printed condition and the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub subject: String,
    /// Condition id, or `*` when the whole parseable list passes but the
    /// oracle fails.
    pub condition: String,
    pub kind: DiscrepancyKind,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyKind {
    /// Oracle passes, printed condition fails.
    PrintedFails,
    /// Oracle fails, every parseable printed condition passes.
    PrintedPasses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub oracle: Verdict,
    pub conditions: Vec<ConditionResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>, oracle: Verdict, conditions: Vec<ConditionResult>) -> Self {
        Report { subject: subject.into(), oracle, conditions }
    }

    pub fn is_pass(&self) -> bool {
        self.oracle.is_pass()
    }

    pub fn condition(&self, id: &str) -> Option<&ConditionOutcome> {
        self.conditions.iter().find(|c| c.id == id).map(|c| &c.outcome)
    }

    /// Verdict of the conjunction of the parseable printed conditions.
    pub fn printed_verdict(&self) -> bool {
        self.conditions.iter().all(|c| !c.outcome.is_fail())
    }

    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        match &self.oracle {
            Verdict::Pass => self
                .conditions
                .iter()
                .filter_map(|c| match &c.outcome {
                    ConditionOutcome::Fail { witness } => Some(Discrepancy {
                        subject: self.subject.clone(),
                        condition: c.id.clone(),
                        kind: DiscrepancyKind::PrintedFails,
                        witness: witness.clone(),
                    }),
                    _ => None,
                })
                .collect(),
            Verdict::Fail(w) if self.printed_verdict() && !self.conditions.is_empty() => vec![Discrepancy {
                subject: self.subject.clone(),
                condition: "*".into(),
                kind: DiscrepancyKind::PrintedPasses,
                witness: w.clone(),
            }],
            Verdict::Fail(_) => Vec::new(),
        }
    }

    pub fn skipped(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions.iter().filter(|c| c.outcome.is_skipped())
    }
}
