//! Report records shared by the verification suites: one row per checked
//! case, with both sides rendered for the human and machine outputs.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CaseResult {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CaseResult {
    pub fn eq_case<L: ToString, R: ToString + PartialEq<L>>(
        case: impl Into<String>,
        lhs: L,
        rhs: R,
    ) -> CaseResult {
        let pass = rhs == lhs;
        CaseResult {
            case: case.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
            witness: None,
        }
    }

    pub fn from_bool(case: impl Into<String>, pass: bool) -> CaseResult {
        CaseResult {
            case: case.into(),
            lhs: "holds".into(),
            rhs: if pass { "holds" } else { "fails" }.into(),
            pass,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> CaseResult {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkippedCase {
    pub case: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    /// The homology-degree convention this suite reads results in (the
    /// top dimension of each order complex).
    pub degree_convention: String,
    pub cases: Vec<CaseResult>,
    pub skipped: Vec<SkippedCase>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, degree_convention: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            degree_convention: degree_convention.into(),
            cases: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    /// Sort cases by key so report assembly is deterministic regardless
    /// of completion order.
    pub fn finalize(mut self) -> Self {
        self.cases.sort_by(|a, b| a.case.cmp(&b.case));
        self.skipped.sort_by(|a, b| a.case.cmp(&b.case));
        self
    }
}
