use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hessenberg::{HessenbergFunction, Permutation};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// What a check ran over.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Scope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<HessenbergFunction>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, String>,
}

impl Scope {
    pub fn n(n: usize) -> Self {
        Scope {
            n: Some(n),
            ..Scope::default()
        }
    }

    pub fn h(h: &HessenbergFunction) -> Self {
        Scope {
            n: Some(h.n()),
            h: Some(h.clone()),
            ..Scope::default()
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.insert(key.to_string(), value.to_string());
        self
    }
}

/// The concrete object that made a check fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub subject: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Permutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
}

impl Witness {
    pub fn new(subject: impl Into<String>) -> Self {
        Witness {
            subject: subject.into(),
            residue: None,
            permutation: None,
            indices: None,
        }
    }

    pub fn residue(mut self, residue: impl ToString) -> Self {
        self.residue = Some(residue.to_string());
        self
    }

    pub fn permutation(mut self, w: &Permutation) -> Self {
        self.permutation = Some(w.clone());
        self
    }

    pub fn indices(mut self, indices: &[usize]) -> Self {
        self.indices = Some(indices.to_vec());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub scope: Scope,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckResult {
    pub fn pass(name: &str, scope: Scope) -> Self {
        CheckResult {
            name: name.to_string(),
            scope,
            passed: true,
            witness: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(name: &str, scope: Scope, witness: Witness) -> Self {
        CheckResult {
            name: name.to_string(),
            scope,
            passed: false,
            witness: Some(witness),
            elapsed_ms: None,
        }
    }

    /// Passes when `witness` is `None`.
    pub fn from_witness(name: &str, scope: Scope, witness: Option<Witness>) -> Self {
        match witness {
            None => CheckResult::pass(name, scope),
            Some(w) => CheckResult::fail(name, scope, w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub passed: bool,
}

impl VerificationReport {
    pub fn from_results(results: Vec<CheckResult>) -> Self {
        let passed = results.iter().filter(|r| r.passed).count();
        let summary = Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        };
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION,
            passed: summary.failed == 0,
            results,
            summary,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}
