use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            details: details.into(),
        }
    }

    pub fn pass(id: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(id, true, details)
    }

    pub fn fail(id: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(id, false, details)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        Report {
            suite: suite.to_string(),
            passed,
            failed: checks.len() - passed,
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}
