use std::fmt;

use serde::Serialize;

/// Outcome of one identity check. A mismatch is data, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub case: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, case: impl Into<String>, passed: bool) -> Self {
        CheckReport {
            suite: suite.into(),
            case: case.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Passes iff `lhs == rhs`; on failure both sides go into `detail`.
    pub fn compare<T: PartialEq + fmt::Display>(
        suite: impl Into<String>,
        case: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let passed = lhs == rhs;
        let r = Self::new(suite, case, passed);
        if passed {
            r
        } else {
            r.with_detail(format!("lhs = {lhs}; rhs = {rhs}"))
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} {}", self.suite, self.case)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}
