//! Shared pass/fail reporting for the axiom checkers.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    /// First counterexample (basis indices and the differing values) when
    /// the check fails, occasionally extra context when it passes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub subject: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> CheckReport {
        CheckReport {
            subject: subject.into(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn push_ok(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn push_fail(&mut self, name: impl Into<String>, detail: String) {
        self.push(name, false, Some(detail));
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        for item in &self.items {
            let status = if item.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {}", item.name));
            if let Some(d) = &item.detail {
                out.push_str(&format!(" -- {d}"));
            }
            out.push('\n');
        }
        out
    }
}
