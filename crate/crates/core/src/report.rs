//! Pass/fail reports produced by the verification suites.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing could be checked, e.g. every tested component hit a pole.
    Skipped,
}

/// One checked identity at one index tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub relation: String,
    /// 1-based indices the relation was instantiated at.
    pub indices: Vec<usize>,
    pub status: Status,
    /// For failures: the offending difference or graded component.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Non-fatal notes, e.g. components skipped because of poles.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Entry {
    pub fn new(relation: impl Into<String>, indices: &[usize], status: Status) -> Self {
        Entry {
            relation: relation.into(),
            indices: indices.iter().map(|i| i + 1).collect(),
            status,
            witness: None,
            warnings: Vec::new(),
        }
    }

    /// Replaces the indices with raw labels such as degrees, which are not
    /// shifted to 1-based.
    pub fn labelled(mut self, labels: &[usize]) -> Self {
        self.indices = labels.to_vec();
        self
    }

    /// Pass when `witness` is `None`, otherwise fail with that witness.
    pub fn check(relation: impl Into<String>, indices: &[usize], witness: Option<String>) -> Self {
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        Entry { witness, ..Self::new(relation, indices, status) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn warning_count(&self) -> usize {
        self.entries.iter().map(|e| e.warnings.len()).sum()
    }

    /// No entry failed.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Orders entries by relation, then indices, so that parallel suites
    /// produce identical output.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| (&a.relation, &a.indices).cmp(&(&b.relation, &b.indices)));
    }
}

impl FromIterator<Entry> for Report {
    fn from_iter<I: IntoIterator<Item = Entry>>(iter: I) -> Self {
        Report { entries: iter.into_iter().collect() }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let idx = if e.indices.is_empty() {
                String::new()
            } else {
                format!(" {:?}", e.indices)
            };
            writeln!(f, "{tag:4} {}{idx}", e.relation)?;
            if let Some(w) = &e.witness {
                writeln!(f, "       witness: {w}")?;
            }
            for w in &e.warnings {
                writeln!(f, "       warning: {w}")?;
            }
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped, {} warnings",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.warning_count()
        )
    }
}
