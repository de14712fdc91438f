//! Structured records of elimination steps and plain-text table rendering.

use std::fmt::{self, Write as _};

use crate::params::Candidate;

/// An item that an elimination step ruled out, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub item: String,
    pub reason: String,
}

/// Outcome of one case of the analysis: the bounds it computed, the
/// candidates that survived and why everything else was dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EliminationReport {
    pub case: String,
    pub bounds: Vec<(String, String)>,
    pub survivors: Vec<Candidate>,
    pub rejected: Vec<Rejection>,
    pub notes: Vec<String>,
}

impl EliminationReport {
    pub fn new(case: impl Into<String>) -> Self {
        EliminationReport { case: case.into(), ..Default::default() }
    }

    pub fn bound(&mut self, name: impl Into<String>, value: impl ToString) {
        self.bounds.push((name.into(), value.to_string()));
    }

    pub fn reject(&mut self, item: impl Into<String>, reason: impl Into<String>) {
        self.rejected.push(Rejection { item: item.into(), reason: reason.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn bound_value(&self, name: &str) -> Option<&str> {
        self.bounds.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }

    pub fn survivor_tuples(&self) -> Vec<(u64, u64, u64, u64, u64, u64)> {
        self.survivors.iter().map(|c| c.tuple()).collect()
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for EliminationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "## {}", self.case)?;
        for (name, value) in &self.bounds {
            writeln!(f, "bound {name}: {value}")?;
        }
        if self.survivors.is_empty() {
            writeln!(f, "survivors: none")?;
        } else {
            writeln!(f, "survivors:")?;
            for c in &self.survivors {
                writeln!(f, "  {c} {}", c.status())?;
            }
        }
        for r in &self.rejected {
            writeln!(f, "rejected {}: {}", r.item, r.reason)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Renders a Markdown table.
pub fn markdown_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", headers.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(headers.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

/// Renders rows as tab separated values with a header line.
pub fn tsv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", headers.join("\t"));
    for row in rows {
        let _ = writeln!(out, "{}", row.join("\t"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_layout() {
        let t = markdown_table(&["a", "b"], &[vec!["1".into(), "2".into()]]);
        assert_eq!(t, "| a | b |\n|---|---|\n| 1 | 2 |\n");
    }

    #[test]
    fn report_lists_rejections() {
        let mut r = EliminationReport::new("demo");
        r.bound("omega", 159);
        r.reject("x", "too big");
        let s = r.render();
        assert!(s.contains("bound omega: 159"));
        assert!(s.contains("rejected x: too big"));
        assert_eq!(r.bound_value("omega"), Some("159"));
    }
}
