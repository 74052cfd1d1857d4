use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// How `computed` must relate to `predicted` for a case to pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    pub computed: Option<u64>,
    pub predicted: Option<u64>,
    pub relation: Relation,
    pub matches: bool,
    /// Graphs in graph6.
    pub witnesses: Vec<String>,
    pub enumerated: u64,
    pub notes: Vec<String>,
}

impl Case {
    pub fn new(label: impl Into<String>, computed: Option<u64>, predicted: Option<u64>, relation: Relation) -> Self {
        let matches = match relation {
            Relation::Equal => computed == predicted,
            Relation::AtMost => match (computed, predicted) {
                (Some(c), Some(p)) => c <= p,
                (None, None) => true,
                _ => false,
            },
            // no computed value means an empty minimum
            Relation::AtLeast => match (computed, predicted) {
                (Some(c), Some(p)) => c >= p,
                (None, _) => true,
                (Some(_), None) => false,
            },
        };
        Case {
            label: label.into(),
            computed,
            predicted,
            relation,
            matches,
            witnesses: Vec::new(),
            enumerated: 0,
            notes: Vec::new(),
        }
    }

    pub fn equal(label: impl Into<String>, computed: Option<u64>, predicted: Option<u64>) -> Self {
        Self::new(label, computed, predicted, Relation::Equal)
    }

    /// A count of violations that must be zero.
    pub fn violations(label: impl Into<String>, found: u64, checked: u64) -> Self {
        let mut c = Self::equal(label, Some(found), Some(0));
        c.enumerated = checked;
        c
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn fail(&mut self, note: impl Into<String>) {
        self.matches = false;
        self.notes.push(note.into());
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub theorem: String,
    pub parameters: BTreeMap<String, u64>,
    pub cases: Vec<Case>,
    pub all_match: bool,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, parameters: &[(&str, u64)], cases: Vec<Case>) -> Self {
        let all_match = cases.iter().all(|c| c.matches);
        VerificationReport {
            schema: SCHEMA,
            theorem: theorem.into(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            cases,
            all_match,
        }
    }

    pub fn case(&self, label: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.label == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert!(Case::equal("a", Some(3), Some(3)).matches);
        assert!(!Case::equal("a", Some(3), None).matches);
        assert!(Case::equal("a", None, None).matches);
        assert!(Case::new("b", Some(8), Some(11), Relation::AtMost).matches);
        assert!(!Case::new("b", Some(12), Some(11), Relation::AtMost).matches);
        assert!(Case::new("d", Some(3), Some(2), Relation::AtLeast).matches);
        assert!(!Case::new("d", Some(1), Some(2), Relation::AtLeast).matches);
        assert!(!Case::violations("c", 1, 10).matches);
    }

    #[test]
    fn report_round_trips() {
        let r = VerificationReport::new("thm1", &[("r", 2)], vec![Case::equal("n=5", Some(5), Some(5))]);
        assert!(r.all_match);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"schema\": 1"));
    }
}
