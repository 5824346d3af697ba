//! Itemized reports with a text and a JSON rendering.

use std::fmt;

use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    AmbiguousAsExpected,
    /// Computed data with nothing to compare against.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Match
        } else {
            Status::Mismatch
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::AmbiguousAsExpected => "ambiguous-as-expected",
            Status::Info => "info",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Item {
    pub key: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub id: String,
    pub items: Vec<Item>,
}

impl Section {
    pub fn new(id: &str) -> Self {
        Section {
            id: id.to_string(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(Item {
            key: key.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, key: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(key, Status::from_bool(ok), detail);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub version: u32,
    pub sections: Vec<Section>,
}

impl Default for VerificationReport {
    fn default() -> Self {
        Self::new()
    }
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            version: REPORT_VERSION,
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn items(&self) -> impl Iterator<Item = (&str, &Item)> {
        self.sections
            .iter()
            .flat_map(|s| s.items.iter().map(move |i| (s.id.as_str(), i)))
    }

    pub fn item(&self, key: &str) -> Option<&Item> {
        self.items().map(|(_, i)| i).find(|i| i.key == key)
    }

    pub fn mismatches(&self) -> Vec<&Item> {
        self.items()
            .map(|(_, i)| i)
            .filter(|i| i.status == Status::Mismatch)
            .collect()
    }

    pub fn is_success(&self) -> bool {
        self.mismatches().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts = [0usize; 4];
        for s in &self.sections {
            writeln!(f, "== {} ==", s.id)?;
            for i in &s.items {
                counts[i.status as usize] += 1;
                writeln!(f, "[{}] {}: {}", i.status, i.key, i.detail)?;
            }
        }
        write!(
            f,
            "summary: {} match, {} mismatch, {} ambiguous-as-expected, {} info",
            counts[0], counts[1], counts[2], counts[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let mut r = VerificationReport::new();
        let mut s = Section::new("lemma-g2");
        s.check("pair:91/91", true, "genus 2");
        s.push("pair:254/254", Status::AmbiguousAsExpected, "two survivors");
        r.push(s);
        assert!(r.is_success());
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["version"], 1);
        assert_eq!(json["sections"][0]["id"], "lemma-g2");
        assert_eq!(
            json["sections"][0]["items"][1]["status"],
            "ambiguous-as-expected"
        );
        let text = r.to_text();
        assert!(text.contains("[match] pair:91/91: genus 2"));
        assert!(text.ends_with("summary: 1 match, 0 mismatch, 1 ambiguous-as-expected, 0 info"));

        let mut s = Section::new("x");
        s.check("k", false, "bad");
        r.push(s);
        assert!(!r.is_success());
        assert_eq!(r.mismatches().len(), 1);
    }
}
