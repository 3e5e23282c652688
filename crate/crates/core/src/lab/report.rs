use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use super::ScenarioConfig;
use crate::cm::ScopeTag;

/// One checked statement with the data that decided it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub label: String,
    pub statement: String,
    pub passed: bool,
    pub evidence: Value,
    pub tags: BTreeSet<ScopeTag>,
}

impl Assertion {
    pub fn new(label: &str, statement: &str, passed: bool, evidence: Value, tags: &[ScopeTag]) -> Self {
        let mut tags: BTreeSet<ScopeTag> = tags.iter().copied().collect();
        if tags.contains(&ScopeTag::BoxEvidence) {
            tags.remove(&ScopeTag::Certified);
        }
        Assertion {
            label: label.into(),
            statement: statement.into(),
            passed,
            evidence,
            tags,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub title: String,
    pub config: ScenarioConfig,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn tag_names(tags: &BTreeSet<ScopeTag>) -> String {
    tags.iter()
        .map(|t| serde_json::to_value(t).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
        .collect::<Vec<_>>()
        .join(", ")
}

impl ScenarioReport {
    pub fn new(scenario: &str, title: &str, config: ScenarioConfig, assertions: Vec<Assertion>) -> Self {
        ScenarioReport {
            scenario: scenario.into(),
            title: title.into(),
            config,
            passed: assertions.iter().all(|a| a.passed),
            assertions,
        }
    }

    /// Pretty JSON; keys are sorted, so equal reports give equal bytes.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&v).expect("values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let join = |xs: &[String]| xs.join(",");
        let _ = writeln!(out, "scenario {}: {}", self.scenario, verdict(self.passed));
        let _ = writeln!(out, "  {}", self.title);
        let _ = writeln!(
            out,
            "  config: truncations {}; boxes {}; degree bound {}; samples {}; seed {}",
            join(&c.truncations.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            join(&c.boxes.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            c.degree_bound,
            c.samples,
            c.seed
        );
        for a in &self.assertions {
            let _ = writeln!(out, "  [{}] {}: {}", verdict(a.passed), a.label, a.statement);
            let _ = writeln!(out, "      scope: {}", tag_names(&a.tags));
            let _ = writeln!(out, "      evidence: {}", a.evidence);
        }
        out
    }

    /// `(label, passed)` pairs read back from a text rendering.
    pub fn verdicts_from_text(text: &str) -> Vec<(String, bool)> {
        text.lines()
            .filter_map(|l| {
                let l = l.trim_start();
                let (passed, rest) = if let Some(r) = l.strip_prefix("[PASS] ") {
                    (true, r)
                } else {
                    (false, l.strip_prefix("[FAIL] ")?)
                };
                let label = rest.split_once(':')?.0;
                Some((label.to_string(), passed))
            })
            .collect()
    }

    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.assertions.iter().map(|a| (a.label.clone(), a.passed)).collect()
    }
}
