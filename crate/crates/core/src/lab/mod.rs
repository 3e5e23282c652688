//! End-to-end scenarios over the limit ring `k[H]`, its truncations and the
//! normal affine catalog, with reproducible reports.

mod docs;
mod report;
mod scenarios;

use serde::{Deserialize, Serialize};

pub use docs::{FamilyDoc, MonoidDoc, RingDoc};
pub use report::{Assertion, ScenarioReport};

use crate::error::{Error, Result};

/// Ladders and bounds shared by every scenario.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    /// Truncation levels `n` of `H_n`.
    pub truncations: Vec<u32>,
    /// Box sizes `B`; nonnegative scans use `[0, B]²`, Čech scans `[−B, B]²`.
    pub boxes: Vec<i64>,
    /// Coordinate bound for enumerated monomials.
    pub degree_bound: i64,
    /// Random finite subsets drawn by the direct-system scenario.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            truncations: vec![4, 6, 8],
            boxes: vec![8, 12, 16],
            degree_bound: 4,
            samples: 6,
            seed: 7,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidConfig(why));
        if self.truncations.is_empty() || self.boxes.is_empty() {
            return bad("ladders must be nonempty".into());
        }
        if let Some(n) = self.truncations.iter().find(|&&n| !(1..=32).contains(&n)) {
            return bad(format!("truncation level {n} outside 1..=32"));
        }
        if let Some(b) = self.boxes.iter().find(|&&b| !(2..=64).contains(&b)) {
            return bad(format!("box size {b} outside 2..=64"));
        }
        if !(1..=6).contains(&self.degree_bound) {
            return bad(format!("degree bound {} outside 1..=6", self.degree_bound));
        }
        if !(1..=64).contains(&self.samples) {
            return bad(format!("sample count {} outside 1..=64", self.samples));
        }
        Ok(())
    }

    pub(crate) fn max_truncation(&self) -> u32 {
        self.truncations.iter().copied().max().unwrap_or(1)
    }

    pub(crate) fn max_box(&self) -> i64 {
        self.boxes.iter().copied().max().unwrap_or(2)
    }

    pub(crate) fn min_box(&self) -> i64 {
        self.boxes.iter().copied().min().unwrap_or(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioInfo {
    pub id: &'static str,
    pub title: &'static str,
}

type Runner = fn(&ScenarioConfig) -> Result<Vec<Assertion>>;

const CATALOG: [(ScenarioInfo, Runner); 9] = [
    (
        ScenarioInfo {
            id: "direct-system",
            title: "saturated stages of finite subsets of H form a direct system of normal monoids",
        },
        scenarios::direct_system,
    ),
    (
        ScenarioInfo {
            id: "halfplane-limit",
            title: "k + xk[x,y] is the union of the truncations A_n = k[H_n]",
        },
        scenarios::halfplane_limit,
    ),
    (
        ScenarioInfo {
            id: "truncation-counterexample",
            title: "x is a parameter on k[H]/(xy) but on no truncation A_n/(xy)",
        },
        scenarios::truncation_counterexample,
    ),
    (
        ScenarioInfo {
            id: "augmentation-variety",
            title: "the augmentation ideal is the only face prime of k[H] containing x",
        },
        scenarios::augmentation_variety,
    ),
    (
        ScenarioInfo {
            id: "halfplane-cm",
            title: "k[H] fails the ideal-theoretic and unmixedness tests but its strong parameters are regular",
        },
        scenarios::halfplane_cm,
    ),
    (
        ScenarioInfo {
            id: "non-coherence",
            title: "colons in k[H] need ever more generators and (x) has height two",
        },
        scenarios::non_coherence,
    ),
    (
        ScenarioInfo {
            id: "hochster",
            title: "grade equals height on the normal affine catalog",
        },
        scenarios::hochster,
    ),
    (
        ScenarioInfo {
            id: "veronese-limit",
            title: "Veronese truncations form a full chain of Cohen-Macaulay rings",
        },
        scenarios::veronese_limit,
    ),
    (
        ScenarioInfo {
            id: "monomial-pairs",
            title: "no pair of nonunit monomials of k[H] is a parameter sequence",
        },
        scenarios::monomial_pairs,
    ),
];

pub fn list_scenarios() -> Vec<ScenarioInfo> {
    CATALOG.iter().map(|(i, _)| *i).collect()
}

pub fn run_scenario(id: &str, config: &ScenarioConfig) -> Result<ScenarioReport> {
    let (info, run) = CATALOG
        .iter()
        .find(|(i, _)| i.id == id)
        .ok_or_else(|| Error::UnknownScenario(id.into()))?;
    config.validate()?;
    let assertions = run(config)?;
    Ok(ScenarioReport::new(info.id, info.title, config.clone(), assertions))
}

#[cfg(test)]
mod tests;
