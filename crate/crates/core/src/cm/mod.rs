//! Cohen–Macaulay type predicates for `k[C]/I`, assembled from colon
//! arithmetic and degreewise cohomology.

mod harness;
mod ideals;
mod sequences;

use std::collections::BTreeSet;

use serde::Serialize;

pub use harness::{hamilton_marley_harness, HarnessConfig, HarnessReport, HarnessRow};
pub use ideals::{
    bounded_elements, cm_ideal_row, cm_ideals_check, cm_ideals_check_family, enumerate_ideals,
    weak_bourbaki_check, CmIdealsConfig, CmIdealsReport, CmIdealsRow, PrimeSummary, WbuReport,
    WbuVerdict,
};
pub use sequences::{
    is_parameter_sequence, is_regular_sequence, is_strong_parameter_sequence, ParameterConfig,
};

use crate::exactlin::IntVector;
use crate::homology::{MonomialSequence, Provenance};

/// How far a verdict reaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScopeTag {
    Certified,
    BoxEvidence,
    /// Only monomial ideals, monomial witnesses and face primes were used.
    MonomialScope,
    /// The verdict is the constant answer along a ladder of boxes or levels.
    StabilizationProtocol,
    MonomialSequencesOnly,
}

impl From<&Provenance> for ScopeTag {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::Certified => ScopeTag::Certified,
            Provenance::BoxEvidence { .. } => ScopeTag::BoxEvidence,
        }
    }
}

/// Reduce a set of tags so `certified` survives only without box evidence.
pub(crate) fn settle(mut tags: BTreeSet<ScopeTag>) -> BTreeSet<ScopeTag> {
    if tags.contains(&ScopeTag::BoxEvidence) {
        tags.remove(&ScopeTag::Certified);
    }
    tags
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    Proper,
    WeakProregular,
    /// `H^ℓ` after localizing at the face prime whose face has this relative
    /// interior point.
    LocalizedNonvanishing { face: IntVector, height: usize },
    /// `x_step` is a nonzerodivisor modulo the earlier elements.
    RegularStep { step: usize },
    /// A prefix of a strong parameter sequence.
    Prefix { len: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub passed: bool,
    pub witness: Option<IntVector>,
    pub tag: ScopeTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceVerdict {
    pub sequence: MonomialSequence,
    pub conditions: Vec<ConditionResult>,
    pub holds: bool,
    pub tags: BTreeSet<ScopeTag>,
}

impl SequenceVerdict {
    pub(crate) fn assemble(sequence: MonomialSequence, conditions: Vec<ConditionResult>, extra: &[ScopeTag]) -> Self {
        let holds = conditions.iter().all(|c| c.passed);
        let mut tags: BTreeSet<ScopeTag> = conditions.iter().map(|c| c.tag).collect();
        tags.extend(extra.iter().copied());
        if tags.is_empty() {
            tags.insert(ScopeTag::Certified);
        }
        SequenceVerdict {
            sequence,
            conditions,
            holds,
            tags: settle(tags),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.tags.contains(&ScopeTag::Certified)
    }

    /// The first failed condition.
    pub fn failure(&self) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| !c.passed)
    }
}

#[cfg(test)]
mod tests;
