//! Multigraded Koszul and Čech cohomology of monomial sequences on
//! `k[C]/I`, computed one degree at a time.

mod cech;
mod koszul;
mod sequence;
mod slice;
mod support;

use serde::Serialize;

pub use crate::exactlin::DegreeBox;
pub use cech::{
    cech_cohomology_degree, cech_grade, cech_grade_with, cech_report, cech_slice, default_box,
    localized_cech_nonvanishing, CechReport, DegreeCohomology, GradeCertificate, GradeMode,
    GradeWitness, LocalizedNonvanishing, DEFAULT_CECH_RADIUS, EXACT_MAX_LEN,
};
pub use koszul::{
    koszul_homology, koszul_transition, koszul_transition_powers, weak_proregular_check,
    ColonStabilization, KoszulSlice, TransitionMap, WeakProregularReport, WeakProregularity,
};
pub use sequence::{MonomialSequence, MAX_SEQUENCE_LEN};
pub use slice::{SliceComplex, SliceKind};
pub use support::{witness_key, EXACT_BUDGET};

/// Whether a homological statement is proved or only observed on a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Certified,
    BoxEvidence { checked: DegreeBox },
}

impl Provenance {
    pub fn is_certified(&self) -> bool {
        matches!(self, Provenance::Certified)
    }
}

#[cfg(test)]
mod tests;
