use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{settle, ScopeTag};
use crate::error::Result;
use crate::exactlin::{DegreeBox, IntVector};
use crate::homology::{cech_grade_with, GradeCertificate, GradeMode, MonomialSequence};
use crate::monoids::{FacePrime, Monoid};
use crate::ring::{subsets, MonomialIdeal, QuotientRing};

/// Nonzero monoid elements with every coordinate in `0..=bound`, in
/// lexicographic order.
pub fn bounded_elements(m: &Monoid, bound: i64) -> Result<Vec<IntVector>> {
    let b = DegreeBox::cube(m.dim(), 0, bound)?;
    Ok(b.points().filter(|v| !v.is_zero() && m.contains(v)).collect())
}

/// Distinct nonzero proper monomial ideals generated by at most `max_gens`
/// bounded elements, in order of first appearance.
pub fn enumerate_ideals(m: &Monoid, max_gens: usize, bound: i64) -> Result<Vec<MonomialIdeal>> {
    let cands = bounded_elements(m, bound)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_gens {
        for idx in subsets(cands.len(), k) {
            let gens: Vec<IntVector> = idx.iter().map(|&i| cands[i].clone()).collect();
            let ideal = MonomialIdeal::new(m, &gens)?;
            if seen.insert(ideal.generators().to_vec()) {
                out.push(ideal);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmIdealsConfig {
    pub max_generators: usize,
    pub degree_bound: i64,
    pub mode: GradeMode,
    /// Box for box-evidence grades; the default Čech box when absent.
    pub degree_box: Option<DegreeBox>,
}

impl Default for CmIdealsConfig {
    fn default() -> Self {
        CmIdealsConfig {
            max_generators: 2,
            degree_bound: 4,
            mode: GradeMode::Auto,
            degree_box: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmIdealsRow {
    pub generators: Vec<IntVector>,
    pub height: usize,
    pub grade: GradeCertificate,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmIdealsReport {
    pub ring: String,
    pub rows: Vec<CmIdealsRow>,
    pub all_equal: bool,
    pub tags: BTreeSet<ScopeTag>,
}

impl CmIdealsReport {
    pub fn first_unequal(&self) -> Option<&CmIdealsRow> {
        self.rows.iter().find(|r| !r.equal)
    }
}

/// One height/grade comparison; `None` for ideals that vanish in `R` or
/// generate the unit ideal.
pub fn cm_ideal_row(
    ring: &QuotientRing,
    ideal: &MonomialIdeal,
    mode: GradeMode,
    b: Option<&DegreeBox>,
) -> Result<Option<CmIdealsRow>> {
    let live: Vec<IntVector> = ideal
        .generators()
        .iter()
        .filter(|g| !ring.ideal().contains_exponent(g))
        .cloned()
        .collect();
    if live.is_empty() || ring.ideal().sum(ideal)?.is_unit() {
        return Ok(None);
    }
    let height = ring.height_of(ideal)?;
    let seq = MonomialSequence::new(ring.monoid(), live)?;
    let grade = cech_grade_with(ring, &seq, b, mode)?;
    Ok(Some(CmIdealsRow {
        generators: ideal.generators().to_vec(),
        height,
        equal: grade.grade == Some(height),
        grade,
    }))
}

/// Compare height and Čech grade on an enumerated family of monomial ideals.
pub fn cm_ideals_check(ring: &QuotientRing, cfg: &CmIdealsConfig) -> Result<CmIdealsReport> {
    let family = enumerate_ideals(ring.monoid(), cfg.max_generators, cfg.degree_bound)?;
    cm_ideals_check_family(ring, &family, cfg.mode, cfg.degree_box.as_ref())
}

pub fn cm_ideals_check_family(
    ring: &QuotientRing,
    family: &[MonomialIdeal],
    mode: GradeMode,
    b: Option<&DegreeBox>,
) -> Result<CmIdealsReport> {
    let rows: Vec<Option<CmIdealsRow>> = family
        .par_iter()
        .map(|i| cm_ideal_row(ring, i, mode, b))
        .collect::<Result<_>>()?;
    let rows: Vec<CmIdealsRow> = rows.into_iter().flatten().collect();
    let mut tags: BTreeSet<ScopeTag> = rows.iter().map(|r| (&r.grade.provenance).into()).collect();
    tags.insert(ScopeTag::MonomialScope);
    Ok(CmIdealsReport {
        ring: format!("{}/{}", ring.monoid(), ring.ideal()),
        all_equal: rows.iter().all(|r| r.equal),
        rows,
        tags: settle(tags),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSummary {
    /// Relative interior point of the face.
    pub face: IntVector,
    pub height: usize,
}

impl From<&FacePrime> for PrimeSummary {
    fn from(p: &FacePrime) -> Self {
        PrimeSummary {
            face: p.face.relint.clone(),
            height: p.height,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WbuVerdict {
    /// More generators than the height: the hypothesis does not apply.
    Skipped { note: String },
    /// `(I : w)` has a minimal prime that is not minimal over `I`.
    Refuted { witness: IntVector, prime: PrimeSummary },
    NoRefutationFound { witnesses_checked: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WbuReport {
    pub generators: Vec<IntVector>,
    pub mu: usize,
    pub height: usize,
    pub min_primes: Vec<PrimeSummary>,
    pub verdict: WbuVerdict,
    pub tags: BTreeSet<ScopeTag>,
}

/// Search the monomial witnesses `w` for a weakly associated prime of
/// `k[C]/I` outside `min(I)`.
pub fn weak_bourbaki_check(
    ideal: &MonomialIdeal,
    witnesses: &[IntVector],
    b: Option<&DegreeBox>,
) -> Result<WbuReport> {
    let height = ideal.height()?;
    let mins = ideal.min_face_primes();
    let mut tags = BTreeSet::from([ScopeTag::MonomialScope]);
    let summary = |verdict, tags| WbuReport {
        generators: ideal.generators().to_vec(),
        mu: ideal.mu(),
        height,
        min_primes: mins.iter().map(PrimeSummary::from).collect(),
        verdict,
        tags: settle(tags),
    };
    if ideal.mu() > height {
        let note = format!("μ(I) = {} exceeds ht(I) = {height}", ideal.mu());
        return Ok(summary(WbuVerdict::Skipped { note }, tags));
    }
    let m = ideal.monoid();
    let mut checked = 0;
    for w in witnesses {
        if !m.contains(w) || ideal.contains_exponent(w) {
            continue;
        }
        checked += 1;
        let colon = ideal.colon_monomial(w, b)?;
        tags.insert(if colon.certificate.is_certified() {
            ScopeTag::Certified
        } else {
            ScopeTag::BoxEvidence
        });
        let outside = colon
            .ideal
            .min_face_primes()
            .into_iter()
            .find(|p| !mins.iter().any(|q| q.face == p.face));
        if let Some(p) = outside {
            let verdict = WbuVerdict::Refuted {
                witness: w.clone(),
                prime: (&p).into(),
            };
            return Ok(summary(verdict, tags));
        }
    }
    if checked == 0 {
        tags.insert(ScopeTag::Certified);
    }
    Ok(summary(WbuVerdict::NoRefutationFound { witnesses_checked: checked }, tags))
}
