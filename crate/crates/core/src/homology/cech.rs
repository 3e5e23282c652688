use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::sequence::MonomialSequence;
use super::slice::{SliceComplex, SliceKind};
use super::support::{merge_witness, witness_key, CechSupport};
use super::Provenance;
use crate::error::{Error, Result};
use crate::exactlin::{DegreeBox, IntVector};
use crate::monoids::FacePrime;
use crate::ring::{Field, QuotientRing};

/// Default half-width of the degree box scanned for Čech cohomology.
pub const DEFAULT_CECH_RADIUS: i64 = 12;

/// Longest sequence handled by the exact pattern search.
pub const EXACT_MAX_LEN: usize = 3;

pub fn default_box(dim: usize) -> DegreeBox {
    DegreeBox::symmetric(dim, DEFAULT_CECH_RADIUS)
}

/// How a grade is to be obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradeMode {
    /// Exact pattern search when available, else the box.
    Auto,
    /// Box scan only.
    BoxOnly,
}

/// Memoized slice cohomology keyed by support pattern.
struct PatternCache {
    field: Field,
    len: usize,
    dims: HashMap<u64, Vec<usize>>,
}

impl PatternCache {
    fn new(field: Field, len: usize) -> Self {
        PatternCache {
            field,
            len,
            dims: HashMap::new(),
        }
    }

    fn get(&mut self, pattern: u64) -> &[usize] {
        let (field, len) = (self.field, self.len);
        self.dims
            .entry(pattern)
            .or_insert_with(|| SliceComplex::new(SliceKind::Cech, len, pattern).cohomology(field))
    }
}

/// The degree-`a` slice of the Čech complex of `s` on `R`.
pub fn cech_slice(ring: &QuotientRing, seq: &MonomialSequence, a: &IntVector) -> Result<SliceComplex> {
    let sup = CechSupport::new(ring, seq, None)?;
    Ok(SliceComplex::new(SliceKind::Cech, seq.len(), sup.pattern(a)?))
}

/// `dim_k H^i_s(R)_a` for `i = 0..=ℓ`.
pub fn cech_cohomology_degree(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    a: &IntVector,
) -> Result<Vec<usize>> {
    Ok(cech_slice(ring, seq, a)?.cohomology(ring.field()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCohomology {
    pub degree: IntVector,
    pub dims: Vec<usize>,
}

/// A cohomological index together with a degree where it is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradeWitness {
    pub index: usize,
    pub degree: IntVector,
}

/// Čech cohomology of a sequence over a box of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CechReport {
    pub sequence: MonomialSequence,
    pub checked: DegreeBox,
    /// Degrees with some nonzero cohomology, in box order.
    pub degrees: Vec<DegreeCohomology>,
    /// Every `H^j` with `j` below this index vanishes on the box.
    pub lower_evidence: usize,
    /// The least index with a nonzero piece in the box.
    pub upper: Option<GradeWitness>,
    /// Whether the box already meets every support pattern.
    pub exact: bool,
}

impl CechReport {
    /// Re-derive the upper certificate from the slice model.
    pub fn verify_upper(&self, ring: &QuotientRing) -> Result<bool> {
        let Some(w) = &self.upper else {
            return Ok(true);
        };
        let dims = cech_cohomology_degree(ring, &self.sequence, &w.degree)?;
        Ok(dims[w.index] > 0 && dims[..w.index].iter().all(|&d| d == 0))
    }
}

pub fn cech_report(ring: &QuotientRing, seq: &MonomialSequence, b: &DegreeBox) -> Result<CechReport> {
    let b = b.for_dim(ring.monoid().dim())?;
    let sup = CechSupport::new(ring, seq, None)?;
    let mut cache = PatternCache::new(ring.field(), seq.len());
    let mut degrees = Vec::new();
    let mut seen = BTreeMap::new();
    for a in b.points() {
        let p = sup.pattern(&a)?;
        let dims = cache.get(p).to_vec();
        if dims.iter().any(|&d| d > 0) {
            degrees.push(DegreeCohomology {
                degree: a.clone(),
                dims,
            });
        }
        merge_witness(&mut seen, p, a);
    }
    let upper = least_nonzero(&mut cache, &seen);
    let exact = match exact_patterns(&sup, seq.len())? {
        Some(all) => all.keys().all(|p| seen.contains_key(p)),
        None => false,
    };
    Ok(CechReport {
        sequence: seq.clone(),
        checked: b,
        degrees,
        lower_evidence: upper.as_ref().map_or(seq.len() + 1, |w| w.index),
        upper,
        exact,
    })
}

fn exact_patterns(sup: &CechSupport<'_>, len: usize) -> Result<Option<BTreeMap<u64, IntVector>>> {
    if len > EXACT_MAX_LEN {
        return Ok(None);
    }
    sup.exact_patterns()
}

fn least_nonzero(cache: &mut PatternCache, patterns: &BTreeMap<u64, IntVector>) -> Option<GradeWitness> {
    let mut best: Option<GradeWitness> = None;
    for (&p, a) in patterns {
        let dims = cache.get(p);
        let Some(i) = dims.iter().position(|&d| d > 0) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some(w) => i < w.index || (i == w.index && witness_key(a) < witness_key(&w.degree)),
        };
        if better {
            best = Some(GradeWitness {
                index: i,
                degree: a.clone(),
            });
        }
    }
    best
}

/// The Čech grade `inf{i : H^i_s(R) ≠ 0}` of the ideal generated by `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradeCertificate {
    /// `None` when no cohomology was found at all.
    pub grade: Option<usize>,
    pub witness: Option<IntVector>,
    pub provenance: Provenance,
    /// Number of distinct support patterns examined.
    pub patterns: usize,
}

pub fn cech_grade(ring: &QuotientRing, seq: &MonomialSequence, b: Option<&DegreeBox>) -> Result<GradeCertificate> {
    cech_grade_with(ring, seq, b, GradeMode::Auto)
}

pub fn cech_grade_with(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    b: Option<&DegreeBox>,
    mode: GradeMode,
) -> Result<GradeCertificate> {
    let sup = CechSupport::new(ring, seq, None)?;
    grade_from_support(ring, &sup, b, mode)
}

fn grade_from_support(
    ring: &QuotientRing,
    sup: &CechSupport<'_>,
    b: Option<&DegreeBox>,
    mode: GradeMode,
) -> Result<GradeCertificate> {
    let dim = ring.monoid().dim();
    let exact = match mode {
        GradeMode::Auto => exact_patterns(sup, sup.len())?,
        GradeMode::BoxOnly => None,
    };
    let (patterns, provenance) = match exact {
        Some(p) => (p, Provenance::Certified),
        None => {
            let b = match b {
                Some(b) => b.for_dim(dim)?,
                None => default_box(dim),
            };
            (sup.box_patterns(&b)?, Provenance::BoxEvidence { checked: b })
        }
    };
    let mut cache = PatternCache::new(ring.field(), sup.len());
    let w = least_nonzero(&mut cache, &patterns);
    Ok(GradeCertificate {
        grade: w.as_ref().map(|w| w.index),
        witness: w.map(|w| w.degree),
        provenance,
        patterns: patterns.len(),
    })
}

/// Nonvanishing of `H^i_s(R)` after inverting the monomials of a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizedNonvanishing {
    pub index: usize,
    pub nonzero: bool,
    pub witness: Option<IntVector>,
    /// The least index with a nonzero localized piece.
    pub grade: Option<usize>,
    pub provenance: Provenance,
}

pub fn localized_cech_nonvanishing(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    prime: &FacePrime,
    i: usize,
    b: Option<&DegreeBox>,
) -> Result<LocalizedNonvanishing> {
    if !seq.exponents().iter().all(|c| prime.contains(c)) {
        return Err(Error::PrimeDoesNotContain);
    }
    if i > seq.len() {
        return Err(Error::InvalidConfig(format!("index {i} exceeds sequence length")));
    }
    let sup = CechSupport::new(ring, seq, Some(&prime.face))?;
    let dim = ring.monoid().dim();
    let (patterns, provenance) = match exact_patterns(&sup, seq.len())? {
        Some(p) => (p, Provenance::Certified),
        None => {
            let b = match b {
                Some(b) => b.for_dim(dim)?,
                None => default_box(dim),
            };
            (sup.box_patterns(&b)?, Provenance::BoxEvidence { checked: b })
        }
    };
    let mut cache = PatternCache::new(ring.field(), seq.len());
    let mut witness: Option<IntVector> = None;
    for (&p, a) in &patterns {
        if cache.get(p)[i] > 0 && witness.as_ref().is_none_or(|w| witness_key(a) < witness_key(w)) {
            witness = Some(a.clone());
        }
    }
    let g = least_nonzero(&mut cache, &patterns);
    Ok(LocalizedNonvanishing {
        index: i,
        nonzero: witness.is_some(),
        witness,
        grade: g.map(|w| w.index),
        provenance,
    })
}
