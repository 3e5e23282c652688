use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::sequence::MonomialSequence;
use super::slice::{SliceComplex, SliceKind};
use super::support::koszul_pattern;
use super::Provenance;
use crate::error::{Error, Result};
use crate::exactlin::{DegreeBox, IntVector};
use crate::ring::linalg::{self, Vector};
use crate::ring::{Certificate, Field, FieldScalar, QuotientRing};

/// The degree-`a` slice of `K•(X^{p_1 c_1}, …, X^{p_ℓ c_ℓ}) ⊗ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulSlice {
    pub powers: Vec<u32>,
    pub degree: IntVector,
    pub complex: SliceComplex,
    field: Field,
}

impl KoszulSlice {
    /// Uniform power `m` for every element.
    pub fn new(ring: &QuotientRing, seq: &MonomialSequence, m: u32, a: &IntVector) -> Result<Self> {
        Self::with_powers(ring, seq, &vec![m; seq.len()], a)
    }

    pub fn with_powers(
        ring: &QuotientRing,
        seq: &MonomialSequence,
        powers: &[u32],
        a: &IntVector,
    ) -> Result<Self> {
        if powers.len() != seq.len() {
            return Err(Error::DimensionMismatch {
                expected: seq.len(),
                found: powers.len(),
            });
        }
        a.check_dim(ring.monoid().dim())?;
        let present = koszul_pattern(ring, seq, powers, a);
        Ok(KoszulSlice {
            powers: powers.to_vec(),
            degree: a.clone(),
            complex: SliceComplex::new(SliceKind::Koszul, seq.len(), present),
            field: ring.field(),
        })
    }

    /// `d_i : K_i → K_{i−1}` as rows over the target basis.
    pub fn boundary(&self, i: usize) -> Vec<Vector> {
        self.complex.differential(self.field, i)
    }

    pub fn homology(&self) -> Vec<usize> {
        self.complex.cohomology(self.field)
    }
}

/// `dim_k H_i(K•(x^m) ⊗ R)_a` for `i = 0..=ℓ`.
pub fn koszul_homology(ring: &QuotientRing, seq: &MonomialSequence, m: u32, a: &IntVector) -> Result<Vec<usize>> {
    Ok(KoszulSlice::new(ring, seq, m, a)?.homology())
}

/// The map `H_i(K(x^m))_a → H_i(K(x^n))_a` in chosen bases of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMap {
    pub index: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    /// `target_dim` rows of `source_dim` entries.
    pub matrix: Vec<Vec<FieldScalar>>,
}

impl TransitionMap {
    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|x| x.is_zero())
    }
}

/// Columns of a matrix given by rows.
fn columns(m: &[Vector], ncols: usize) -> Vec<Vector> {
    (0..ncols).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect()
}

/// Cycles, an independent spanning set of boundaries, and cycles completing
/// the boundaries to a cycle basis, all at index `i`.
struct HomologyBasis {
    basis: Vec<u32>,
    boundaries: Vec<Vector>,
    reps: Vec<Vector>,
}

fn homology_basis(c: &SliceComplex, field: Field, i: usize) -> HomologyBasis {
    let basis = c.basis(i);
    let n = basis.len();
    let cycles = linalg::kernel(field, &c.differential(field, i), n);
    let incoming = if i < c.len {
        columns(&c.differential(field, i + 1), c.basis(i + 1).len())
    } else {
        vec![]
    };
    let boundaries = linalg::extend_basis(&[], &incoming, n);
    let reps = linalg::extend_basis(&boundaries, &cycles, n);
    HomologyBasis {
        basis,
        boundaries,
        reps,
    }
}

/// The chain map `e_S ↦ X^{Σ_{j∈S}(m_j−n_j)c_j} e_S` on index `i`.
fn push_forward(src: &HomologyBasis, tgt: &HomologyBasis, field: Field, v: &[FieldScalar]) -> Vector {
    let mut out = vec![field.zero(); tgt.basis.len()];
    for (k, s) in src.basis.iter().enumerate() {
        if let Ok(r) = tgt.basis.binary_search(s) {
            out[r] = v[k].clone();
        }
    }
    out
}

fn transition_of(field: Field, src: &SliceComplex, tgt: &SliceComplex, i: usize) -> TransitionMap {
    let hs = homology_basis(src, field, i);
    let ht = homology_basis(tgt, field, i);
    let mut frame = ht.boundaries.clone();
    frame.extend(ht.reps.iter().cloned());
    let nb = ht.boundaries.len();
    let cols: Vec<Vector> = hs
        .reps
        .iter()
        .map(|r| {
            let img = push_forward(&hs, &ht, field, r);
            let x = linalg::coordinates(field, &frame, &img).expect("cycles map to cycles");
            x[nb..].to_vec()
        })
        .collect();
    let matrix = (0..ht.reps.len())
        .map(|row| cols.iter().map(|c| c[row].clone()).collect())
        .collect();
    TransitionMap {
        index: i,
        source_dim: hs.reps.len(),
        target_dim: ht.reps.len(),
        matrix,
    }
}

fn transition_zero(field: Field, src: &SliceComplex, tgt: &SliceComplex, i: usize) -> bool {
    let hs = homology_basis(src, field, i);
    if hs.reps.is_empty() {
        return true;
    }
    let ht = homology_basis(tgt, field, i);
    let mut all = ht.boundaries.clone();
    let n = ht.basis.len();
    let before = all.len();
    all.extend(hs.reps.iter().map(|r| push_forward(&hs, &ht, field, r)));
    linalg::rank(&all, n) == before
}

/// The transition `H_i(K(x^m))_a → H_i(K(x^n))_a` for `m ≥ n`.
pub fn koszul_transition(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    m: u32,
    n: u32,
    i: usize,
    a: &IntVector,
) -> Result<TransitionMap> {
    let l = seq.len();
    koszul_transition_powers(ring, seq, &vec![m; l], &vec![n; l], i, a)
}

/// Componentwise powers; `m_j ≥ n_j` for every `j`.
pub fn koszul_transition_powers(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    m: &[u32],
    n: &[u32],
    i: usize,
    a: &IntVector,
) -> Result<TransitionMap> {
    if m.len() != n.len() || m.iter().zip(n).any(|(x, y)| x < y) {
        return Err(Error::InvalidPowers(format!("{m:?} does not dominate {n:?}")));
    }
    if i > seq.len() {
        return Err(Error::InvalidConfig(format!("index {i} exceeds sequence length")));
    }
    let src = KoszulSlice::with_powers(ring, seq, m, a)?;
    let tgt = KoszulSlice::with_powers(ring, seq, n, a)?;
    Ok(transition_of(ring.field(), &src.complex, &tgt.complex, i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WeakProregularity {
    /// Every `n ≤ ⌈m_max/2⌉` has an `m ≤ m_max` killing all transitions.
    HoldsUpTo { m_max: u32 },
    /// No `m ≤ m_max` kills the transitions into `K(x^n)`; the witness is the
    /// first nonzero map from `K(x^{m_max})`.
    FailsAt { n: u32, index: usize, degree: IntVector },
    /// `(I : s) = (I : s²)` for the single element `s`.
    ColonStabilized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonStabilization {
    pub stabilized: bool,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakProregularReport {
    pub verdict: WeakProregularity,
    pub provenance: Provenance,
    pub colon: Option<ColonStabilization>,
}

pub fn weak_proregular_check(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    b: &DegreeBox,
    m_max: u32,
) -> Result<WeakProregularReport> {
    if m_max == 0 {
        return Err(Error::InvalidPowers("m_max must be at least 1".into()));
    }
    let b = b.for_dim(ring.monoid().dim())?;
    let colon = if seq.len() == 1 {
        let s = &seq.exponents()[0];
        let c1 = ring.ideal().colon_monomial(s, Some(&b))?;
        let c2 = ring.ideal().colon_monomial(&s.scale(2), Some(&b))?;
        Some(ColonStabilization {
            stabilized: c1.ideal == c2.ideal,
            certified: matches!(
                (&c1.certificate, &c2.certificate),
                (Certificate::Certified, Certificate::Certified)
            ),
        })
    } else {
        None
    };
    if let Some(c) = &colon {
        if c.stabilized && !c.certified {
            return Ok(WeakProregularReport {
                verdict: WeakProregularity::ColonStabilized,
                provenance: Provenance::BoxEvidence { checked: b },
                colon,
            });
        }
    }
    let field = ring.field();
    let l = seq.len();
    let points: Vec<IntVector> = b.points().collect();
    let masks: Vec<Vec<u64>> = (1..=m_max)
        .map(|m| {
            points
                .par_iter()
                .map(|a| koszul_pattern(ring, seq, &vec![m; l], a))
                .collect()
        })
        .collect();
    let complex = |p: u64| SliceComplex::new(SliceKind::Koszul, l, p);
    let mut cache: HashMap<(u64, u64, usize), bool> = HashMap::new();
    let mut zero = |pm: u64, pn: u64, i: usize| -> bool {
        *cache
            .entry((pm, pn, i))
            .or_insert_with(|| transition_zero(field, &complex(pm), &complex(pn), i))
    };
    let n_max = m_max.div_ceil(2);
    for n in 1..=n_max {
        let tn = &masks[(n - 1) as usize];
        let found = (n..=m_max).any(|m| {
            let tm = &masks[(m - 1) as usize];
            (0..points.len()).all(|k| (1..=l).all(|i| zero(tm[k], tn[k], i)))
        });
        if !found {
            let tm = &masks[(m_max - 1) as usize];
            for (k, a) in points.iter().enumerate() {
                for i in 1..=l {
                    if !zero(tm[k], tn[k], i) {
                        return Ok(WeakProregularReport {
                            verdict: WeakProregularity::FailsAt {
                                n,
                                index: i,
                                degree: a.clone(),
                            },
                            provenance: Provenance::BoxEvidence { checked: b },
                            colon,
                        });
                    }
                }
            }
        }
    }
    Ok(WeakProregularReport {
        verdict: WeakProregularity::HoldsUpTo { m_max },
        provenance: Provenance::BoxEvidence { checked: b },
        colon,
    })
}
