use super::{Condition, ConditionResult, ScopeTag, SequenceVerdict};
use crate::error::{Error, Result};
use crate::exactlin::DegreeBox;
use crate::homology::{
    localized_cech_nonvanishing, weak_proregular_check, MonomialSequence, WeakProregularity,
};
use crate::ring::{Certificate, MonomialIdeal, QuotientRing};

/// Whether each `x_i` is a nonzerodivisor on `R/(x_1, …, x_{i−1})`.
pub fn is_regular_sequence(
    seq: &MonomialSequence,
    ring: &QuotientRing,
    b: Option<&DegreeBox>,
) -> Result<SequenceVerdict> {
    let ideal = ring.ideal();
    for c in seq.exponents() {
        if ideal.contains_exponent(c) {
            return Err(Error::ZeroInQuotient(c.to_string()));
        }
    }
    let mut conditions = Vec::new();
    let mut current = ideal.clone();
    for (k, c) in seq.exponents().iter().enumerate() {
        let colon = current.colon_monomial(c, b)?;
        let witness = colon
            .ideal
            .generators()
            .iter()
            .find(|g| !current.contains_exponent(g))
            .cloned();
        conditions.push(ConditionResult {
            condition: Condition::RegularStep { step: k + 1 },
            passed: witness.is_none(),
            tag: match (&colon.certificate, &witness) {
                // A colon element outside the ideal is a witness in any case.
                (Certificate::Certified, _) | (_, Some(_)) => ScopeTag::Certified,
                _ => ScopeTag::BoxEvidence,
            },
            witness,
        });
        current = current.sum(&MonomialIdeal::new(ring.monoid(), std::slice::from_ref(c))?)?;
    }
    let proper = !current.is_unit();
    conditions.push(ConditionResult {
        condition: Condition::Proper,
        passed: proper,
        witness: None,
        tag: ScopeTag::Certified,
    });
    Ok(SequenceVerdict::assemble(seq.clone(), conditions, &[]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterConfig {
    /// Degrees scanned for weak proregularity and any box-bound step.
    pub degree_box: DegreeBox,
    pub m_max: u32,
}

impl ParameterConfig {
    pub fn new(degree_box: DegreeBox, m_max: u32) -> Self {
        ParameterConfig { degree_box, m_max }
    }
}

/// Weak proregularity, `(x)R ≠ R`, and `H^ℓ_x(R)` nonzero after localizing at
/// each minimal face prime of `(x)R`.
pub fn is_parameter_sequence(
    seq: &MonomialSequence,
    ring: &QuotientRing,
    cfg: &ParameterConfig,
) -> Result<SequenceVerdict> {
    let m = ring.monoid();
    let mut conditions = Vec::new();
    let gens = MonomialIdeal::new(m, seq.exponents())?;
    let total = ring.ideal().sum(&gens)?;
    conditions.push(ConditionResult {
        condition: Condition::Proper,
        passed: !total.is_unit(),
        witness: None,
        tag: ScopeTag::Certified,
    });
    let wpr = weak_proregular_check(ring, seq, &cfg.degree_box, cfg.m_max)?;
    let (passed, witness) = match &wpr.verdict {
        WeakProregularity::HoldsUpTo { .. } | WeakProregularity::ColonStabilized => (true, None),
        WeakProregularity::FailsAt { degree, .. } => (false, Some(degree.clone())),
    };
    conditions.push(ConditionResult {
        condition: Condition::WeakProregular,
        passed,
        witness,
        tag: (&wpr.provenance).into(),
    });
    let l = seq.len();
    for p in total.min_face_primes() {
        let v = localized_cech_nonvanishing(ring, seq, &p, l, Some(&cfg.degree_box))?;
        conditions.push(ConditionResult {
            condition: Condition::LocalizedNonvanishing {
                face: p.face.relint.clone(),
                height: p.height,
            },
            passed: v.nonzero,
            witness: v.witness,
            tag: (&v.provenance).into(),
        });
    }
    Ok(SequenceVerdict::assemble(seq.clone(), conditions, &[ScopeTag::MonomialScope]))
}

/// Every prefix `x_1, …, x_i` is a parameter sequence.
pub fn is_strong_parameter_sequence(
    seq: &MonomialSequence,
    ring: &QuotientRing,
    cfg: &ParameterConfig,
) -> Result<SequenceVerdict> {
    let mut conditions = Vec::new();
    let mut extra = vec![ScopeTag::MonomialScope];
    for len in 1..=seq.len() {
        let prefix = MonomialSequence::new(ring.monoid(), seq.exponents()[..len].to_vec())?;
        let v = is_parameter_sequence(&prefix, ring, cfg)?;
        extra.extend(v.tags.iter().copied());
        let failure = v.failure();
        conditions.push(ConditionResult {
            condition: Condition::Prefix { len },
            passed: v.holds,
            witness: failure.and_then(|f| f.witness.clone()),
            tag: if v.is_certified() {
                ScopeTag::Certified
            } else {
                ScopeTag::BoxEvidence
            },
        });
    }
    Ok(SequenceVerdict::assemble(seq.clone(), conditions, &extra))
}
