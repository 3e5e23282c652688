use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::ideals::bounded_elements;
use super::sequences::{is_parameter_sequence, is_regular_sequence, ParameterConfig};
use super::{settle, ScopeTag};
use crate::error::Result;
use crate::exactlin::{DegreeBox, IntVector};
use crate::homology::MonomialSequence;
use crate::ring::{subsets, QuotientRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessConfig {
    /// Candidate monomials have coordinates in `0..=degree_bound`.
    pub degree_bound: i64,
    /// Longest sequence tried, at most 3.
    pub max_len: usize,
    pub parameter: ParameterConfig,
    /// Box for colons that cannot be certified.
    pub colon_box: Option<DegreeBox>,
}

impl HarnessConfig {
    pub fn new(degree_bound: i64, max_len: usize, parameter: ParameterConfig) -> Self {
        HarnessConfig {
            degree_bound,
            max_len: max_len.min(3),
            parameter,
            colon_box: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessRow {
    pub sequence: MonomialSequence,
    pub parameter: bool,
    pub strong_parameter: bool,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub ring: String,
    pub rows: Vec<HarnessRow>,
    pub strong_parameter_count: usize,
    /// Strong parameter sequences that are not regular.
    pub counterexamples: Vec<MonomialSequence>,
    /// Every permutation of a parameter sequence was again one.
    pub permutation_invariant: bool,
    /// On rings without a proper ideal part over a normal affine monoid:
    /// whether parameter and regular agreed on every row.
    pub parameter_iff_regular: Option<bool>,
    pub tags: BTreeSet<ScopeTag>,
}

impl HarnessReport {
    /// No monomial counterexample to "strong parameter ⟹ regular".
    pub fn consistent_with_cm(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// All orderings of `items`, in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Enumerate monomial sequences, find the strong parameter sequences and
/// test each for regularity.
pub fn hamilton_marley_harness(ring: &QuotientRing, cfg: &HarnessConfig) -> Result<HarnessReport> {
    let m = ring.monoid();
    let cands: Vec<IntVector> = bounded_elements(m, cfg.degree_bound)?
        .into_iter()
        .filter(|c| !ring.ideal().contains_exponent(c))
        .collect();
    let mut tags = BTreeSet::from([ScopeTag::MonomialSequencesOnly, ScopeTag::MonomialScope]);
    let mut memo: HashMap<Vec<IntVector>, bool> = HashMap::new();
    let mut parameter = |exps: &[IntVector], tags: &mut BTreeSet<ScopeTag>| -> Result<bool> {
        if let Some(&v) = memo.get(exps) {
            return Ok(v);
        }
        let seq = MonomialSequence::new(m, exps.to_vec())?;
        let v = is_parameter_sequence(&seq, ring, &cfg.parameter)?;
        tags.extend(v.tags.iter().copied());
        memo.insert(exps.to_vec(), v.holds);
        Ok(v.holds)
    };
    let mut rows = Vec::new();
    let mut permutation_invariant = true;
    for len in 1..=cfg.max_len.min(3) {
        for combo in subsets(cands.len(), len) {
            let mut verdicts = Vec::new();
            for order in permutations(&combo) {
                let exps: Vec<IntVector> = order.iter().map(|&i| cands[i].clone()).collect();
                let is_param = parameter(&exps, &mut tags)?;
                let mut strong = is_param;
                for k in 1..len {
                    if !strong {
                        break;
                    }
                    strong = parameter(&exps[..k], &mut tags)?;
                }
                let seq = MonomialSequence::new(m, exps)?;
                let reg = is_regular_sequence(&seq, ring, cfg.colon_box.as_ref())?;
                tags.extend(reg.tags.iter().copied());
                verdicts.push(is_param);
                rows.push(HarnessRow {
                    sequence: seq,
                    parameter: is_param,
                    strong_parameter: strong,
                    regular: reg.holds,
                });
            }
            if verdicts.iter().any(|&v| v) && !verdicts.iter().all(|&v| v) {
                permutation_invariant = false;
            }
        }
    }
    let counterexamples: Vec<MonomialSequence> = rows
        .iter()
        .filter(|r| r.strong_parameter && !r.regular)
        .map(|r| r.sequence.clone())
        .collect();
    let normal_free = ring.ideal().is_zero() && m.affine_view().is_some_and(|a| a.is_normal());
    let parameter_iff_regular = normal_free.then(|| rows.iter().all(|r| r.parameter == r.regular));
    Ok(HarnessReport {
        ring: format!("{}/{}", m, ring.ideal()),
        strong_parameter_count: rows.iter().filter(|r| r.strong_parameter).count(),
        rows,
        counterexamples,
        permutation_invariant,
        parameter_iff_regular,
        tags: settle(tags),
    })
}
