use serde::{Deserialize, Serialize};

use super::{AffineMonoid, Monoid, OracleFamily, OracleMonoid};
use crate::error::{Error, Result};
use crate::exactlin::cone::dual_extreme_rays;
use crate::exactlin::hilbert::{hilbert_basis_coords, hilbert_basis_in};
use crate::exactlin::{DegreeBox, IntVector, Lattice, SpanCone};

/// Where the integral closure is taken.
#[derive(Clone, Debug)]
pub enum ClosureAmbient {
    GroupOfDifferences,
    FullLattice,
    Oracle(OracleMonoid),
}

/// `{x ∈ M : m·x ∈ N for some m ≥ 1}` for the chosen ambient `M`.
pub fn integral_closure(n: &AffineMonoid, ambient: &ClosureAmbient) -> Result<AffineMonoid> {
    let dim = n.dim();
    let hb = match ambient {
        ClosureAmbient::GroupOfDifferences => n.saturation_basis().to_vec(),
        ClosureAmbient::FullLattice => hilbert_basis_in(n.generators(), &Lattice::full(dim))?,
        ClosureAmbient::Oracle(m) => {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            if !m.is_normal() {
                return Err(Error::Unsupported(
                    "closure inside a non-normal wrapped monoid".into(),
                ));
            }
            if let Some(g) = n.generators().iter().find(|g| !m.contains(g)) {
                return Err(Error::NotContained(g.to_string()));
            }
            // Every catalog family is its closure cone intersected with its
            // group, away from faces that no monoid element reaches; the cone
            // of a submonoid avoids those.
            let hb = hilbert_basis_in(n.generators(), m.lattice())?;
            if let Some(h) = hb.iter().find(|h| !m.contains(h)) {
                return Err(Error::NotContained(h.to_string()));
            }
            hb
        }
    };
    AffineMonoid::new(dim, &hb)
}

/// Outcome of a fullness test `gp(M) ∩ N ⊆ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FullVerdict {
    Full,
    /// `witness = plus − minus` with `plus, minus ∈ M` and `witness ∈ N ∖ M`.
    NotFull {
        witness: IntVector,
        plus: IntVector,
        minus: IntVector,
    },
    /// No counterexample inside the box; not a proof.
    FullWithinBox { checked: DegreeBox },
}

/// Whether `M ⊆ N` is full: differences of elements of `M` that land in `N`
/// already lie in `M`.
pub fn is_full(m: &AffineMonoid, n: &Monoid, b: &DegreeBox) -> Result<FullVerdict> {
    if n.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: n.dim(),
        });
    }
    if let Some(g) = m.generators().iter().find(|g| !n.contains(g)) {
        return Err(Error::NotContained(g.to_string()));
    }
    if m.rank() == 0 || n.affine_view().is_some_and(|a| a == m) {
        return Ok(FullVerdict::Full);
    }
    if let Some(ineqs) = lattice_description(n)? {
        // gp(M) ∩ N is the cone cut out by N's inequalities inside gp(M);
        // it is full exactly when its Hilbert basis lies in M.
        let gp = m.lattice();
        let r = gp.rank();
        let rows: Vec<IntVector> = ineqs
            .iter()
            .map(|phi| IntVector::new(gp.basis().iter().map(|b| b.dot(phi)).collect()))
            .collect();
        let zrays = dual_extreme_rays(&rows, r)?;
        let rays: Vec<IntVector> = zrays.iter().map(|z| gp.from_coords(z.coords())).collect();
        let sc = SpanCone::new(&rays, gp)?;
        for z in hilbert_basis_coords(&sc)? {
            let h = sc.lattice.from_coords(z.coords());
            if !m.contains(&h) {
                return not_full(m, h);
            }
        }
        return Ok(FullVerdict::Full);
    }
    let b = b.for_dim(m.dim())?;
    for v in b.points() {
        if m.lattice().contains(&v) && n.contains(&v) && !m.contains(&v) {
            return not_full(m, v);
        }
    }
    Ok(FullVerdict::FullWithinBox { checked: b })
}

/// Inequalities φ with `N = {x ∈ gp(N) : ⟨φ, x⟩ ≥ 0}` when `N` is normal and
/// equal to its closed cone intersected with its group.
fn lattice_description(n: &Monoid) -> Result<Option<Vec<IntVector>>> {
    if let Some(a) = n.affine_view() {
        if a.is_normal() {
            return Ok(Some(a.facet_functionals()?));
        }
        return Ok(None);
    }
    if let Monoid::Oracle(o) = n {
        if let OracleFamily::VeroneseCongruence { s, .. } = o.family() {
            return Ok(Some((0..*s).map(|i| IntVector::unit(*s, i)).collect()));
        }
    }
    Ok(None)
}

fn not_full(m: &AffineMonoid, w: IntVector) -> Result<FullVerdict> {
    let mut total = IntVector::zero(m.dim());
    for g in m.generators() {
        total = &total + g;
    }
    for k in 1..=64 {
        for g in m.generators().iter().chain(std::iter::once(&total)) {
            let minus = g.scale(k);
            let plus = &w + &minus;
            if m.contains(&plus) {
                return Ok(FullVerdict::NotFull {
                    witness: w,
                    plus,
                    minus,
                });
            }
        }
    }
    Err(Error::Unsupported(format!("no difference representation found for {w}")))
}

/// The stage `C'_X`: the integral closure of `⟨X⟩` in its own group of
/// differences, checked to lie in `C`.
pub fn saturated_stage(c: &Monoid, x: &[IntVector]) -> Result<AffineMonoid> {
    for v in x {
        v.check_dim(c.dim())?;
        if !c.contains(v) {
            return Err(Error::NotContained(v.to_string()));
        }
    }
    let nx = AffineMonoid::new(c.dim(), x)?;
    let stage = integral_closure(&nx, &ClosureAmbient::GroupOfDifferences)?;
    if let Some(h) = stage.generators().iter().find(|h| !c.contains(h)) {
        return Err(Error::NotContained(h.to_string()));
    }
    Ok(stage)
}

/// A chain of affine submonoids of an ambient monoid, indexed by finite
/// generating sets ordered by inclusion.
#[derive(Clone, Debug)]
pub struct DirectSystemOfMonoids {
    pub ambient: Monoid,
    pub index: Vec<Vec<IntVector>>,
    pub stages: Vec<AffineMonoid>,
}

impl DirectSystemOfMonoids {
    /// Box check that consecutive stages are nested and inside the ambient.
    pub fn check_on(&self, b: &DegreeBox) -> Result<()> {
        let b = b.for_dim(self.ambient.dim())?;
        for v in b.points() {
            let mut prev = false;
            for s in &self.stages {
                let inside = s.contains(&v);
                if prev && !inside {
                    return Err(Error::NotContained(format!("{v} leaves a later stage")));
                }
                if inside && !self.ambient.contains(&v) {
                    return Err(Error::NotContained(format!("{v} not in the ambient monoid")));
                }
                prev = inside;
            }
        }
        Ok(())
    }

    /// Whether the last stage agrees with the ambient monoid on a box.
    pub fn exhausts_on(&self, b: &DegreeBox) -> Result<bool> {
        let b = b.for_dim(self.ambient.dim())?;
        let last = match self.stages.last() {
            Some(s) => s,
            None => return Ok(false),
        };
        Ok(b.points().all(|v| last.contains(&v) == self.ambient.contains(&v)))
    }
}

/// `H_0 ⊆ H_1 ⊆ … ⊆ H_nMax` inside `H`.
pub fn hn_filtration(n_max: u32) -> Result<DirectSystemOfMonoids> {
    let mut index = Vec::new();
    let mut stages = Vec::new();
    for n in 0..=n_max as i64 {
        let x: Vec<IntVector> = (0..=n).map(|i| IntVector::new(vec![1, i])).collect();
        stages.push(AffineMonoid::new(2, &x)?);
        index.push(x);
    }
    Ok(DirectSystemOfMonoids {
        ambient: Monoid::slope_halfplane(),
        index,
        stages,
    })
}

/// Stages `C'_X` for an increasing list of finite subsets.
pub fn saturated_system(c: &Monoid, xs: &[Vec<IntVector>]) -> Result<DirectSystemOfMonoids> {
    let stages = xs.iter().map(|x| saturated_stage(c, x)).collect::<Result<Vec<_>>>()?;
    Ok(DirectSystemOfMonoids {
        ambient: c.clone(),
        index: xs.to_vec(),
        stages,
    })
}

/// The Veronese congruence monoid inside `Z^s`, by its Hilbert basis.
pub fn veronese_truncation(d: u32, s: usize) -> Result<AffineMonoid> {
    let o = OracleMonoid::veronese(d, s)?;
    let units: Vec<IntVector> = (0..s).map(|i| IntVector::unit(s, i)).collect();
    let hb = hilbert_basis_in(&units, o.lattice())?;
    AffineMonoid::new(s, &hb)
}
