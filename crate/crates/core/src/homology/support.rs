//! Which components of a degree slice are nonzero.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::sequence::MonomialSequence;
use crate::error::{Error, Result};
use crate::exactlin::matrix::{det_big, solve_rational, to_big_rows};
use crate::exactlin::{DegreeBox, IntVector, Lattice};
use crate::monoids::{Face, Monoid, OracleFamily};
use crate::ring::{subsets, QuotientRing};

/// Lattice points scanned by the exact pattern search before it gives up.
pub const EXACT_BUDGET: u64 = 2_000_000;

/// Ordering for witness degrees: nonnegative coordinates first, then small
/// `ℓ¹` norm, then lexicographic.
pub fn witness_key(a: &IntVector) -> (usize, i64, IntVector) {
    let neg = a.coords().iter().filter(|&&x| x < 0).count();
    let l1 = a.coords().iter().map(|x| x.abs()).sum();
    (neg, l1, a.clone())
}

/// Keep the preferred witness per key.
pub(crate) fn merge_witness<K: Ord>(map: &mut BTreeMap<K, IntVector>, k: K, a: IntVector) {
    match map.get(&k) {
        Some(old) if witness_key(old) <= witness_key(&a) => {}
        _ => {
            map.insert(k, a);
        }
    }
}

enum Engine {
    /// Normal affine: everything is decided by facet values in lattice
    /// coordinates.
    Facets {
        lattice: Lattice,
        facets: Vec<IntVector>,
        shifts: Vec<Vec<i64>>,
        gens: Vec<Vec<i64>>,
    },
    Generic,
}

/// Nonzero components of the Čech complex of a sequence on `k[C]/I`,
/// optionally after inverting the monomials of a face.
pub(crate) struct CechSupport<'a> {
    ring: &'a QuotientRing,
    len: usize,
    /// `c_S + f₀` indexed by mask.
    shifts: Vec<IntVector>,
    engine: Engine,
}

impl<'a> CechSupport<'a> {
    pub fn new(ring: &'a QuotientRing, seq: &MonomialSequence, face: Option<&Face>) -> Result<Self> {
        let m = ring.monoid();
        seq.exponents()[0].check_dim(m.dim())?;
        let f0 = face.map(|f| f.relint.clone());
        let shifts: Vec<IntVector> = (0..1u32 << seq.len())
            .map(|s| {
                let c = seq.subset_sum(s);
                match &f0 {
                    Some(f) => &c + f,
                    None => c,
                }
            })
            .collect();
        let engine = match m.affine_view() {
            Some(a) if a.is_normal() && a.rank() > 0 => {
                let lattice = a.lattice().clone();
                let facets = a.span_cone().facets.clone();
                let phi = |v: &IntVector| -> Vec<i64> {
                    let z = IntVector::new(lattice.coords(v).expect("monoid element"));
                    facets.iter().map(|n| n.dot(&z)).collect()
                };
                let sh = shifts.iter().map(phi).collect();
                let gens = ring.ideal().generators().iter().map(phi).collect();
                Engine::Facets {
                    lattice,
                    facets,
                    shifts: sh,
                    gens,
                }
            }
            _ => {
                if let Some(a) = m.affine_view() {
                    if !a.is_normal() {
                        return Err(Error::Unsupported(
                            "Čech slices over a non-normal affine monoid".into(),
                        ));
                    }
                }
                Engine::Generic
            }
        };
        Ok(CechSupport {
            ring,
            len: seq.len(),
            shifts,
            engine,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    fn pattern_phi(&self, pa: &[i64], shifts: &[Vec<i64>], gens: &[Vec<i64>]) -> u64 {
        let n = pa.len();
        let mut out = 0u64;
        for (mask, s) in shifts.iter().enumerate() {
            if !(0..n).all(|k| s[k] > 0 || pa[k] >= 0) {
                continue;
            }
            if gens.iter().any(|g| (0..n).all(|k| s[k] > 0 || pa[k] >= g[k])) {
                continue;
            }
            out |= 1 << mask;
        }
        out
    }

    /// Bit `S` is set iff the `S`-component at degree `a` is `k`.
    pub fn pattern(&self, a: &IntVector) -> Result<u64> {
        a.check_dim(self.ring.monoid().dim())?;
        match &self.engine {
            Engine::Facets {
                lattice,
                facets,
                shifts,
                gens,
            } => {
                let Some(z) = lattice.coords(a) else {
                    return Ok(0);
                };
                let z = IntVector::new(z);
                let pa: Vec<i64> = facets.iter().map(|n| n.dot(&z)).collect();
                Ok(self.pattern_phi(&pa, shifts, gens))
            }
            Engine::Generic => {
                let m = self.ring.monoid();
                let mut out = 0u64;
                for (mask, c) in self.shifts.iter().enumerate() {
                    if !m.reaches(a, c)? {
                        continue;
                    }
                    let mut hit = false;
                    for g in self.ring.ideal().generators() {
                        if m.reaches(&(a - g), c)? {
                            hit = true;
                            break;
                        }
                    }
                    if !hit {
                        out |= 1 << mask;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Simplicial cones: `φ` maps the lattice onto a sublattice of index
    /// `det` containing `det·Z^r`, so every nonempty threshold cell meets
    /// the window `[min − det, max + det)` in each facet value.
    fn simplicial_patterns(
        &self,
        lattice: &Lattice,
        facets: &[IntVector],
        thresholds: &[(i64, i64)],
        shifts: &[Vec<i64>],
        gens: &[Vec<i64>],
    ) -> Option<BTreeMap<u64, IntVector>> {
        let r = facets.len();
        let det = det_big(&to_big_rows(facets)).abs().to_i64()?;
        let cols: Vec<IntVector> = (0..r)
            .map(|j| IntVector::new(facets.iter().map(|n| n[j]).collect()))
            .collect();
        // adj = det·Φ⁻¹, stored by columns.
        let mut adj = vec![vec![0i64; r]; r];
        for k in 0..r {
            let mut e = vec![0; r];
            e[k] = 1;
            let z = solve_rational(&cols, &IntVector::new(e))?;
            for j in 0..r {
                let x = &z[j] * BigRational::from_integer(det.into());
                adj[k][j] = x.to_integer().to_i64()?;
            }
        }
        let window = DegreeBox::new(thresholds.iter().map(|&(lo, hi)| (lo - det, hi + det - 1)).collect()).ok()?;
        let mut side = 1u64;
        for k in 0..r {
            side = side.saturating_mul(window.ranges()[k].1.abs_diff(window.ranges()[k].0) + 1);
        }
        if side > EXACT_BUDGET {
            return None;
        }
        let mut out = BTreeMap::new();
        for w in window.points() {
            let mut z = vec![0i64; r];
            for (k, col) in adj.iter().enumerate() {
                for j in 0..r {
                    z[j] += col[j] * w[k];
                }
            }
            if z.iter().any(|x| x % det != 0) {
                continue;
            }
            let z: Vec<i64> = z.iter().map(|x| x / det).collect();
            let p = self.pattern_phi(w.coords(), shifts, gens);
            merge_witness(&mut out, p, lattice.from_coords(&z));
        }
        Some(out)
    }

    /// Patterns over a box with their preferred witness degrees.
    pub fn box_patterns(&self, b: &DegreeBox) -> Result<BTreeMap<u64, IntVector>> {
        let points: Vec<IntVector> = b.points().collect();
        let pats: Vec<u64> = points
            .par_iter()
            .map(|a| self.pattern(a))
            .collect::<Result<Vec<_>>>()?;
        let mut out = BTreeMap::new();
        for (a, p) in points.into_iter().zip(pats) {
            merge_witness(&mut out, p, a);
        }
        Ok(out)
    }

    /// Every pattern occurring in any degree, when a finite search provably
    /// meets all of them within the budget.
    pub fn exact_patterns(&self) -> Result<Option<BTreeMap<u64, IntVector>>> {
        match &self.engine {
            Engine::Facets {
                lattice,
                facets,
                shifts,
                gens,
            } => {
                let r = lattice.rank();
                // The pattern only sees on which side of each threshold
                // φ_k(a) lies.
                let thresholds: Vec<(i64, i64)> = (0..facets.len())
                    .map(|k| {
                        let ts = gens.iter().map(|g| g[k]).chain([0]);
                        (ts.clone().min().unwrap_or(0), ts.max().unwrap_or(0))
                    })
                    .collect();
                if facets.len() == r {
                    return Ok(self.simplicial_patterns(lattice, facets, &thresholds, shifts, gens));
                }
                let Some(radii) = vertex_radii(facets, r, &thresholds) else {
                    return Ok(None);
                };
                let d = max_minor(facets, r);
                let radii: Vec<i64> = radii.iter().map(|x| x.saturating_add((r as i64).saturating_mul(d))).collect();
                let side = radii.iter().fold(1u64, |acc, x| acc.saturating_mul((2 * x + 1) as u64));
                if side > EXACT_BUDGET {
                    return Ok(None);
                }
                let z_box = DegreeBox::new(radii.iter().map(|&x| (-x, x)).collect())?;
                let points: Vec<IntVector> = z_box.points().collect();
                let parts: Vec<(u64, IntVector)> = points
                    .par_iter()
                    .map(|z| {
                        let pa: Vec<i64> = facets.iter().map(|n| n.dot(z)).collect();
                        (self.pattern_phi(&pa, shifts, gens), lattice.from_coords(z.coords()))
                    })
                    .collect();
                let mut out = BTreeMap::new();
                for (p, a) in parts {
                    merge_witness(&mut out, p, a);
                }
                Ok(Some(out))
            }
            Engine::Generic => {
                let m = self.ring.monoid();
                let Monoid::Oracle(o) = m else {
                    return Ok(None);
                };
                if !matches!(o.family(), OracleFamily::SlopeHalfplane) {
                    return Ok(None);
                }
                // Membership in H and its shifts only compares single
                // coordinates with the generator coordinates.
                let maxb = self
                    .ring
                    .ideal()
                    .generators()
                    .iter()
                    .chain(self.shifts.iter())
                    .flat_map(|g| g.coords().iter().map(|x| x.abs()))
                    .max()
                    .unwrap_or(0)
                    + 2;
                let radius = 2 * (maxb + 1);
                Ok(Some(self.box_patterns(&DegreeBox::symmetric(2, radius))?))
            }
        }
    }
}

/// Per-coordinate bound on the vertices of the threshold arrangement
/// `φ_k(z) ∈ {t, t − 1}`.
fn vertex_radii(facets: &[IntVector], r: usize, thresholds: &[(i64, i64)]) -> Option<Vec<i64>> {
    let reach: Vec<BigRational> = thresholds
        .iter()
        .map(|&(lo, hi)| BigRational::from_integer((lo - 1).abs().max(hi.abs()).into()))
        .collect();
    let mut radii = vec![0i64; r];
    'subset: for rows in subsets(facets.len(), r) {
        let sub: Vec<&IntVector> = rows.iter().map(|&i| &facets[i]).collect();
        let cols: Vec<IntVector> = (0..r)
            .map(|j| IntVector::new(sub.iter().map(|n| n[j]).collect()))
            .collect();
        let mut bound = vec![BigRational::from_integer(0.into()); r];
        for (k, &row) in rows.iter().enumerate() {
            let mut e = vec![0; r];
            e[k] = 1;
            let Some(col) = solve_rational(&cols, &IntVector::new(e)) else {
                continue 'subset;
            };
            for j in 0..r {
                bound[j] += col[j].abs() * &reach[row];
            }
        }
        for j in 0..r {
            radii[j] = radii[j].max(bound[j].ceil().to_integer().to_i64()?);
        }
    }
    Some(radii)
}

/// Largest absolute value of a square minor of the facet matrix.
fn max_minor(facets: &[IntVector], r: usize) -> i64 {
    let mut best = 1i64;
    for k in 1..=r.min(facets.len()) {
        for rows in subsets(facets.len(), k) {
            for cols in subsets(r, k) {
                let m: Vec<IntVector> = rows
                    .iter()
                    .map(|&i| IntVector::new(cols.iter().map(|&j| facets[i][j]).collect()))
                    .collect();
                let d = det_big(&to_big_rows(&m)).abs().to_i64().unwrap_or(i64::MAX);
                best = best.max(d);
            }
        }
    }
    best
}

/// Nonzero components of the Koszul complex `K(X^{p_1 c_1}, …)` at degree
/// `a`: `S` is present iff `a − Σ_{i∈S} p_i c_i ∈ C∖E`.
pub(crate) fn koszul_pattern(
    ring: &QuotientRing,
    seq: &MonomialSequence,
    powers: &[u32],
    a: &IntVector,
) -> u64 {
    let mut out = 0u64;
    for s in 0..1u32 << seq.len() {
        let mut v = a.clone();
        for (i, c) in seq.exponents().iter().enumerate() {
            if s >> i & 1 == 1 {
                v = &v - &c.scale(powers[i] as i64);
            }
        }
        if ring.piece_nonzero(&v) {
            out |= 1 << s;
        }
    }
    out
}
