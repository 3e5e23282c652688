use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::element::RingElement;
use crate::error::{Error, Result};
use crate::exactlin::matrix::{rank, solve_rational};
use crate::exactlin::{DegreeBox, IntVector};
use crate::monoids::{AffineMonoid, FacePrime, Monoid};

/// Half-width of the default box for colons that cannot be certified.
pub const DEFAULT_COLON_RADIUS: i64 = 12;

/// Upper limit on lattice points enumerated for one exact module.
const ENUMERATION_BUDGET: u64 = 4_000_000;

/// How complete a computed ideal is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Certified,
    /// Generators found among the degrees of the box only.
    BoxTruncated { checked: DegreeBox },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedIdeal {
    pub ideal: MonomialIdeal,
    pub certificate: Certificate,
}

/// A monomial ideal of `k[C]`, stored by the minimal generators of its
/// exponent set `E = ∪ (g + C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    monoid: Monoid,
    generators: Vec<IntVector>,
}

/// Per-monomial membership evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub exponent: IntVector,
    /// The generator `g` with `exponent − g ∈ C`, if any.
    pub generator: Option<IntVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealMembership {
    pub member: bool,
    pub witnesses: Vec<MembershipWitness>,
}

impl MonomialIdeal {
    pub fn new(monoid: &Monoid, generators: &[IntVector]) -> Result<Self> {
        for g in generators {
            g.check_dim(monoid.dim())?;
            if !monoid.contains(g) {
                return Err(Error::NotInMonoid(g.to_string()));
            }
        }
        Ok(MonomialIdeal {
            monoid: monoid.clone(),
            generators: minimalize(monoid, generators.to_vec()),
        })
    }

    pub fn zero(monoid: &Monoid) -> Self {
        MonomialIdeal {
            monoid: monoid.clone(),
            generators: vec![],
        }
    }

    pub fn unit(monoid: &Monoid) -> Self {
        MonomialIdeal {
            monoid: monoid.clone(),
            generators: vec![IntVector::zero(monoid.dim())],
        }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    /// Minimal generators in lexicographic order.
    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_zero())
    }

    /// A generator dividing `e`, if `e` lies in the exponent set.
    pub fn divisor(&self, e: &IntVector) -> Option<&IntVector> {
        if !self.monoid.contains(e) {
            return None;
        }
        self.generators.iter().find(|g| self.monoid.contains(&(e - *g)))
    }

    pub fn contains_exponent(&self, e: &IntVector) -> bool {
        self.divisor(e).is_some()
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains_exponent(g))
    }

    pub fn membership(&self, f: &RingElement) -> Result<IdealMembership> {
        if f.monoid() != &self.monoid {
            return Err(Error::RingMismatch);
        }
        let witnesses: Vec<MembershipWitness> = f
            .support()
            .map(|e| MembershipWitness {
                exponent: e.clone(),
                generator: self.divisor(e).cloned(),
            })
            .collect();
        Ok(IdealMembership {
            member: witnesses.iter().all(|w| w.generator.is_some()),
            witnesses,
        })
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.monoid != other.monoid {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        MonomialIdeal::new(&self.monoid, &g)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a + b);
            }
        }
        MonomialIdeal::new(&self.monoid, &g)
    }

    /// `E(I) ∩ E(J)`, exact over normal affine monoids and box-truncated
    /// otherwise.
    pub fn intersection(&self, other: &MonomialIdeal, b: Option<&DegreeBox>) -> Result<CertifiedIdeal> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(certified(MonomialIdeal::zero(&self.monoid)));
        }
        if let Some(engine) = Polyhedral::for_monoid(&self.monoid)? {
            let mut betas = Vec::new();
            for a in engine.betas(self) {
                for c in engine.betas(other) {
                    betas.push(a.iter().zip(&c).map(|(x, y)| *x.max(y)).collect());
                }
            }
            return Ok(certified(engine.ideal_of(&self.monoid, betas)?));
        }
        let b = self.default_box(b)?;
        let found: Vec<IntVector> = b
            .points()
            .filter(|d| self.contains_exponent(d) && other.contains_exponent(d))
            .collect();
        Ok(truncated(MonomialIdeal::new(&self.monoid, &found)?, b))
    }

    /// `(I : J) = {d ∈ C : d + j ∈ E(I) for every generator j of J}`.
    pub fn colon(&self, other: &MonomialIdeal, b: Option<&DegreeBox>) -> Result<CertifiedIdeal> {
        self.check_same(other)?;
        if other.is_zero() || self.is_unit() {
            return Ok(certified(MonomialIdeal::unit(&self.monoid)));
        }
        if self.is_zero() {
            return Ok(certified(MonomialIdeal::zero(&self.monoid)));
        }
        if let Some(engine) = Polyhedral::for_monoid(&self.monoid)? {
            let mut acc: Option<Vec<Vec<i64>>> = None;
            for j in &other.generators {
                let pj = engine.phi(j).expect("generator in its group");
                let shifted: Vec<Vec<i64>> = engine
                    .betas(self)
                    .into_iter()
                    .map(|beta| beta.iter().zip(&pj).map(|(b, p)| (b - p).max(0)).collect())
                    .collect();
                acc = Some(match acc {
                    None => shifted,
                    Some(prev) => {
                        let mut out = Vec::new();
                        for a in &prev {
                            for c in &shifted {
                                out.push(a.iter().zip(c).map(|(x, y)| *x.max(y)).collect());
                            }
                        }
                        prune(out)
                    }
                });
            }
            return Ok(certified(engine.ideal_of(&self.monoid, acc.unwrap_or_default())?));
        }
        let b = self.default_box(b)?;
        let found: Vec<IntVector> = b
            .points()
            .filter(|d| {
                self.monoid.contains(d)
                    && other.generators.iter().all(|j| self.contains_exponent(&(d + j)))
            })
            .collect();
        Ok(truncated(MonomialIdeal::new(&self.monoid, &found)?, b))
    }

    /// Colon by a single monomial.
    pub fn colon_monomial(&self, m: &IntVector, b: Option<&DegreeBox>) -> Result<CertifiedIdeal> {
        let j = MonomialIdeal::new(&self.monoid, std::slice::from_ref(m))?;
        self.colon(&j, b)
    }

    fn default_box(&self, b: Option<&DegreeBox>) -> Result<DegreeBox> {
        match b {
            Some(b) => b.for_dim(self.monoid.dim()),
            None => Ok(DegreeBox::symmetric(self.monoid.dim(), DEFAULT_COLON_RADIUS)),
        }
    }

    /// Face primes containing the ideal that are minimal among those.
    /// Over monoids without a finite model these are the monomial primes only.
    pub fn min_face_primes(&self) -> Vec<FacePrime> {
        if self.is_zero() || self.is_unit() {
            return vec![];
        }
        let containing: Vec<FacePrime> = self
            .monoid
            .face_primes()
            .into_iter()
            .filter(|p| self.generators.iter().all(|g| p.contains(g)))
            .collect();
        containing
            .iter()
            .filter(|p| !containing.iter().any(|q| q != *p && prime_included(q, p)))
            .cloned()
            .collect()
    }

    /// Least height of a minimal face prime; 0 for the zero ideal.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(0);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        self.min_face_primes()
            .iter()
            .map(|p| p.height)
            .min()
            .ok_or(Error::UnitIdeal)
    }
}

/// `q ⊆ p` for face primes, i.e. `face(p) ⊆ face(q)`.
pub(crate) fn prime_included(q: &FacePrime, p: &FacePrime) -> bool {
    q.face.functionals.iter().all(|f| p.face.functionals.contains(f))
}

fn certified(ideal: MonomialIdeal) -> CertifiedIdeal {
    CertifiedIdeal {
        ideal,
        certificate: Certificate::Certified,
    }
}

fn truncated(ideal: MonomialIdeal, b: DegreeBox) -> CertifiedIdeal {
    CertifiedIdeal {
        ideal,
        certificate: Certificate::BoxTruncated { checked: b },
    }
}

/// Minimal elements under `g | h ⟺ h − g ∈ C`, sorted.
fn minimalize(monoid: &Monoid, mut gens: Vec<IntVector>) -> Vec<IntVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| !gens.iter().any(|h| h != g && monoid.contains(&(g - h))))
        .collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

/// Drop threshold vectors dominated by another (their modules are contained).
fn prune(mut betas: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    betas.sort();
    betas.dedup();
    let keep: Vec<bool> = betas
        .iter()
        .map(|b| {
            !betas
                .iter()
                .any(|c| c != b && b.iter().zip(c).all(|(x, y)| x >= y))
        })
        .collect();
    betas.into_iter().zip(keep).filter(|(_, k)| *k).map(|(b, _)| b).collect()
}

/// Exact monomial-ideal arithmetic over a normal affine monoid. Every ideal
/// built here is a finite union of modules `{d ∈ gp : Φ·d ≥ β}` where Φ
/// lists the facet normals in lattice coordinates.
struct Polyhedral<'a> {
    a: &'a AffineMonoid,
    hilbert_z: Vec<IntVector>,
}

impl<'a> Polyhedral<'a> {
    fn for_monoid(m: &'a Monoid) -> Result<Option<Polyhedral<'a>>> {
        let Some(a) = m.affine_view() else {
            return Ok(None);
        };
        if !a.is_normal() || a.rank() == 0 {
            return Ok(None);
        }
        let hilbert_z = a
            .saturation_basis()
            .iter()
            .map(|h| IntVector::new(a.lattice().coords(h).expect("in group")))
            .collect();
        Ok(Some(Polyhedral { a, hilbert_z }))
    }

    fn facets(&self) -> &[IntVector] {
        &self.a.span_cone().facets
    }

    fn phi(&self, v: &IntVector) -> Option<Vec<i64>> {
        let z = IntVector::new(self.a.lattice().coords(v)?);
        Some(self.phi_z(&z))
    }

    fn phi_z(&self, z: &IntVector) -> Vec<i64> {
        self.facets().iter().map(|n| n.dot(z)).collect()
    }

    fn betas(&self, i: &MonomialIdeal) -> Vec<Vec<i64>> {
        i.generators
            .iter()
            .map(|g| self.phi(g).expect("generator in its group"))
            .collect()
    }

    fn in_union(&self, z: &IntVector, betas: &[Vec<i64>]) -> bool {
        let p = self.phi_z(z);
        betas.iter().any(|b| p.iter().zip(b).all(|(x, y)| x >= y))
    }

    fn ideal_of(&self, m: &Monoid, betas: Vec<Vec<i64>>) -> Result<MonomialIdeal> {
        let betas = prune(betas);
        let mut found: Vec<IntVector> = Vec::new();
        for b in &betas {
            for z in self.module_points(b)? {
                let minimal = self.hilbert_z.iter().all(|h| !self.in_union(&(&z - h), &betas));
                if minimal {
                    found.push(self.a.lattice().from_coords(z.coords()));
                }
            }
        }
        found.sort();
        found.dedup();
        Ok(MonomialIdeal {
            monoid: m.clone(),
            generators: found,
        })
    }

    /// Lattice points of `{z : Φz ≥ β}` that can be minimal generators: they
    /// lie in the convex hull of the vertices plus a half-open parallelepiped
    /// of extreme rays, whose bounding box is enumerated.
    fn module_points(&self, beta: &[i64]) -> Result<Vec<IntVector>> {
        let facets = self.facets();
        let r = self.a.rank();
        let rays = self.a.span_cone().extreme_rays();
        let mut lo = vec![i64::MAX; r];
        let mut hi = vec![i64::MIN; r];
        let mut any = false;
        for subset in subsets(facets.len(), r) {
            let rows: Vec<IntVector> = subset.iter().map(|&k| facets[k].clone()).collect();
            if rank(&rows) < r {
                continue;
            }
            let cols: Vec<IntVector> = (0..r)
                .map(|j| IntVector::new(rows.iter().map(|n| n[j]).collect()))
                .collect();
            let rhs = IntVector::new(subset.iter().map(|&k| beta[k]).collect());
            let Some(x) = solve_rational(&cols, &rhs) else {
                continue;
            };
            let feasible = facets.iter().zip(beta).all(|(n, &b)| {
                let s: BigRational = x
                    .iter()
                    .zip(n.coords())
                    .map(|(xi, &c)| xi * BigRational::from_integer(c.into()))
                    .sum();
                s >= BigRational::from_integer(b.into())
            });
            if !feasible {
                continue;
            }
            any = true;
            for j in 0..r {
                let fl = x[j].floor().to_integer().to_i64().ok_or(Error::Overflow)?;
                let ce = x[j].ceil().to_integer().to_i64().ok_or(Error::Overflow)?;
                lo[j] = lo[j].min(fl);
                hi[j] = hi[j].max(ce);
            }
        }
        if !any {
            return Ok(vec![]);
        }
        for ray in &rays {
            for j in 0..r {
                lo[j] += ray[j].min(0);
                hi[j] += ray[j].max(0);
            }
        }
        let count = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| (h - l + 1) as u64)
            .fold(1u64, |a, b| a.saturating_mul(b));
        if count > ENUMERATION_BUDGET {
            return Err(Error::Unsupported(format!(
                "exact colon needs {count} lattice points, above the budget"
            )));
        }
        let b = DegreeBox::new(lo.into_iter().zip(hi).collect())?;
        Ok(b.points()
            .filter(|z| self.phi_z(z).iter().zip(beta).all(|(x, y)| x >= y))
            .collect())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let c: Vec<String> = g.coords().iter().map(|x| x.to_string()).collect();
            write!(f, "t[{}]", c.join(","))?;
        }
        write!(f, ")")
    }
}
