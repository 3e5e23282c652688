use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::affine::{AffineMonoid, Face, FacePrime};
use crate::error::{Error, Result};
use crate::exactlin::matrix::rank;
use crate::exactlin::{IntVector, Lattice, SpanCone};

/// The closed catalog of monoids given by a membership rule rather than by
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleFamily {
    /// `(N × N₀) ∪ {(0,0)}` in `Z²`.
    SlopeHalfplane,
    /// `{(a,b) : 0 ≤ b ≤ n·a}` in `Z²`.
    SlopeBounded(u32),
    /// Nonnegative vectors of `Z^s` whose coordinate sum is divisible by `d`.
    VeroneseCongruence { d: u32, s: usize },
    WrappedAffine(Arc<AffineMonoid>),
}

/// Serializable name of a family, used in documents and reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    SlopeHalfplane,
    SlopeBounded,
    Veronese,
    WrappedAffine,
}

#[derive(Clone, Debug)]
pub struct OracleMonoid {
    family: OracleFamily,
    dim: usize,
    lattice: Lattice,
    /// Finitely generated families also carry their affine model.
    affine: Option<Arc<AffineMonoid>>,
    faces: Vec<Face>,
}

impl PartialEq for OracleMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for OracleMonoid {}

/// Nonnegative vectors of `Z^s` with coordinate sum `d`.
fn degree_vectors(s: usize, d: i64) -> Vec<IntVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; s];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<IntVector>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(IntVector::new(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// How far multiples of a face's ray sum are tried when looking for a monoid
/// element in its relative interior.
const RELINT_SEARCH: i64 = 64;

impl OracleMonoid {
    pub fn new(family: OracleFamily) -> Result<Self> {
        let (dim, lattice, affine, closure_rays) = match &family {
            OracleFamily::SlopeHalfplane => (
                2,
                Lattice::full(2),
                None,
                vec![IntVector::new(vec![1, 0]), IntVector::new(vec![0, 1])],
            ),
            OracleFamily::SlopeBounded(n) => {
                let gens: Vec<IntVector> = (0..=*n as i64).map(|i| IntVector::new(vec![1, i])).collect();
                let a = AffineMonoid::new(2, &gens)?;
                (2, a.lattice().clone(), Some(Arc::new(a)), vec![])
            }
            OracleFamily::VeroneseCongruence { d, s } => {
                if *d == 0 || *s == 0 {
                    return Err(Error::InvalidConfig("veronese needs d ≥ 1 and s ≥ 1".into()));
                }
                let s = *s;
                // The degree-d monomials generate the monoid.
                let gens = degree_vectors(s, *d as i64);
                let a = AffineMonoid::new(s, &gens)?;
                (s, a.lattice().clone(), Some(Arc::new(a)), vec![])
            }
            OracleFamily::WrappedAffine(a) => (a.dim(), a.lattice().clone(), Some(a.clone()), vec![]),
        };
        let mut m = OracleMonoid {
            family,
            dim,
            lattice,
            affine,
            faces: vec![],
        };
        m.faces = match &m.affine {
            Some(a) => a.faces().to_vec(),
            None => m.closure_faces(&closure_rays)?,
        };
        Ok(m)
    }

    pub fn slope_halfplane() -> Self {
        Self::new(OracleFamily::SlopeHalfplane).expect("fixed family")
    }

    pub fn slope_bounded(n: u32) -> Result<Self> {
        Self::new(OracleFamily::SlopeBounded(n))
    }

    pub fn veronese(d: u32, s: usize) -> Result<Self> {
        Self::new(OracleFamily::VeroneseCongruence { d, s })
    }

    pub fn wrapped(a: AffineMonoid) -> Result<Self> {
        Self::new(OracleFamily::WrappedAffine(Arc::new(a)))
    }

    pub fn family(&self) -> &OracleFamily {
        &self.family
    }

    pub fn kind(&self) -> FamilyKind {
        match self.family {
            OracleFamily::SlopeHalfplane => FamilyKind::SlopeHalfplane,
            OracleFamily::SlopeBounded(_) => FamilyKind::SlopeBounded,
            OracleFamily::VeroneseCongruence { .. } => FamilyKind::Veronese,
            OracleFamily::WrappedAffine(_) => FamilyKind::WrappedAffine,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn affine_model(&self) -> Option<&Arc<AffineMonoid>> {
        self.affine.as_ref()
    }

    /// Every catalog family except a wrapped non-normal monoid is normal.
    pub fn is_normal(&self) -> bool {
        self.affine.as_ref().is_none_or(|a| a.is_normal())
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        if v.dim() != self.dim {
            return false;
        }
        let c = v.coords();
        match &self.family {
            OracleFamily::SlopeHalfplane => (c[0] >= 1 && c[1] >= 0) || v.is_zero(),
            OracleFamily::SlopeBounded(n) => c[0] >= 0 && c[1] >= 0 && c[1] <= *n as i64 * c[0],
            OracleFamily::VeroneseCongruence { d, .. } => {
                c.iter().all(|&x| x >= 0) && c.iter().sum::<i64>().rem_euclid(*d as i64) == 0
            }
            OracleFamily::WrappedAffine(a) => a.contains(v),
        }
    }

    /// Whether `v + m·c` lies in the monoid for some `m ≥ 0` (equivalently for
    /// all large `m`), for `c` in the monoid.
    pub fn reaches(&self, v: &IntVector, c: &IntVector) -> Result<bool> {
        v.check_dim(self.dim)?;
        if !self.contains(c) {
            return Err(Error::NotInMonoid(c.to_string()));
        }
        if let Some(a) = &self.affine {
            return a.reaches(v, c);
        }
        let x = v.coords();
        let y = c.coords();
        Ok(match &self.family {
            OracleFamily::SlopeHalfplane => {
                if c.is_zero() {
                    self.contains(v)
                } else if y[1] > 0 {
                    true
                } else {
                    x[1] >= 0
                }
            }
            OracleFamily::VeroneseCongruence { d, .. } => {
                x.iter().zip(y).all(|(&xi, &yi)| yi > 0 || xi >= 0)
                    && x.iter().sum::<i64>().rem_euclid(*d as i64) == 0
            }
            _ => unreachable!("affine families delegate"),
        })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_primes(&self) -> Vec<FacePrime> {
        let r = self.lattice.rank();
        self.faces
            .iter()
            .map(|f| FacePrime {
                face: f.clone(),
                height: r - f.rank,
            })
            .collect()
    }

    /// Faces of the topological closure of the cone that are realized by a
    /// monoid element in their relative interior.
    fn closure_faces(&self, rays: &[IntVector]) -> Result<Vec<Face>> {
        let sc = SpanCone::new(rays, &Lattice::full(self.dim))?;
        let lifted = sc.lifted_facets()?;
        let zrays: Vec<IntVector> = rays
            .iter()
            .map(|g| IntVector::new(sc.lattice.coords(g).expect("ray in Z^n")))
            .collect();
        let mut subsets: Vec<Vec<usize>> = vec![(0..zrays.len()).collect()];
        let mut i = 0;
        while i < subsets.len() {
            let f = subsets[i].clone();
            for n in &sc.facets {
                let sub: Vec<usize> = f.iter().copied().filter(|&j| n.dot(&zrays[j]) == 0).collect();
                if !subsets.contains(&sub) {
                    subsets.push(sub);
                }
            }
            i += 1;
        }
        let mut faces = Vec::new();
        for idx in subsets {
            let members: Vec<IntVector> = idx.iter().map(|&j| zrays[j].clone()).collect();
            let functionals: Vec<IntVector> = sc
                .facets
                .iter()
                .zip(&lifted)
                .filter(|(n, _)| members.iter().all(|g| n.dot(g) == 0))
                .map(|(_, l)| l.clone())
                .collect();
            let mut sum = IntVector::zero(self.dim);
            for &j in &idx {
                sum = &sum + &rays[j];
            }
            let relint = if idx.is_empty() {
                Some(sum)
            } else {
                (1..=RELINT_SEARCH).map(|k| sum.scale(k)).find(|v| self.contains(v))
            };
            if let Some(relint) = relint {
                faces.push(Face {
                    rank: rank(&members),
                    generators: vec![],
                    functionals,
                    relint,
                });
            }
        }
        faces.sort();
        Ok(faces)
    }
}
