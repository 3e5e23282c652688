use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactlin::hilbert::hilbert_basis_coords;
use crate::exactlin::matrix::rank;
use crate::exactlin::{find_nonneg, positive_grading, IntMatrix, IntVector, Lattice, SpanCone};

/// A finitely generated submonoid of `Z^n` with a pointed cone.
///
/// The group of differences, the cone in its coordinates, the Hilbert basis
/// of the saturation and the face lattice are computed once at construction.
#[derive(Clone, Debug)]
pub struct AffineMonoid {
    dim: usize,
    generators: Vec<IntVector>,
    lattice: Lattice,
    cone: SpanCone,
    hilbert: Vec<IntVector>,
    normal: bool,
    grading: IntVector,
    faces: Vec<Face>,
}

/// A face of the cone of a monoid, together with the data the homology layer
/// needs: the functionals vanishing on it and an element of `C` in its
/// relative interior.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub rank: usize,
    /// Indices of the monoid generators lying on the face (empty for oracle
    /// monoids, which have no generator list).
    pub generators: Vec<usize>,
    /// Ambient facet functionals ⟨φ, x⟩ ≥ 0 of the cone that vanish on the face.
    pub functionals: Vec<IntVector>,
    /// A monoid element in the relative interior of the face.
    pub relint: IntVector,
}

impl Face {
    /// Whether a monoid element lies on the face.
    pub fn contains(&self, v: &IntVector) -> bool {
        self.functionals.iter().all(|f| f.dot(v) == 0)
    }
}

/// The monomial prime `C ∖ F` of a face `F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacePrime {
    pub face: Face,
    /// `rank gp(C) − rank F`.
    pub height: usize,
}

impl FacePrime {
    /// Whether a monoid element lies in the exponent set of the prime.
    pub fn contains(&self, v: &IntVector) -> bool {
        !self.face.contains(v)
    }

    pub fn is_augmentation(&self) -> bool {
        self.face.rank == 0
    }
}

impl AffineMonoid {
    pub fn new(dim: usize, generators: &[IntVector]) -> Result<Self> {
        for g in generators {
            g.check_dim(dim)?;
        }
        let mut gens: Vec<IntVector> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort();
        gens.dedup();
        let lattice = Lattice::from_generators(dim, &gens)?;
        let cone = SpanCone::new(&gens, &lattice)?;
        if !cone.is_pointed() {
            return Err(Error::NonPointedCone);
        }
        let grading = positive_grading(dim, &gens)?.ok_or(Error::NonPointedCone)?;
        let mut hilbert: Vec<IntVector> = hilbert_basis_coords(&cone)?
            .iter()
            .map(|z| cone.lattice.from_coords(z.coords()))
            .collect();
        hilbert.sort();
        let mut m = AffineMonoid {
            dim,
            generators: gens,
            lattice: cone.lattice.clone(),
            cone,
            hilbert,
            normal: false,
            grading,
            faces: vec![],
        };
        m.normal = m
            .hilbert
            .iter()
            .all(|h| m.decompose_unchecked(h).map(|w| w.is_some()).unwrap_or(false));
        m.faces = m.compute_faces()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sorted nonzero generators.
    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// The group of differences.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// HNF basis of the group of differences.
    pub fn group_basis(&self) -> Option<IntMatrix> {
        self.lattice.basis_matrix()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// Hilbert basis of the saturation `cone ∩ gp`.
    pub fn saturation_basis(&self) -> &[IntVector] {
        &self.hilbert
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// A functional positive on every nonzero element.
    pub fn grading(&self) -> &IntVector {
        &self.grading
    }

    pub fn span_cone(&self) -> &SpanCone {
        &self.cone
    }

    /// Ambient inner facet functionals of the cone.
    pub fn facet_functionals(&self) -> Result<Vec<IntVector>> {
        self.cone.lifted_facets()
    }

    /// Faces ordered by rank, from `{0}` to the whole cone.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_primes(&self) -> Vec<FacePrime> {
        let r = self.rank();
        self.faces
            .iter()
            .map(|f| FacePrime {
                face: f.clone(),
                height: r - f.rank,
            })
            .collect()
    }

    /// Membership in the saturation `cone ∩ gp`.
    pub fn in_saturation(&self, v: &IntVector) -> bool {
        if v.dim() != self.dim {
            return false;
        }
        match self.lattice.coords(v) {
            Some(z) => self.cone.contains_coords(&IntVector::new(z)),
            None => false,
        }
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        if !self.in_saturation(v) {
            return false;
        }
        if self.normal {
            return true;
        }
        matches!(self.decompose_unchecked(v), Ok(Some(_)))
    }

    /// Coefficients over [`Self::generators`] expressing `v`, if `v` is a member.
    /// The search is certified complete by the positive grading.
    pub fn decompose(&self, v: &IntVector) -> Result<Option<Vec<u64>>> {
        v.check_dim(self.dim)?;
        if !self.in_saturation(v) {
            return Ok(None);
        }
        self.decompose_unchecked(v)
    }

    fn decompose_unchecked(&self, v: &IntVector) -> Result<Option<Vec<u64>>> {
        if self.generators.is_empty() {
            return Ok(if v.is_zero() { Some(vec![]) } else { None });
        }
        let a = IntMatrix::from_rows(self.generators.clone())?;
        find_nonneg(&a, v)
    }

    /// Whether `v + m·c` lies in the monoid for some `m ≥ 0`, for `c` in the
    /// monoid. Only normal monoids have the closed form used here:
    /// `v ∈ gp` and ⟨φ, v⟩ ≥ 0 for every facet φ vanishing at `c`.
    pub fn reaches(&self, v: &IntVector, c: &IntVector) -> Result<bool> {
        if !self.normal {
            return Err(Error::Unsupported(
                "eventual membership over a non-normal affine monoid".into(),
            ));
        }
        v.check_dim(self.dim)?;
        let zc = self
            .lattice
            .coords(c)
            .ok_or_else(|| Error::NotInMonoid(c.to_string()))?;
        let zv = match self.lattice.coords(v) {
            Some(z) => z,
            None => return Ok(false),
        };
        let zc = IntVector::new(zc);
        let zv = IntVector::new(zv);
        Ok(self
            .cone
            .facets
            .iter()
            .all(|n| n.dot(&zc) > 0 || n.dot(&zv) >= 0))
    }

    /// The same monoid inside `Z^dim` with zero coordinates appended.
    pub fn padded(&self, dim: usize) -> Result<AffineMonoid> {
        let gens: Vec<IntVector> = self.generators.iter().map(|g| g.padded(dim)).collect();
        AffineMonoid::new(dim.max(self.dim), &gens)
    }

    fn compute_faces(&self) -> Result<Vec<Face>> {
        let r = self.rank();
        let lifted = self.cone.lifted_facets()?;
        let zgens: Vec<IntVector> = self
            .generators
            .iter()
            .map(|g| IntVector::new(self.lattice.coords(g).expect("generator in its group")))
            .collect();
        let facets = &self.cone.facets;
        // A face is determined by the set of facets vanishing on it; walk the
        // lattice downward by intersecting with one facet at a time.
        let all: BTreeSet<usize> = (0..zgens.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = vec![all.clone()];
        seen.insert(all);
        while let Some(f) = queue.pop() {
            for n in facets {
                let sub: BTreeSet<usize> = f.iter().copied().filter(|&i| n.dot(&zgens[i]) == 0).collect();
                if seen.insert(sub.clone()) {
                    queue.push(sub);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|idx| {
                let members: Vec<IntVector> = idx.iter().map(|&i| zgens[i].clone()).collect();
                let functionals: Vec<IntVector> = facets
                    .iter()
                    .zip(&lifted)
                    .filter(|(n, _)| members.iter().all(|g| n.dot(g) == 0))
                    .map(|(_, l)| l.clone())
                    .collect();
                let mut relint = IntVector::zero(self.dim);
                for &i in &idx {
                    relint = &relint + &self.generators[i];
                }
                Face {
                    rank: if members.is_empty() { 0 } else { rank(&members) },
                    generators: idx.into_iter().collect(),
                    functionals,
                    relint,
                }
            })
            .collect();
        debug_assert!(faces.iter().all(|f| f.rank <= r));
        faces.sort();
        Ok(faces)
    }
}

impl PartialEq for AffineMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for AffineMonoid {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iv;

    fn hn(n: i64) -> AffineMonoid {
        let g: Vec<IntVector> = (0..=n).map(|i| iv![1, i]).collect();
        AffineMonoid::new(2, &g).unwrap()
    }

    #[test]
    fn membership_with_witness() {
        let h2 = hn(2);
        assert_eq!(h2.decompose(&iv![3, 5]).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(h2.decompose(&iv![0, 0]).unwrap(), Some(vec![0, 0, 0]));
        assert!(!h2.contains(&iv![1, 3]));
        assert!(h2.decompose(&iv![1]).is_err());
    }

    #[test]
    fn group_bases() {
        let m = AffineMonoid::new(2, &[iv![1, 0], iv![1, 2]]).unwrap();
        assert_eq!(m.group_basis().unwrap().rows(), &[iv![1, 0], iv![0, 2]]);
        let m = AffineMonoid::new(1, &[iv![2], iv![3]]).unwrap();
        assert_eq!(m.group_basis().unwrap().rows(), &[iv![1]]);
        assert!(!m.is_normal());
        assert!(m.contains(&iv![5]) && !m.contains(&iv![1]));
        let m = AffineMonoid::new(2, &[iv![1, 0], iv![0, 1]]).unwrap();
        assert_eq!(m.group_basis().unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn faces_of_h2() {
        let h2 = hn(2);
        let f = h2.faces();
        assert_eq!(f.len(), 4);
        let ranks: Vec<usize> = f.iter().map(|x| x.rank).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
        let heights: Vec<usize> = h2.face_primes().iter().map(|p| p.height).collect();
        assert_eq!(heights, vec![2, 1, 1, 0]);
        assert_eq!(f[1].relint, iv![1, 0]);
        assert_eq!(f[2].relint, iv![1, 2]);
        let z = AffineMonoid::new(1, &[iv![1]]).unwrap();
        assert_eq!(z.faces().len(), 2);
    }

    #[test]
    fn eventual_membership() {
        let h2 = hn(2);
        // Along x the ray (1,0) stays a boundary: b ≥ 0 is kept.
        assert!(h2.reaches(&iv![-5, 0], &iv![1, 0]).unwrap());
        assert!(!h2.reaches(&iv![-5, -1], &iv![1, 0]).unwrap());
        // Along an interior element everything in gp is reached.
        assert!(h2.reaches(&iv![-5, 7], &iv![1, 1]).unwrap());
        let nn = AffineMonoid::new(1, &[iv![2], iv![3]]).unwrap();
        assert!(nn.reaches(&iv![1], &iv![2]).is_err());
    }

    #[test]
    fn trivial_monoid() {
        let t = AffineMonoid::new(2, &[]).unwrap();
        assert!(t.contains(&iv![0, 0]));
        assert!(!t.contains(&iv![1, 0]));
        assert_eq!(t.faces().len(), 1);
    }
}
