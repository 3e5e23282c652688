//! Rational polyhedral cones: double description, span coordinates and
//! gradings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::{det_big, primitive_from_rational, rank, solve_rational, Lattice};
use super::IntVector;
use crate::error::{Error, Result};

/// Largest ambient dimension accepted by the double description routine.
pub const DEFAULT_MAX_DIM: usize = 6;

/// A cone given by primitive ray representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<IntVector>,
}

impl RationalCone {
    /// Normalizes generators to primitive vectors, dropping duplicates.
    pub fn new(dim: usize, generators: &[IntVector]) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            g.check_dim(dim)?;
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            gens.push(g.primitive());
        }
        gens.sort();
        gens.dedup();
        Ok(RationalCone {
            dim,
            generators: gens,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn rank(&self) -> usize {
        rank(&self.generators)
    }
}

/// Inner facet normals of a full-dimensional cone: the minimal system
/// `⟨n_i, x⟩ ≥ 0` cutting it out, sorted lexicographically.
pub fn cone_facets(c: &RationalCone) -> Result<Vec<IntVector>> {
    cone_facets_with_max(c, DEFAULT_MAX_DIM)
}

pub fn cone_facets_with_max(c: &RationalCone, max_dim: usize) -> Result<Vec<IntVector>> {
    if c.dim > max_dim {
        return Err(Error::DimensionTooLarge {
            dim: c.dim,
            max: max_dim,
        });
    }
    let r = c.rank();
    if r < c.dim {
        return Err(Error::NotFullDimensional { rank: r, dim: c.dim });
    }
    dual_extreme_rays(&c.generators, c.dim)
}

/// Extreme rays of `{y : ⟨a, y⟩ ≥ 0 for all rows a}` by the double
/// description method. The rows must span `Q^dim`.
pub fn dual_extreme_rays(rows: &[IntVector], dim: usize) -> Result<Vec<IntVector>> {
    let mut cons: Vec<IntVector> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    cons.sort();
    cons.dedup();
    let r = rank(&cons);
    if r < dim {
        return Err(Error::NotFullDimensional { rank: r, dim });
    }
    let m = cons.len();
    let a: Vec<Vec<i128>> = cons
        .iter()
        .map(|c| c.coords().iter().map(|&x| x as i128).collect())
        .collect();

    // Initial simplex: first linearly independent rows in lexicographic order.
    let mut basis_idx = Vec::with_capacity(dim);
    let mut chosen: Vec<IntVector> = Vec::new();
    for (i, c) in cons.iter().enumerate() {
        chosen.push(c.clone());
        if rank(&chosen) == chosen.len() {
            basis_idx.push(i);
            if basis_idx.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }

    let a0: Vec<Vec<BigInt>> = basis_idx
        .iter()
        .map(|&i| cons[i].coords().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let det = det_big(&a0);
    let sign = if det.is_negative() { -1 } else { 1 };
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        // Column j of the adjugate: A0 · col = det · e_j.
        let mut col = Vec::with_capacity(dim);
        for k in 0..dim {
            let cof = cofactor(&a0, j, k);
            col.push(to_i128(&(cof * sign))?);
        }
        let v = primitive_i128(col);
        let mut tight = vec![false; m];
        for &i in &basis_idx {
            tight[i] = dot128(&a[i], &v) == 0;
        }
        rays.push(Ray { v, tight });
    }

    let mut processed = vec![false; m];
    for &i in &basis_idx {
        processed[i] = true;
    }

    for i in 0..m {
        if processed[i] {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot128(&a[i], &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, &s) in rays.iter().zip(&vals) {
            if s >= 0 {
                let mut t = r.tight.clone();
                t[i] = s == 0;
                next.push(Ray { v: r.v.clone(), tight: t });
            }
        }
        for (pi, p) in rays.iter().enumerate() {
            if vals[pi] <= 0 {
                continue;
            }
            for (ni, n) in rays.iter().enumerate() {
                if vals[ni] >= 0 {
                    continue;
                }
                let common: Vec<bool> = p.tight.iter().zip(&n.tight).map(|(x, y)| *x && *y).collect();
                let adjacent = !rays.iter().enumerate().any(|(k, other)| {
                    k != pi
                        && k != ni
                        && common.iter().zip(&other.tight).all(|(c, t)| !*c || *t)
                });
                if !adjacent {
                    continue;
                }
                let sp = vals[pi];
                let sn = -vals[ni];
                let mut v = Vec::with_capacity(dim);
                for (x, y) in n.v.iter().zip(&p.v) {
                    let t = sp
                        .checked_mul(*x)
                        .and_then(|u| sn.checked_mul(*y).and_then(|w| u.checked_add(w)))
                        .ok_or(Error::Overflow)?;
                    v.push(t);
                }
                let v = primitive_i128(v);
                let mut t = common;
                t[i] = true;
                next.push(Ray { v, tight: t });
            }
        }
        processed[i] = true;
        rays = next;
    }

    let mut out: Vec<IntVector> = rays
        .into_iter()
        .map(|r| {
            r.v.into_iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<_>>>()
                .map(IntVector::new)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

struct Ray {
    v: Vec<i128>,
    tight: Vec<bool>,
}

fn dot128(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive_i128(v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    if g <= 1 {
        return v;
    }
    v.into_iter().map(|x| x / g).collect()
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow)
}

/// `(-1)^{i+j}` times the minor of `m` with row `i` and column `j` removed.
fn cofactor(m: &[Vec<BigInt>], i: usize, j: usize) -> BigInt {
    let minor: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    let d = det_big(&minor);
    if (i + j).is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// A cone expressed in coordinates of a lattice spanning its linear span.
#[derive(Clone, Debug)]
pub struct SpanCone {
    /// Lattice whose basis gives the coordinates.
    pub lattice: Lattice,
    /// Primitive ray representatives in lattice coordinates.
    pub rays: Vec<IntVector>,
    /// Inner facet normals in lattice coordinates.
    pub facets: Vec<IntVector>,
}

impl SpanCone {
    /// `gens` in the ambient space; `lattice` must have full rank in their
    /// span (it is intersected with the span first).
    pub fn new(gens: &[IntVector], lattice: &Lattice) -> Result<SpanCone> {
        let dim = lattice.dim();
        let nonzero: Vec<IntVector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let lattice = lattice.intersect_span(&nonzero)?;
        let r = rank(&nonzero);
        if lattice.rank() != r {
            return Err(Error::LatticeRankDeficient);
        }
        if r > DEFAULT_MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: r,
                max: DEFAULT_MAX_DIM,
            });
        }
        if r == 0 {
            return Ok(SpanCone {
                lattice: Lattice::from_generators(dim, &[])?,
                rays: vec![],
                facets: vec![],
            });
        }
        let basis = lattice.basis().to_vec();
        let mut z = Vec::with_capacity(nonzero.len());
        for g in &nonzero {
            let q = solve_rational(&basis, g).ok_or(Error::LatticeRankDeficient)?;
            z.push(primitive_from_rational(&q)?);
        }
        z.sort();
        z.dedup();
        let facets = dual_extreme_rays(&z, r)?;
        Ok(SpanCone {
            lattice,
            rays: z,
            facets,
        })
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_pointed(&self) -> bool {
        rank(&self.facets) == self.rank()
    }

    /// Rays that are extreme (tight on `rank − 1` independent facets).
    pub fn extreme_rays(&self) -> Vec<IntVector> {
        let r = self.rank();
        self.rays
            .iter()
            .filter(|g| {
                let tight: Vec<IntVector> =
                    self.facets.iter().filter(|n| n.dot(g) == 0).cloned().collect();
                rank(&tight) + 1 == r
            })
            .cloned()
            .collect()
    }

    /// Lift a functional on lattice coordinates to an ambient functional that
    /// agrees with it (up to a positive factor) on the span.
    pub fn lift_functional(&self, n: &IntVector) -> Result<IntVector> {
        let basis = self.lattice.basis();
        let gram: Vec<IntVector> = basis
            .iter()
            .map(|b| IntVector::new(basis.iter().map(|c| b.dot(c)).collect()))
            .collect();
        let w = solve_rational(&gram, n).ok_or(Error::LatticeRankDeficient)?;
        let dim = self.lattice.dim();
        let mut phi = vec![BigRational::zero(); dim];
        for (wj, b) in w.iter().zip(basis) {
            for (p, &c) in phi.iter_mut().zip(b.coords()) {
                *p += wj * BigRational::from_integer(BigInt::from(c));
            }
        }
        primitive_from_rational(&phi)
    }

    pub fn lifted_facets(&self) -> Result<Vec<IntVector>> {
        self.facets.iter().map(|n| self.lift_functional(n)).collect()
    }

    pub fn contains_coords(&self, z: &IntVector) -> bool {
        self.facets.iter().all(|n| n.dot(z) >= 0)
    }
}

/// General H-description of a cone: inequalities valid on its span and
/// equations cutting out the span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    pub inequalities: Vec<IntVector>,
    pub equations: Vec<IntVector>,
}

pub fn cone_description(c: &RationalCone) -> Result<ConeDescription> {
    if c.generators.is_empty() {
        return Ok(ConeDescription {
            inequalities: vec![],
            equations: (0..c.dim).map(|i| IntVector::unit(c.dim, i)).collect(),
        });
    }
    let lattice = Lattice::from_generators(c.dim, &c.generators)?;
    let sc = SpanCone::new(&c.generators, &lattice)?;
    let mut inequalities = sc.lifted_facets()?;
    inequalities.sort();
    let mut equations = super::matrix::orthogonal_complement(c.dim, &c.generators)?;
    for e in equations.iter_mut() {
        if let Some(&first) = e.coords().iter().find(|&&x| x != 0) {
            if first < 0 {
                *e = -&*e;
            }
        }
        *e = e.primitive();
    }
    Ok(ConeDescription {
        inequalities,
        equations,
    })
}

/// An ambient functional strictly positive on every nonzero element of the
/// cone spanned by `gens`, if the cone is pointed.
pub fn positive_grading(dim: usize, gens: &[IntVector]) -> Result<Option<IntVector>> {
    let nonzero: Vec<IntVector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Some(IntVector::zero(dim)));
    }
    let lattice = Lattice::from_generators(dim, &nonzero)?;
    let sc = SpanCone::new(&nonzero, &lattice)?;
    if !sc.is_pointed() {
        return Ok(None);
    }
    let mut w = IntVector::zero(sc.rank());
    for n in &sc.facets {
        w = &w + n;
    }
    let lifted = sc.lift_functional(&w)?;
    if nonzero.iter().all(|g| lifted.dot(g) > 0) {
        Ok(Some(lifted))
    } else {
        Ok(None)
    }
}
