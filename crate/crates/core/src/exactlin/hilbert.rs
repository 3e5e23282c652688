//! Hilbert bases of pointed rational cones intersected with lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::cone::{RationalCone, SpanCone};
use super::matrix::{det_big, hermite_normal_form, IntMatrix, Lattice};
use super::IntVector;
use crate::error::{Error, Result};

/// The unique minimal generating set of `cone ∩ lattice`, sorted
/// lexicographically.
///
/// Every lattice point of a pointed cone lies in a simplicial subcone spanned
/// by linearly independent extreme rays, so irreducible elements are either
/// rays or lattice points of a half-open fundamental parallelepiped. All
/// such candidates are collected and reduced to the minimal ones.
pub fn hilbert_basis(c: &RationalCone, lattice: &IntMatrix) -> Result<Vec<IntVector>> {
    let lat = Lattice::from_generators(c.dim(), lattice.rows())?;
    hilbert_basis_in(c.generators(), &lat)
}

pub(crate) fn hilbert_basis_in(gens: &[IntVector], lattice: &Lattice) -> Result<Vec<IntVector>> {
    let sc = SpanCone::new(gens, lattice)?;
    let z = hilbert_basis_coords(&sc)?;
    let mut out: Vec<IntVector> = z.iter().map(|v| sc.lattice.from_coords(v.coords())).collect();
    out.sort();
    Ok(out)
}

/// Hilbert basis in the lattice coordinates of a span cone.
pub(crate) fn hilbert_basis_coords(sc: &SpanCone) -> Result<Vec<IntVector>> {
    let r = sc.rank();
    if r == 0 {
        return Ok(vec![]);
    }
    if !sc.is_pointed() {
        return Err(Error::NonPointedCone);
    }
    let rays = sc.extreme_rays();
    let mut candidates: Vec<IntVector> = rays.clone();
    for subset in independent_subsets(&rays, r) {
        parallelepiped_points(&subset, &mut candidates)?;
    }
    candidates.retain(|v| !v.is_zero());
    candidates.sort();
    candidates.dedup();
    let basis: Vec<IntVector> = candidates
        .iter()
        .filter(|x| {
            !candidates
                .iter()
                .any(|y| y != *x && sc.contains_coords(&(*x - y)))
        })
        .cloned()
        .collect();
    Ok(basis)
}

fn independent_subsets(rays: &[IntVector], r: usize) -> Vec<Vec<IntVector>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        rays: &[IntVector],
        r: usize,
        start: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<IntVector>>,
    ) {
        if stack.len() == r {
            let m: Vec<IntVector> = stack.iter().map(|&i| rays[i].clone()).collect();
            if super::matrix::rank(&m) == r {
                out.push(m);
            }
            return;
        }
        for i in start..rays.len() {
            stack.push(i);
            rec(rays, r, i + 1, stack, out);
            stack.pop();
        }
    }
    rec(rays, r, 0, &mut stack, &mut out);
    out
}

/// Push the lattice points of the half-open parallelepiped spanned by the
/// rows of `g` (square, nonsingular).
fn parallelepiped_points(g: &[IntVector], out: &mut Vec<IntVector>) -> Result<()> {
    let r = g.len();
    let big: Vec<Vec<BigInt>> = g
        .iter()
        .map(|row| row.coords().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let det = det_big(&big);
    let d = det.abs().to_i128().ok_or(Error::Overflow)?;
    let sign = if det.is_negative() { -1i128 } else { 1 };
    // adj[i][j] = cofactor(j, i), so that G · adj = det · I and
    // λ · |det| = y · (sign · adj).
    let mut adj = vec![vec![0i128; r]; r];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, a) in row.iter_mut().enumerate() {
            *a = sign * cofactor(&big, j, i)?;
        }
    }
    // Coset representatives of Z^r / (row lattice of g) from its HNF diagonal.
    let hf = hermite_normal_form(&IntMatrix::from_rows(g.to_vec())?)?;
    let diag: Vec<i64> = (0..r).map(|k| hf.h.get(k, hf.pivots[k])).collect();
    let mut y = vec![0i64; r];
    loop {
        let mut x: Vec<i128> = y.iter().map(|&c| c as i128).collect();
        for j in 0..r {
            let num: i128 = (0..r).map(|i| y[i] as i128 * adj[i][j]).sum();
            let fl = Integer::div_floor(&num, &d);
            if fl != 0 {
                for (xc, &gc) in x.iter_mut().zip(g[j].coords()) {
                    *xc -= fl * gc as i128;
                }
            }
        }
        out.push(IntVector::new(
            x.into_iter()
                .map(|c| i64::try_from(c).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<_>>>()?,
        ));
        // Odometer over the box Π [0, diag_k).
        let mut k = 0;
        loop {
            if k == r {
                return Ok(());
            }
            y[hf.pivots[k]] += 1;
            if y[hf.pivots[k]] < diag[k] {
                break;
            }
            y[hf.pivots[k]] = 0;
            k += 1;
        }
    }
}

fn cofactor(m: &[Vec<BigInt>], i: usize, j: usize) -> Result<i128> {
    let minor: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .filter(|(a, _)| *a != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(b, _)| *b != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    let d = det_big(&minor);
    let d = if (i + j).is_multiple_of(2) { d } else { -d };
    d.to_i128().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iv;

    fn hb(gens: Vec<IntVector>, lattice: Vec<IntVector>) -> Vec<IntVector> {
        let dim = gens[0].dim();
        let c = RationalCone::new(dim, &gens).unwrap();
        hilbert_basis(&c, &IntMatrix::from_rows(lattice).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let z2 = vec![iv![1, 0], iv![0, 1]];
        assert_eq!(
            hb(vec![iv![1, 0], iv![1, 2]], z2.clone()),
            vec![iv![1, 0], iv![1, 1], iv![1, 2]]
        );
        assert_eq!(hb(vec![iv![2], iv![3]], vec![iv![1]]), vec![iv![1]]);
        assert_eq!(
            hb(vec![iv![1, 0], iv![1, 3]], z2),
            vec![iv![1, 0], iv![1, 1], iv![1, 2], iv![1, 3]]
        );
    }

    #[test]
    fn coarse_lattice_and_flat_cone() {
        // Even-sum vectors of the quadrant.
        let l = vec![iv![1, 1], iv![0, 2]];
        assert_eq!(
            hb(vec![iv![1, 0], iv![0, 1]], l),
            vec![iv![0, 2], iv![1, 1], iv![2, 0]]
        );
        // A ray inside Z^2.
        assert_eq!(hb(vec![iv![2, 4]], vec![iv![1, 0], iv![0, 1]]), vec![iv![1, 2]]);
    }

    #[test]
    fn non_pointed_rejected() {
        let c = RationalCone::new(2, &[iv![1, 0], iv![-1, 0], iv![0, 1]]).unwrap();
        let err = hilbert_basis(&c, &IntMatrix::identity(2)).unwrap_err();
        assert_eq!(err, Error::NonPointedCone);
    }

    #[test]
    fn three_dimensional_non_simplicial() {
        let g = vec![iv![1, 0, 0], iv![1, 1, 0], iv![1, 0, 1], iv![1, 1, 1]];
        let b = hb(g.clone(), vec![iv![1, 0, 0], iv![0, 1, 0], iv![0, 0, 1]]);
        assert_eq!(b, g.into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        // Cone over a triangle with a lattice point in the middle of the
        // fundamental domain: (1,0,0),(1,2,0),(1,0,2) needs (1,1,0),(1,0,1),(1,1,1).
        let b = hb(
            vec![iv![1, 0, 0], iv![1, 2, 0], iv![1, 0, 2]],
            vec![iv![1, 0, 0], iv![0, 1, 0], iv![0, 0, 1]],
        );
        assert_eq!(
            b,
            vec![iv![1, 0, 0], iv![1, 0, 1], iv![1, 0, 2], iv![1, 1, 0], iv![1, 1, 1], iv![1, 2, 0]]
        );
    }
}
