use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntVector;
use crate::error::{Error, Result};

/// A rectangular integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    /// Rejects empty and ragged input.
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyMatrix);
        };
        let ncols = first.dim();
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != ncols {
                return Err(Error::RaggedMatrix {
                    row: i,
                    expected: ncols,
                    found: r.dim(),
                });
            }
        }
        Ok(IntMatrix { rows, ncols })
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0i128; other.ncols];
                for (k, &a) in r.coords().iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (j, o) in out.iter_mut().enumerate() {
                        *o += a as i128 * other.get(k, j) as i128;
                    }
                }
                out.into_iter()
                    .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map(IntVector::new)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix {
            rows,
            ncols: other.ncols,
        })
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, x: &[i64]) -> IntVector {
        let mut out = vec![0i64; self.ncols];
        for (xi, r) in x.iter().zip(&self.rows) {
            for (o, c) in out.iter_mut().zip(r.coords()) {
                *o += xi * c;
            }
        }
        IntVector::new(out)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if self.nrows() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: self.nrows(),
            });
        }
        Ok(det_big(&to_big_rows(&self.rows)))
    }
}

pub(crate) fn to_big_rows(rows: &[IntVector]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.coords().iter().map(|&c| BigInt::from(c)).collect())
        .collect()
}

fn from_big_row(r: &[BigInt]) -> Result<IntVector> {
    r.iter()
        .map(|c| c.to_i64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(IntVector::new)
}

/// Fraction-free (Bareiss) determinant.
pub(crate) fn det_big(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Row-style Hermite normal form `H = U·M`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    /// Same shape as the input; the first `rank` rows are nonzero and in
    /// echelon form with positive pivots, entries above a pivot reduced into
    /// `[0, pivot)`.
    pub h: IntMatrix,
    /// Square unimodular transform.
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    /// The nonzero rows: a basis of the row lattice.
    pub fn basis(&self) -> Vec<IntVector> {
        self.h.rows[..self.rank].to_vec()
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> Result<HermiteForm> {
    let (h, u, pivots) = hnf_big(&to_big_rows(&m.rows), m.ncols);
    let rank = pivots.len();
    let h = h.iter().map(|r| from_big_row(r)).collect::<Result<Vec<_>>>()?;
    let u = u.iter().map(|r| from_big_row(r)).collect::<Result<Vec<_>>>()?;
    let n = u.len();
    Ok(HermiteForm {
        h: IntMatrix {
            rows: h,
            ncols: m.ncols,
        },
        u: IntMatrix { rows: u, ncols: n },
        rank,
        pivots,
    })
}

type BigRows = Vec<Vec<BigInt>>;

fn hnf_big(input: &[Vec<BigInt>], ncols: usize) -> (BigRows, BigRows, Vec<usize>) {
    let nrows = input.len();
    let mut a = input.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            (0..nrows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..ncols {
        if p == nrows {
            break;
        }
        loop {
            let best = (p..nrows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
            let Some(k) = best else { break };
            a.swap(p, k);
            u.swap(p, k);
            let mut clean = true;
            for r in p + 1..nrows {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = a[r][col].div_floor(&a[p][col]);
                sub_row(&mut a, r, p, &q);
                sub_row(&mut u, r, p, &q);
                if !a[r][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[p][col].is_zero() {
            continue;
        }
        if a[p][col].is_negative() {
            a[p].iter_mut().for_each(|x| *x = -&*x);
            u[p].iter_mut().for_each(|x| *x = -&*x);
        }
        for r in 0..p {
            let q = a[r][col].div_floor(&a[p][col]);
            if !q.is_zero() {
                sub_row(&mut a, r, p, &q);
                sub_row(&mut u, r, p, &q);
            }
        }
        pivots.push(col);
        p += 1;
    }
    (a, u, pivots)
}

fn sub_row(m: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    let (t, s) = if target < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

/// Integer coefficients `x` with `x·basis = v`, if any exist.
///
/// Rows of `basis` may be dependent; one solution is returned.
pub fn lattice_membership(basis: &IntMatrix, v: &IntVector) -> Result<Option<Vec<i64>>> {
    v.check_dim(basis.ncols())?;
    let hf = hermite_normal_form(basis)?;
    let Some(coeffs) = echelon_coords(&hf.h.rows[..hf.rank], &hf.pivots, v) else {
        return Ok(None);
    };
    let mut x = vec![0i128; basis.nrows()];
    for (c, urow) in coeffs.iter().zip(&hf.u.rows) {
        for (xi, &uij) in x.iter_mut().zip(urow.coords()) {
            *xi += *c as i128 * uij as i128;
        }
    }
    x.into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Coordinates of `v` with respect to echelon rows, by forward substitution.
fn echelon_coords(rows: &[IntVector], pivots: &[usize], v: &IntVector) -> Option<Vec<i64>> {
    let mut residual: Vec<i128> = v.coords().iter().map(|&c| c as i128).collect();
    let mut out = Vec::with_capacity(rows.len());
    for (r, &pc) in rows.iter().zip(pivots) {
        // Entries left of the pivot column must already be cleared.
        if residual[..pc].iter().any(|&c| c != 0) {
            return None;
        }
        let piv = r[pc] as i128;
        if residual[pc] % piv != 0 {
            return None;
        }
        let c = residual[pc] / piv;
        for (x, &y) in residual.iter_mut().zip(r.coords()) {
            *x -= c * y as i128;
        }
        out.push(c as i64);
    }
    if residual.iter().any(|&c| c != 0) {
        return None;
    }
    Some(out)
}

/// A full-rank description of a sublattice of `Z^n` by an HNF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<IntVector>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn full(dim: usize) -> Self {
        Lattice {
            dim,
            basis: (0..dim).map(|i| IntVector::unit(dim, i)).collect(),
            pivots: (0..dim).collect(),
        }
    }

    pub fn from_generators(dim: usize, gens: &[IntVector]) -> Result<Self> {
        for g in gens {
            g.check_dim(dim)?;
        }
        let nonzero: Vec<IntVector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if nonzero.is_empty() {
            return Ok(Lattice {
                dim,
                basis: vec![],
                pivots: vec![],
            });
        }
        let hf = hermite_normal_form(&IntMatrix::from_rows(nonzero)?)?;
        Ok(Lattice {
            dim,
            basis: hf.basis(),
            pivots: hf.pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// HNF basis rows.
    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Option<IntMatrix> {
        IntMatrix::from_rows(self.basis.clone()).ok()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates with respect to the HNF basis.
    pub fn coords(&self, v: &IntVector) -> Option<Vec<i64>> {
        debug_assert_eq!(v.dim(), self.dim);
        echelon_coords(&self.basis, &self.pivots, v)
    }

    pub fn from_coords(&self, z: &[i64]) -> IntVector {
        let mut out = vec![0i64; self.dim];
        for (zi, r) in z.iter().zip(&self.basis) {
            for (o, c) in out.iter_mut().zip(r.coords()) {
                *o += zi * c;
            }
        }
        IntVector::new(out)
    }

    /// Intersection with the rational span of `gens`.
    pub fn intersect_span(&self, gens: &[IntVector]) -> Result<Lattice> {
        let perp = orthogonal_complement(self.dim, gens)?;
        if perp.is_empty() || self.basis.is_empty() {
            return Ok(self.clone());
        }
        // z·B·Eᵀ = 0 for the complement basis E.
        let m: Vec<IntVector> = self
            .basis
            .iter()
            .map(|b| IntVector::new(perp.iter().map(|e| b.dot(e)).collect()))
            .collect();
        let ker = left_kernel(&m)?;
        let gens: Vec<IntVector> = ker.iter().map(|z| self.from_coords(z.coords())).collect();
        Lattice::from_generators(self.dim, &gens)
    }
}

/// Basis of the integer left kernel `{z : z·M = 0}` of the row list `m`.
pub fn left_kernel(m: &[IntVector]) -> Result<Vec<IntVector>> {
    if m.is_empty() {
        return Ok(vec![]);
    }
    let mat = IntMatrix::from_rows(m.to_vec())?;
    let hf = hermite_normal_form(&mat)?;
    Ok(hf.u.rows[hf.rank..].to_vec())
}

/// Integer basis of the vectors orthogonal to every element of `gens`.
pub fn orthogonal_complement(dim: usize, gens: &[IntVector]) -> Result<Vec<IntVector>> {
    let nonzero: Vec<&IntVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok((0..dim).map(|i| IntVector::unit(dim, i)).collect());
    }
    // Columns of the generator matrix become rows of the transpose.
    let transpose: Vec<IntVector> = (0..dim)
        .map(|j| IntVector::new(nonzero.iter().map(|g| g[j]).collect()))
        .collect();
    left_kernel(&transpose)
}

/// Rank over `Q`.
pub fn rank(rows: &[IntVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].dim();
    let (_, _, pivots) = hnf_big(&to_big_rows(rows), ncols);
    pivots.len()
}

/// Solve `z·rows = v` over `Q` for linearly independent `rows`.
pub(crate) fn solve_rational(rows: &[IntVector], v: &IntVector) -> Option<Vec<BigRational>> {
    let r = rows.len();
    let n = v.dim();
    // Augmented system: columns are unknowns z_i, one equation per coordinate.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = rows
                .iter()
                .map(|b| BigRational::from_integer(BigInt::from(b[j])))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(v[j])));
            row
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut pr = 0;
    for c in 0..r {
        let Some(k) = (pr..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(pr, k);
        let inv = a[pr][c].recip();
        for x in a[pr].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != pr && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=r {
                    let t = &f * &a[pr][j];
                    a[i][j] -= t;
                }
            }
        }
        piv_cols.push(c);
        pr += 1;
    }
    if a[pr..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut z = vec![BigRational::zero(); r];
    for (i, &c) in piv_cols.iter().enumerate() {
        z[c] = a[i][r].clone();
    }
    Some(z)
}

/// Scale a rational vector to the primitive integer vector on the same ray.
pub(crate) fn primitive_from_rational(v: &[BigRational]) -> Result<IntVector> {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let ints: Vec<BigInt> = if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    };
    from_big_row(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iv;

    fn mat(rows: Vec<IntVector>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn hnf_identity() {
        let hf = hermite_normal_form(&IntMatrix::identity(2)).unwrap();
        assert_eq!(hf.h, IntMatrix::identity(2));
        assert_eq!(hf.u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_small_cases() {
        let m = mat(vec![iv![2, 0], iv![1, 1]]);
        let hf = hermite_normal_form(&m).unwrap();
        assert_eq!(hf.basis(), vec![iv![1, 1], iv![0, 2]]);
        assert_eq!(hf.u.mul(&m).unwrap(), hf.h);

        let m = mat(vec![iv![2], iv![3]]);
        let hf = hermite_normal_form(&m).unwrap();
        assert_eq!(hf.basis(), vec![iv![1]]);
        assert_eq!(hf.u.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn empty_matrix_rejected() {
        assert_eq!(IntMatrix::from_rows(vec![]), Err(Error::EmptyMatrix));
    }

    #[test]
    fn membership_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(lattice_membership(&id, &iv![5, -3]).unwrap(), Some(vec![5, -3]));
        let b = mat(vec![iv![1, 0], iv![1, 2]]);
        assert_eq!(lattice_membership(&b, &iv![0, 1]).unwrap(), None);
        assert_eq!(lattice_membership(&b, &iv![0, 2]).unwrap(), Some(vec![-1, 1]));
        let b = mat(vec![iv![2]]);
        assert_eq!(lattice_membership(&b, &iv![3]).unwrap(), None);
        assert!(lattice_membership(&b, &iv![3, 1]).is_err());
    }

    #[test]
    fn dependent_rows_membership() {
        let b = mat(vec![iv![2, 0], iv![3, 0], iv![0, 4]]);
        let x = lattice_membership(&b, &iv![1, 8]).unwrap().unwrap();
        assert_eq!(b.left_mul(&x), iv![1, 8]);
    }

    #[test]
    fn span_intersection() {
        // Z^2 meets the line through (2,4) in the multiples of (1,2).
        let l = Lattice::full(2).intersect_span(&[iv![2, 4]]).unwrap();
        assert_eq!(l.basis(), &[iv![1, 2]]);
        let perp = orthogonal_complement(3, &[iv![1, 0, 0], iv![0, 1, 1]]).unwrap();
        assert_eq!(perp.len(), 1);
        assert_eq!(perp[0].dot(&iv![0, 1, 1]), 0);
    }
}
