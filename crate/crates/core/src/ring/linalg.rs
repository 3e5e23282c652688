//! Dense linear algebra over the coefficient field, sized for degree slices.

use super::field::{Field, FieldScalar};

pub type Vector = Vec<FieldScalar>;

/// Row-reduce in place; returns pivot columns.
pub fn rref(m: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let t = m[row][c].mul(&f);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &[Vector], ncols: usize) -> usize {
    let mut w = m.to_vec();
    rref(&mut w, ncols).len()
}

/// Basis of `{x : M·x = 0}` for `M` given by rows of length `ncols`.
pub fn kernel(field: Field, m: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); ncols];
            x[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = w[r][f].neg();
            }
            x
        })
        .collect()
}

/// `M·x` for `M` given by rows.
pub fn apply(field: Field, m: &[Vector], x: &[FieldScalar]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(field.zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

/// Coordinates of `v` in the span of independent `basis` vectors, if any.
pub fn coordinates(field: Field, basis: &[Vector], v: &[FieldScalar]) -> Option<Vector> {
    let n = v.len();
    let k = basis.len();
    // Columns are the basis vectors, augmented by v.
    let mut m: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row: Vector = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![field.zero(); k];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][k].clone();
    }
    Some(x)
}

/// Extend an independent family `base` by vectors chosen greedily from
/// `candidates`; returns the chosen ones.
pub fn extend_basis(base: &[Vector], candidates: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut all = base.to_vec();
    let mut chosen = Vec::new();
    let mut r = rank(&all, ncols);
    for c in candidates {
        all.push(c.clone());
        let r2 = rank(&all, ncols);
        if r2 > r {
            chosen.push(c.clone());
            r = r2;
        } else {
            all.pop();
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn rank_depends_on_field() {
        let q = Field::Rationals;
        let m = vec![v(q, &[1, 1]), v(q, &[1, -1])];
        assert_eq!(rank(&m, 2), 2);
        let f2 = Field::Prime(2);
        let m = vec![v(f2, &[1, 1]), v(f2, &[1, -1])];
        assert_eq!(rank(&m, 2), 1);
    }

    #[test]
    fn kernel_and_coordinates() {
        let q = Field::Rationals;
        let m = vec![v(q, &[1, 1, 0]), v(q, &[0, 1, 1])];
        let k = kernel(q, &m, 3);
        assert_eq!(k.len(), 1);
        assert!(apply(q, &m, &k[0]).iter().all(|x| x.is_zero()));
        let basis = vec![v(q, &[1, 0, 1]), v(q, &[0, 1, 0])];
        assert_eq!(coordinates(q, &basis, &v(q, &[2, 3, 2])), Some(v(q, &[2, 3])));
        assert_eq!(coordinates(q, &basis, &v(q, &[1, 0, 0])), None);
        let ext = extend_basis(&basis, &[v(q, &[1, 1, 1]), v(q, &[1, 0, 0])], 3);
        assert_eq!(ext, vec![v(q, &[1, 0, 0])]);
    }
}
