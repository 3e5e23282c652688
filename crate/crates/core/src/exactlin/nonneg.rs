use super::cone::positive_grading;
use super::{IntMatrix, IntVector};
use crate::error::{Error, Result};

/// Nonnegative solutions of `x·A = b` found inside a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonnegSolutions {
    pub solutions: Vec<IntVector>,
    /// True when a positive grading bounds every solution inside the box, so
    /// the list is all solutions; false when the search was box-truncated.
    pub complete: bool,
}

/// All `x ≥ 0` with `x·A = b` and `x_i ≤ bound`, in lexicographic order.
pub fn solve_nonneg(a: &IntMatrix, b: &IntVector, bound: u64) -> Result<NonnegSolutions> {
    b.check_dim(a.ncols())?;
    let plan = SearchPlan::new(a, b, Some(bound))?;
    let mut sols = Vec::new();
    plan.search(&mut |x| {
        sols.push(IntVector::new(x.iter().map(|&c| c as i64).collect()));
        true
    });
    Ok(NonnegSolutions {
        solutions: sols,
        complete: plan.complete,
    })
}

/// One nonnegative solution of `x·A = b` when the rows span a pointed cone.
///
/// Fails with [`Error::NonPointedCone`] when no grading certifies the search.
pub fn find_nonneg(a: &IntMatrix, b: &IntVector) -> Result<Option<Vec<u64>>> {
    b.check_dim(a.ncols())?;
    let plan = SearchPlan::new(a, b, None)?;
    if plan.grading.is_none() {
        return Err(Error::NonPointedCone);
    }
    let mut found = None;
    plan.search(&mut |x| {
        found = Some(x.to_vec());
        false
    });
    Ok(found)
}

struct SearchPlan<'a> {
    a: &'a IntMatrix,
    b: &'a IntVector,
    grading: Option<IntVector>,
    caps: Vec<u64>,
    complete: bool,
}

impl<'a> SearchPlan<'a> {
    fn new(a: &'a IntMatrix, b: &'a IntVector, bound: Option<u64>) -> Result<Self> {
        let dim = a.ncols();
        let grading = if a.rows().iter().any(|r| r.is_zero()) {
            None
        } else {
            positive_grading(dim, a.rows())?
        };
        let mut complete = grading.is_some();
        let caps = match &grading {
            Some(w) => {
                let total = w.dot(b);
                a.rows()
                    .iter()
                    .map(|r| {
                        let cap = if total < 0 { 0 } else { (total / w.dot(r)) as u64 };
                        match bound {
                            Some(bd) if bd < cap => {
                                complete = false;
                                bd
                            }
                            _ => cap,
                        }
                    })
                    .collect()
            }
            None => vec![bound.unwrap_or(0); a.nrows()],
        };
        Ok(SearchPlan {
            a,
            b,
            grading,
            caps,
            complete,
        })
    }

    /// Visit solutions in lexicographic order until the visitor returns false.
    fn search(&self, visit: &mut dyn FnMut(&[u64]) -> bool) {
        if let Some(w) = &self.grading {
            if w.dot(self.b) < 0 {
                return;
            }
        }
        let mut x = vec![0u64; self.a.nrows()];
        let rest: Vec<i64> = self.b.coords().to_vec();
        self.rec(0, &mut x, rest, visit);
    }

    fn rec(
        &self,
        i: usize,
        x: &mut Vec<u64>,
        rest: Vec<i64>,
        visit: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if i == x.len() {
            if rest.iter().all(|&c| c == 0) {
                return visit(x);
            }
            return true;
        }
        let row = self.a.row(i).coords();
        let mut cur = rest;
        for k in 0..=self.caps[i] {
            if let Some(w) = &self.grading {
                let g: i64 = w.coords().iter().zip(&cur).map(|(a, b)| a * b).sum();
                if g < 0 {
                    break;
                }
            }
            x[i] = k;
            if !self.rec(i + 1, x, cur.clone(), visit) {
                return false;
            }
            for (c, r) in cur.iter_mut().zip(row) {
                *c -= r;
            }
        }
        x[i] = 0;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iv;

    fn m(rows: Vec<IntVector>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn examples() {
        let a = m(vec![iv![1, 0], iv![1, 2]]);
        let s = solve_nonneg(&a, &iv![3, 2], 3).unwrap();
        assert_eq!(s.solutions, vec![iv![2, 1]]);
        assert!(s.complete);
        let s = solve_nonneg(&a, &iv![1, 1], 3).unwrap();
        assert!(s.solutions.is_empty() && s.complete);
        let s = solve_nonneg(&a, &iv![0, 0], 0).unwrap();
        assert_eq!(s.solutions, vec![iv![0, 0]]);
        assert!(s.complete);
    }

    #[test]
    fn truncation_flag() {
        let a = m(vec![iv![1], iv![2]]);
        let s = solve_nonneg(&a, &iv![6], 2).unwrap();
        assert!(!s.complete);
        assert_eq!(s.solutions, vec![iv![2, 2]]);
        let s = solve_nonneg(&a, &iv![6], 6).unwrap();
        assert!(s.complete);
        assert_eq!(s.solutions.len(), 4);
        // Non-pointed rows: never certified.
        let a = m(vec![iv![1], iv![-1]]);
        let s = solve_nonneg(&a, &iv![0], 2).unwrap();
        assert!(!s.complete);
        assert_eq!(s.solutions.len(), 3);
    }

    #[test]
    fn find_first() {
        let a = m(vec![iv![2], iv![3]]);
        assert_eq!(find_nonneg(&a, &iv![7]).unwrap(), Some(vec![2, 1]));
        assert_eq!(find_nonneg(&a, &iv![1]).unwrap(), None);
    }
}
