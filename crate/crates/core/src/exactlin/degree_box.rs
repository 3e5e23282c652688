use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::IntVector;
use crate::error::{Error, Result};

/// A finite product of closed integer intervals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeBox {
    ranges: Vec<(i64, i64)>,
}

impl DegreeBox {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self> {
        if ranges.is_empty() {
            return Err(Error::InvalidBox("no coordinates".into()));
        }
        if let Some((lo, hi)) = ranges.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::InvalidBox(format!("empty interval {lo}..{hi}")));
        }
        Ok(DegreeBox { ranges })
    }

    /// `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![(lo, hi); dim])
    }

    /// `[−r, r]^dim`.
    pub fn symmetric(dim: usize, r: i64) -> Self {
        Self::cube(dim, -r, r).expect("nonempty box")
    }

    pub fn dim(&self) -> usize {
        self.ranges.len()
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    /// A one-interval box stretched to `dim` coordinates; other boxes must
    /// already have that dimension.
    pub fn for_dim(&self, dim: usize) -> Result<DegreeBox> {
        if self.ranges.len() == dim {
            Ok(self.clone())
        } else if self.ranges.len() == 1 {
            Ok(DegreeBox {
                ranges: vec![self.ranges[0]; dim],
            })
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.ranges.len(),
            })
        }
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        v.dim() == self.dim()
            && v.coords()
                .iter()
                .zip(&self.ranges)
                .all(|(&x, &(lo, hi))| lo <= x && x <= hi)
    }

    pub fn len(&self) -> u64 {
        self.ranges
            .iter()
            .map(|(lo, hi)| (hi - lo + 1) as u64)
            .fold(1u64, |a, b| a.saturating_mul(b))
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> BoxPoints<'_> {
        BoxPoints {
            b: self,
            next: Some(self.ranges.iter().map(|r| r.0).collect()),
        }
    }
}

pub struct BoxPoints<'a> {
    b: &'a DegreeBox,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxPoints<'_> {
    type Item = IntVector;

    fn next(&mut self) -> Option<IntVector> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        let mut k = nxt.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if nxt[k] < self.b.ranges[k].1 {
                nxt[k] += 1;
                self.next = Some(nxt);
                break;
            }
            nxt[k] = self.b.ranges[k].0;
        }
        Some(IntVector::new(cur))
    }
}

impl fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.ranges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{lo}..{hi}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeBox {
    type Err = Error;

    /// `a..b[,a..b…]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBox(s.to_string());
        let mut ranges = Vec::new();
        for part in s.split(',') {
            let (lo, hi) = part.trim().split_once("..").ok_or_else(bad)?;
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            ranges.push((lo, hi));
        }
        DegreeBox::new(ranges)
    }
}
