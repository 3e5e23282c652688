use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer point of `Z^n`: a monoid element or a multidegree.
///
/// Coordinates are machine integers. Everything the crate computes with stays
/// far below the `i64` range; intermediate linear algebra that could grow
/// (Hermite forms, determinants, double description) runs in wider or
/// arbitrary-precision arithmetic and converts back.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(coords: Vec<i64>) -> Self {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        IntVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &IntVector) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// The vector divided by its content.
    pub fn primitive(&self) -> IntVector {
        let g = self.content();
        if g <= 1 {
            return self.clone();
        }
        IntVector(self.0.iter().map(|c| c / g).collect())
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Append zero coordinates up to `dim`.
    pub fn padded(&self, dim: usize) -> IntVector {
        let mut c = self.0.clone();
        c.resize(dim.max(c.len()), 0);
        IntVector(c)
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl std::ops::Index<usize> for IntVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Build an `IntVector` from a literal list.
#[macro_export]
macro_rules! iv {
    ($($x:expr),* $(,)?) => {
        $crate::exactlin::IntVector::new(vec![$($x as i64),*])
    };
}
