//! Affine and catalog-defined submonoids of `Z^n`.
//!
//! [`Monoid`] is the shared handle used by the ring and homology layers. It is
//! cheap to clone and immutable.

mod affine;
mod ops;
mod oracle;

use std::fmt;
use std::sync::Arc;

pub use affine::{AffineMonoid, Face, FacePrime};
pub use ops::{
    hn_filtration, integral_closure, is_full, saturated_stage, saturated_system, veronese_truncation,
    ClosureAmbient, DirectSystemOfMonoids, FullVerdict,
};
pub use oracle::{FamilyKind, OracleFamily, OracleMonoid};

use crate::error::{Error, Result};
use crate::exactlin::{DegreeBox, IntVector, Lattice};

/// Default half-width of the sample boxes used for box-checked invariants.
pub const SAMPLE_RADIUS: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monoid {
    Affine(Arc<AffineMonoid>),
    Oracle(Arc<OracleMonoid>),
}

impl From<AffineMonoid> for Monoid {
    fn from(a: AffineMonoid) -> Self {
        Monoid::Affine(Arc::new(a))
    }
}

impl From<OracleMonoid> for Monoid {
    fn from(o: OracleMonoid) -> Self {
        Monoid::Oracle(Arc::new(o))
    }
}

impl Monoid {
    pub fn affine(dim: usize, generators: &[IntVector]) -> Result<Monoid> {
        Ok(AffineMonoid::new(dim, generators)?.into())
    }

    /// `k[H]`'s exponent monoid `(N × N₀) ∪ {0}`.
    pub fn slope_halfplane() -> Monoid {
        OracleMonoid::slope_halfplane().into()
    }

    /// The affine monoid `H_n = ⟨(1,0), …, (1,n)⟩`.
    pub fn hn(n: u32) -> Monoid {
        let gens: Vec<IntVector> = (0..=n as i64).map(|i| IntVector::new(vec![1, i])).collect();
        AffineMonoid::new(2, &gens).expect("H_n is pointed").into()
    }

    pub fn dim(&self) -> usize {
        match self {
            Monoid::Affine(a) => a.dim(),
            Monoid::Oracle(o) => o.dim(),
        }
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        match self {
            Monoid::Affine(a) => a.contains(v),
            Monoid::Oracle(o) => o.contains(v),
        }
    }

    /// Membership with a dimension check.
    pub fn try_contains(&self, v: &IntVector) -> Result<bool> {
        v.check_dim(self.dim())?;
        Ok(self.contains(v))
    }

    /// Whether `v + m·c` lies in the monoid for some `m ≥ 0`, for `c` in the
    /// monoid. For such `c` this is the same as lying in the monoid for all
    /// large `m`, and describes the degrees of the localization at `X^c`.
    pub fn reaches(&self, v: &IntVector, c: &IntVector) -> Result<bool> {
        match self {
            Monoid::Affine(a) => {
                if !a.contains(c) {
                    return Err(Error::NotInMonoid(c.to_string()));
                }
                a.reaches(v, c)
            }
            Monoid::Oracle(o) => o.reaches(v, c),
        }
    }

    /// Same as [`Self::reaches`]; the two notions agree along monoid directions.
    pub fn eventually_contains(&self, v: &IntVector, c: &IntVector) -> Result<bool> {
        self.reaches(v, c)
    }

    /// The group of differences.
    pub fn lattice(&self) -> &Lattice {
        match self {
            Monoid::Affine(a) => a.lattice(),
            Monoid::Oracle(o) => o.lattice(),
        }
    }

    pub fn rank(&self) -> usize {
        self.lattice().rank()
    }

    pub fn is_normal(&self) -> bool {
        match self {
            Monoid::Affine(a) => a.is_normal(),
            Monoid::Oracle(o) => o.is_normal(),
        }
    }

    /// The affine model when the monoid is finitely generated.
    pub fn affine_view(&self) -> Option<&AffineMonoid> {
        match self {
            Monoid::Affine(a) => Some(a),
            Monoid::Oracle(o) => o.affine_model().map(|a| a.as_ref()),
        }
    }

    pub fn is_affine(&self) -> bool {
        self.affine_view().is_some()
    }

    pub fn faces(&self) -> &[Face] {
        match self {
            Monoid::Affine(a) => a.faces(),
            Monoid::Oracle(o) => o.faces(),
        }
    }

    pub fn face_primes(&self) -> Vec<FacePrime> {
        match self {
            Monoid::Affine(a) => a.face_primes(),
            Monoid::Oracle(o) => o.face_primes(),
        }
    }

    /// Monoid elements of a box, in lexicographic order.
    pub fn elements_in(&self, b: &DegreeBox) -> Vec<IntVector> {
        b.points().filter(|v| self.contains(v)).collect()
    }

    pub fn sample_box(&self) -> DegreeBox {
        DegreeBox::symmetric(self.dim(), SAMPLE_RADIUS)
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::Affine(a) => {
                write!(f, "affine<")?;
                for (i, g) in a.generators().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ">")
            }
            Monoid::Oracle(o) => match o.family() {
                OracleFamily::SlopeHalfplane => write!(f, "H"),
                OracleFamily::SlopeBounded(n) => write!(f, "H_{n}"),
                OracleFamily::VeroneseCongruence { d, s } => write!(f, "veronese(d={d},s={s})"),
                OracleFamily::WrappedAffine(a) => write!(f, "wrapped{}", Monoid::Affine(a.clone())),
            },
        }
    }
}

#[cfg(test)]
mod tests;
