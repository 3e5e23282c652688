//! JSON documents describing monoids, ideals and rings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::IntVector;
use crate::monoids::{AffineMonoid, Monoid, OracleMonoid};
use crate::ring::{Field, MonomialIdeal, QuotientRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyDoc {
    SlopeHalfplane,
    SlopeBounded,
    Veronese,
    WrappedAffine,
}

/// `{"kind":"affine","dim":2,"generators":[[1,0],[1,2]]}` or
/// `{"kind":"oracle","family":"slope_bounded","n":3,"dim":2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonoidDoc {
    Affine {
        dim: usize,
        generators: Vec<Vec<i64>>,
    },
    Oracle {
        family: FamilyDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s: Option<usize>,
        /// Generators of the wrapped monoid.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<Vec<i64>>>,
    },
}

fn vectors(rows: &[Vec<i64>]) -> Vec<IntVector> {
    rows.iter().map(|r| IntVector::new(r.clone())).collect()
}

fn missing(field: &str, family: FamilyDoc) -> Error {
    Error::Parse(format!("oracle family {family:?} needs `{field}`"))
}

impl MonoidDoc {
    pub fn build(&self) -> Result<Monoid> {
        let (oracle, dim) = match self {
            MonoidDoc::Affine { dim, generators } => return Monoid::affine(*dim, &vectors(generators)),
            MonoidDoc::Oracle {
                family,
                dim,
                n,
                d,
                s,
                generators,
            } => {
                let o = match family {
                    FamilyDoc::SlopeHalfplane => OracleMonoid::slope_halfplane(),
                    FamilyDoc::SlopeBounded => OracleMonoid::slope_bounded(n.ok_or_else(|| missing("n", *family))?)?,
                    FamilyDoc::Veronese => OracleMonoid::veronese(
                        d.ok_or_else(|| missing("d", *family))?,
                        s.or(*dim).ok_or_else(|| missing("s", *family))?,
                    )?,
                    FamilyDoc::WrappedAffine => {
                        let g = generators.as_ref().ok_or_else(|| missing("generators", *family))?;
                        let dim = dim.ok_or_else(|| missing("dim", *family))?;
                        OracleMonoid::wrapped(AffineMonoid::new(dim, &vectors(g))?)?
                    }
                };
                (o, *dim)
            }
        };
        if let Some(dim) = dim {
            if dim != oracle.dim() {
                return Err(Error::DimensionMismatch {
                    expected: oracle.dim(),
                    found: dim,
                });
            }
        }
        Ok(Monoid::Oracle(Arc::new(oracle)))
    }
}

/// A monoid, ideal generators and coefficient field. It is also the ideal
/// document, since the field defaults to `Q` and the generators to none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub monoid: MonoidDoc,
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub field: Field,
}

impl RingDoc {
    pub fn from_json(text: &str) -> Result<RingDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(&self.monoid.build()?, &vectors(&self.generators))
    }

    pub fn ring(&self) -> Result<QuotientRing> {
        QuotientRing::new(self.ideal()?, self.field)
    }
}

impl MonoidDoc {
    pub fn from_json(text: &str) -> Result<MonoidDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iv;

    #[test]
    fn documents() {
        let m = MonoidDoc::from_json(r#"{"kind":"affine","dim":2,"generators":[[1,0],[1,2]]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(m.contains(&iv![2, 2]) && !m.contains(&iv![1, 1]));
        let h = MonoidDoc::from_json(r#"{"kind":"oracle","family":"slope_halfplane","dim":2}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(h, Monoid::slope_halfplane());
        let h3 = MonoidDoc::from_json(r#"{"kind":"oracle","family":"slope_bounded","n":3,"dim":2}"#)
            .unwrap()
            .build()
            .unwrap();
        assert!(h3.contains(&iv![1, 3]) && !h3.contains(&iv![1, 4]));
        let v = MonoidDoc::from_json(r#"{"kind":"oracle","family":"veronese","d":2,"s":4}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(v.dim(), 4);
        assert!(MonoidDoc::from_json(r#"{"kind":"oracle","family":"slope_bounded"}"#)
            .unwrap()
            .build()
            .is_err());
        assert!(MonoidDoc::from_json(r#"{"kind":"oracle","family":"slope_halfplane","dim":3}"#)
            .unwrap()
            .build()
            .is_err());
        let r = RingDoc::from_json(
            r#"{"monoid":{"kind":"oracle","family":"slope_halfplane","dim":2},"generators":[[1,1]],"field":{"Fp":5}}"#,
        )
        .unwrap()
        .ring()
        .unwrap();
        assert_eq!(r.field(), Field::Prime(5));
        assert!(r.ideal().contains_exponent(&iv![2, 3]) && !r.ideal().contains_exponent(&iv![1, 2]));
        assert!(RingDoc::from_json(r#"{"monoid":{"kind":"affine","dim":1,"generators":[[1]]},"field":{"Fp":4}}"#)
            .unwrap()
            .ring()
            .is_err());
    }
}
