use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: `Q` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum Field {
    #[serde(rename = "Q")]
    #[default]
    Rationals,
    #[serde(rename = "Fp")]
    Prime(u32),
}


fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Rejects `Prime(p)` with composite `p` (possible after deserializing).
    pub fn validate(self) -> Result<Field> {
        match self {
            Field::Rationals => Ok(self),
            Field::Prime(p) => Field::prime(p),
        }
    }

    pub fn zero(self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldScalar {
        match self {
            Field::Rationals => FieldScalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldScalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_rational(self, q: &BigRational) -> Result<FieldScalar> {
        match self {
            Field::Rationals => Ok(FieldScalar::Rational(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let num = (q.numer() % &pm + &pm) % &pm;
                let den = (q.denom() % &pm + &pm) % &pm;
                if den.is_zero() {
                    return Err(Error::InvalidField(format!("denominator of {q} vanishes mod {p}")));
                }
                let n = self.from_i64(num.to_i64().expect("reduced residue"));
                let d = self.from_i64(den.to_i64().expect("reduced residue"));
                Ok(n.mul(&d.inv().expect("nonzero residue")))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of `Q` or `F_p` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Residue { value: u64, p: u32 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rationals,
            FieldScalar::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_one(),
            FieldScalar::Residue { value, .. } => *value == 1,
        }
    }

    fn pair<'a>(&'a self, other: &'a FieldScalar) -> (&'a FieldScalar, &'a FieldScalar) {
        assert_eq!(self.field(), other.field(), "scalars from different fields");
        (self, other)
    }

    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        match self.pair(other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Residue { value: a, p }, FieldScalar::Residue { value: b, .. }) => {
                FieldScalar::Residue {
                    value: (a + b) % *p as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Residue { value, p } => FieldScalar::Residue {
                value: (*p as u64 - value) % *p as u64,
                p: *p,
            },
        }
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        match self.pair(other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Residue { value: a, p }, FieldScalar::Residue { value: b, .. }) => {
                FieldScalar::Residue {
                    value: (a * b) % *p as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(a.recip()),
            FieldScalar::Residue { value, p } => {
                // Fermat: a^(p−2).
                let m = *p as u64;
                let (mut base, mut exp, mut acc) = (*value, m - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                FieldScalar::Residue { value: acc, p: *p }
            }
        })
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", -q.numer(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldScalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f2 = Field::prime(2).unwrap();
        assert!(f2.one().add(&f2.one()).is_zero());
        let f7 = Field::prime(7).unwrap();
        let three = f7.from_i64(3);
        assert!(three.mul(&three.inv().unwrap()).is_one());
        assert_eq!(f7.from_i64(-1), f7.from_i64(6));
        let q = Field::Rationals;
        let half = q.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.add(&half), q.one());
        assert_eq!(half.neg().to_string(), "-1/2");
        let h7 = f7.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(h7, f7.from_i64(4));
        assert!(Field::prime(9).is_err());
        assert!(f2.from_rational(&BigRational::new(1.into(), 2.into())).is_err());
    }

    #[test]
    fn serde_shape() {
        assert_eq!(serde_json::to_string(&Field::Rationals).unwrap(), "\"Q\"");
        assert_eq!(serde_json::to_string(&Field::Prime(5)).unwrap(), "{\"Fp\":5}");
        let f: Field = serde_json::from_str("{\"Fp\":5}").unwrap();
        assert_eq!(f, Field::Prime(5));
    }
}
