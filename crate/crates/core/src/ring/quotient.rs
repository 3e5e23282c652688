use super::field::Field;
use super::ideal::{prime_included, Certificate, MonomialIdeal};
use crate::error::{Error, Result};
use crate::exactlin::{DegreeBox, IntVector};
use crate::monoids::{FacePrime, Monoid};

/// `k[C]/I` for a monomial ideal `I`, possibly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    ideal: MonomialIdeal,
    field: Field,
}

/// Outcome of a zerodivisor test on a monomial of a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZerodivisorVerdict {
    pub zerodivisor: bool,
    /// An exponent `w ∉ E` with `w + m ∈ E`.
    pub witness: Option<IntVector>,
    pub certificate: Certificate,
}

impl QuotientRing {
    pub fn new(ideal: MonomialIdeal, field: Field) -> Result<Self> {
        Ok(QuotientRing {
            ideal,
            field: field.validate()?,
        })
    }

    /// `k[C]` itself.
    pub fn full(monoid: &Monoid, field: Field) -> Result<Self> {
        Self::new(MonomialIdeal::zero(monoid), field)
    }

    pub fn monoid(&self) -> &Monoid {
        self.ideal.monoid()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Whether the graded piece at `a` is `k` (rather than 0).
    pub fn piece_nonzero(&self, a: &IntVector) -> bool {
        self.monoid().contains(a) && !self.ideal.contains_exponent(a)
    }

    pub fn krull_dim(&self) -> Result<usize> {
        if !self.ideal.is_zero() {
            return Err(Error::Unsupported(
                "dimension of a proper quotient is not computed".into(),
            ));
        }
        Ok(self.monoid().rank())
    }

    /// Whether multiplication by `X^m` has a kernel on `k[C]/I`. The monomial
    /// must be nonzero in the quotient.
    pub fn is_zerodivisor(&self, m: &IntVector, b: Option<&DegreeBox>) -> Result<ZerodivisorVerdict> {
        m.check_dim(self.monoid().dim())?;
        if !self.monoid().contains(m) {
            return Err(Error::NotInMonoid(m.to_string()));
        }
        if self.ideal.contains_exponent(m) {
            return Err(Error::ZeroInQuotient(m.to_string()));
        }
        let colon = self.ideal.colon_monomial(m, b)?;
        let witness = colon
            .ideal
            .generators()
            .iter()
            .find(|g| !self.ideal.contains_exponent(g))
            .cloned();
        Ok(ZerodivisorVerdict {
            zerodivisor: witness.is_some(),
            witness,
            certificate: colon.certificate,
        })
    }

    /// Minimal face primes of `I` in `k[C]`, which are the minimal primes of
    /// the quotient.
    pub fn min_primes(&self) -> Vec<FacePrime> {
        if self.ideal.is_zero() {
            return self
                .monoid()
                .face_primes()
                .into_iter()
                .filter(|p| p.height == 0)
                .collect();
        }
        self.ideal.min_face_primes()
    }

    /// Height of the image of `J` in `k[C]/I`: the least, over minimal primes
    /// `P` of `I + J`, of the longest drop `ht P − ht q` to a minimal prime
    /// `q ⊆ P` of the quotient.
    pub fn height_of(&self, j: &MonomialIdeal) -> Result<usize> {
        if j.monoid() != self.monoid() {
            return Err(Error::RingMismatch);
        }
        let sum = self.ideal.sum(j)?;
        if sum.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if j.generators().iter().all(|g| self.ideal.contains_exponent(g)) {
            return Ok(0);
        }
        let base = self.min_primes();
        sum.min_face_primes()
            .iter()
            .map(|p| {
                base.iter()
                    .filter(|q| prime_included(q, p))
                    .map(|q| p.height - q.height)
                    .max()
                    .unwrap_or(0)
            })
            .min()
            .ok_or(Error::UnitIdeal)
    }
}
