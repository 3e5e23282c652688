//! The semigroup ring `k[C]`, its monomial ideals and their quotients.

mod element;
mod field;
mod ideal;
pub mod linalg;
mod quotient;

pub use element::RingElement;
pub use field::{Field, FieldScalar};
pub use ideal::{
    Certificate, CertifiedIdeal, IdealMembership, MembershipWitness, MonomialIdeal,
    DEFAULT_COLON_RADIUS,
};
pub(crate) use ideal::subsets;
pub use quotient::{QuotientRing, ZerodivisorVerdict};

#[cfg(test)]
mod tests;
