//! Computations in affine semigroup rings and their monomial quotients:
//! normality, colon ideals, Koszul and Čech cohomology, grade and
//! Cohen–Macaulay type tests.

pub mod cm;
pub mod error;
pub mod exactlin;
pub mod homology;
pub mod lab;
pub mod monoids;
pub mod ring;

pub use error::{Error, Result};
pub use exactlin::{IntMatrix, IntVector};
