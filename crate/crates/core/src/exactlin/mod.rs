//! Exact integer linear algebra: Hermite forms, lattices, cones, Hilbert
//! bases and nonnegative integer systems.

pub mod cone;
mod degree_box;
pub mod hilbert;
pub mod matrix;
mod nonneg;
mod vector;

pub use cone::{cone_description, cone_facets, positive_grading, ConeDescription, RationalCone, SpanCone};
pub use degree_box::{BoxPoints, DegreeBox};
pub use hilbert::hilbert_basis;
pub use matrix::{hermite_normal_form, lattice_membership, HermiteForm, IntMatrix, Lattice};
pub use nonneg::{find_nonneg, solve_nonneg, NonnegSolutions};
pub use vector::IntVector;
