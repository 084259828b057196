//! Exact arithmetic, polynomial algebra and polyhedral computations.

pub mod error;
pub mod matrix;
pub mod poly;
pub mod polyhedral;
pub mod scalar;
pub mod snf;
pub mod z2i;

pub use error::CoreError;
pub use matrix::Matrix;
pub use scalar::{Field, GaussInt, GaussRational, OrderedField, Rational};
pub use snf::{isotropy_order, smith_normal_form, IntMatrix, IsotropyOrder, SmithForm};
pub use z2i::{kernel_over_z2i, Z2i};

/// Polynomials with rational coefficients.
pub type QPoly = poly::MultiPoly<Rational>;
/// Polynomials with Gaussian-rational coefficients.
pub type GaussPoly = poly::MultiPoly<GaussRational>;
