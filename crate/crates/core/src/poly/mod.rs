//! Multivariate polynomials, Gröbner bases and polynomial matrices.

mod groebner;
mod minor;
mod monomial;
mod multipoly;
mod ring;

pub use groebner::{
    buchberger, dimension_from_basis, face_torus_system, is_groebner_basis, is_unit_basis,
    krull_dimension_in_face_torus, max_independent_set, nonempty_in_face_torus, reduce, Ideal,
};
pub use minor::{laplace_along_row, minor_determinant, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use multipoly::MultiPoly;
pub use ring::{ParseError, Ring};
