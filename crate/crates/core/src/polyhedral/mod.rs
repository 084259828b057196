//! Rational polyhedral cones, exact linear programming and hyperplane
//! arrangements.

mod chamber;
mod cone;
mod lp;

pub use chamber::{enumerate_chambers, region_witness, sign_vector, Chamber, Hyperplane, Side};
pub use cone::{image_cone, Cone, FacetDescription, LinearMapZ};
pub use lp::{maximize, LpOutcome};
