//! Exact verification of the invariant vector-field frames on S³ and S⁷,
//! their Lie brackets and bracket-generating distributions, the CR structure
//! of odd spheres, and the complex, projective and quaternionic Hopf maps.
//!
//! Everything that can be decided exactly is decided exactly: scalars are
//! arbitrary-precision rationals, polynomial identities are proved by full
//! canonical expansion, and ranks come from fraction-free elimination.
//! The only floating-point code is the fibre-circle sanity check in
//! [`fibration::fiber_curve_check`].

pub mod algebra;
pub mod cr;
pub mod fibration;
pub mod fields;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod tables;

pub use algebra::{AlgebraElement, AlgebraError, ExactScalar, MultiplicationTable};
pub use fields::{Distribution, LinearVectorField, OneForm, SpherePoint};
pub use poly::{MultiPoly, PolyMatrix};
pub use report::{Format, Status, Suite, SuiteConfig, VerificationReport};
