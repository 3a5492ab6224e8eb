//! Exact computations with the zigzag algebra of the doubled complete graph,
//! its homotopy category of graded projective complexes, the twist functors
//! and the free-group action they generate.
//!
//! Everything is generic over a [`scalar::Scalar`] field; the aliases below fix
//! exact big rationals, which is what the CLI and the test suites use.

pub mod algebra;
pub mod complexes;
pub mod freegroup;
pub mod linalg;
pub mod metrics;
pub mod scalar;
pub mod slices;
pub mod spherical;
pub mod suites;
pub mod twists;

pub use algebra::{BasisPath, EdgeKind, GradingMode, Orientation, ZigzagAlgebra};
pub use freegroup::{Decision, Word};

pub type Rational = num_rational::BigRational;
pub type AlgebraElement = algebra::Element<Rational>;
pub type Complex = complexes::Complex<Rational>;
pub type ChainMap = complexes::ChainMap<Rational>;
