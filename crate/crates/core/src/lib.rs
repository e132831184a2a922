//! Metric Lie algebras and their left-invariant geometry, the 2x2 matrix lift,
//! almost complex and contact structures, two-step nilpotent calculus, and a
//! seeded randomized auditor for identities stated over these objects.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod fidelity;
pub mod generators;
pub mod geometry;
pub mod lift;
pub mod linalg;
pub mod nilpotent;
pub mod report;
pub mod sampling;
pub mod specfile;
pub mod suites;

pub use algebra::{InnerProduct, LieAlgebra, SubspaceBasis, Verdict};
pub use error::{Error, Result};
pub use geometry::{Geometry, SubmanifoldSplit};
pub use lift::{LiftedAlgebra, MatrixElement, TypeDecomposition};
pub use linalg::{Matrix, Vector};
