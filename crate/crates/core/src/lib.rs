//! Decides whether the rational (or imaginary quadratic) semigroup algebra
//! of a finite semigroup has the hyperbolic property, with certificates
//! checked against exact linear-algebra oracles.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod rees;
pub mod semigroup;

pub use algebra::{contracted_algebra, group_algebra, has_unity, radical, RadicalInfo, StructureConstantAlgebra};
pub use classify::{block_structure, classify, classify_q, classify_quadratic, BlockTag, BlockType, FieldSpec, Regime, Verdict};
pub use error::{Error, Result};
pub use rees::{fixture, fixtures, rees, ReesMatrixSemigroup, Sandwich};
pub use semigroup::{isomorphic, principal_series, FiniteSemigroup, PrincipalSeries};
