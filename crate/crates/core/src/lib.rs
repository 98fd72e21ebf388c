//! Forced gradings of group algebras and finite-dimensional algebras over
//! finite fields, with verifiers for graded factorization of projective
//! covers over a normal subgroup.

pub mod algebra;
pub mod catalog;
pub mod context;
pub mod error;
pub mod grading;
pub mod groups;
pub mod linalg;
pub mod rep;

pub use catalog::fixture as catalog_fixture;
pub use context::GroupContext;
pub use error::{Error, Result};
