//! Exact linear algebra over GF(p^k).

pub mod coords;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use coords::CoordSystem;
pub use field::{Elem, Field};
pub use matrix::{Matrix, Rref};
pub use poly::Poly;
pub use subspace::{spin, Subspace};
