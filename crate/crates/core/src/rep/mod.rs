//! Modules over finite-dimensional algebras.

pub mod clifford;
pub mod hom;
pub mod meataxe;
pub mod module;
pub mod pims;
pub mod structure;

pub use clifford::{clifford_functor, clifford_inverse_check, CliffordImage};
pub use hom::{graded_hom_space, hom_space, is_graded_isomorphic, is_isomorphic, IsoOutcome};
pub use meataxe::{chop, is_irreducible, CompositionMultiset, Irreducibility};
pub use module::{matrix_hash, AModule};
pub use pims::{cartan_matrix, check_splitting, pims, simples, Pim};
pub use structure::{head, radical_filtration, radical_layers, socle};
