//! Permutation groups, normal subgroups and quotients.

pub mod conjugation;
pub mod extend;
pub mod finite;
pub mod perm;
pub mod spec_file;

pub use crate::algebra::group_algebra;
pub use conjugation::conjugation_on_subalgebra;
pub use extend::extend_irreducible_to_g;
pub use finite::{is_normal, quotient_group, FiniteGroup, Quotient, Subgroup, DEFAULT_GROUP_CAP};
pub use perm::Perm;
pub use spec_file::{BuiltGroup, GroupSpec};
