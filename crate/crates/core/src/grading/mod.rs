//! Gradings of modules induced by a subalgebra, and the checks built on them.

pub mod extension;
pub mod module;
pub mod report;
pub mod suite;
pub mod tensor;
pub mod verify;

pub use extension::{
    conjugation_layers, grade_zero_layer, layers_as_group_module, solve_graded_extension, ConjugationReport,
    ExtensionOptions, GradedExtension, Strategy, DEFAULT_NODE_BUDGET,
};
pub use module::{gr_module, gr_sharp, module_filtration, GradedModule, GradedSubquotient};
pub use report::{Claim, InstanceInfo, Outcome, Selector, VerificationReport};
pub use tensor::tensor_graded;
pub use verify::{
    graded_factorization, verify_composition_factors, verify_composition_factors_with, verify_graded_factorization,
    verify_pair_shape, Factorization,
};
pub use suite::{run_instance, select, InstanceRequest, Which};
