use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {order} exceeds the configured cap {cap}")]
    FieldTooLarge { order: u64, cap: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group order exceeds the configured cap {cap}")]
    GroupTooLarge { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group axioms violated: {0}")]
    GroupAxioms(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("module is not stable under conjugation by generator {generator}")]
    NotStable { generator: String },
    #[error("extension obstructed: no scalar choice satisfies relation {relation}")]
    ExtensionObstructed { relation: String },
    #[error("not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit does not act as a two-sided identity")]
    NotUnital,
    #[error("subspace is not a two-sided ideal")]
    NotTwoSided,
    #[error("ideals belong to different algebras")]
    ParentMismatch,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("module axioms violated: {0}")]
    ModuleAxioms(String),
    #[error("embedding is not a unital algebra homomorphism")]
    BadEmbedding,
    #[error("normality fails: (rad a)B differs from B(rad a)")]
    NormalityFailure,
    #[error("field is not a splitting field; extend scalars to degree {suggested_degree}")]
    NonSplitting { suggested_degree: u32 },
    #[error("module is the zero module")]
    ZeroModule,
    #[error("module is not absolutely irreducible")]
    NotAbsolutelyIrreducible,
    #[error("restriction is not isotypic for the given irreducible")]
    NotIsotypic,
    #[error("module does not factor through the quotient group")]
    DoesNotFactor,
    #[error("operation requires a group-algebra pair")]
    NotGroupPair,
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("selector out of range: {0}")]
    BadSelector(String),
}

pub type Result<T> = std::result::Result<T, Error>;
