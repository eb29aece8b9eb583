//! Exact computation in finite-rank Coxeter groups: the Hurwitz (braid group)
//! action on reflection factorizations, Bruhat-graph path straightening,
//! synthesis of explicit braid words connecting reduced factorizations of
//! Coxeter elements, and parabolic factorization checks.
//!
//! Everything is exact: group elements are matrices over a cyclotomic number
//! field chosen from the Coxeter matrix, so equality, length, and root-sign
//! tests never rely on floating point.
//!
//! Generator indices are 0-based throughout the library; the command-line
//! interface speaks 1-based indices.

pub mod bruhat;
pub mod cli;
pub mod coxeter;
pub mod hurwitz;
pub mod parabolic;
pub mod reflect;
pub mod scalar;

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("scalar field mismatch: L = {a} vs L = {b}")]
    FieldMismatch { a: u64, b: u64 },

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("element is not a reflection")]
    NotAReflection,

    #[error("word length {length} exceeds the search budget {budget}; raise the budget to proceed")]
    WordBudgetExceeded { length: usize, budget: usize },

    #[error("enumeration budget {budget} exceeded; the group may be infinite")]
    EnumerationBudgetExceeded { budget: usize },

    #[error("Hurwitz orbit budget {budget} exceeded; the partial orbit has {} tuples", partial.len())]
    OrbitBudgetExceeded {
        budget: usize,
        partial: Vec<hurwitz::Factorization>,
    },

    #[error("reflection enumeration (depth {depth}) does not cover radius {radius}")]
    InsufficientReflectionDepth { depth: usize, radius: usize },

    #[error("operation requires a fully enumerated subgroup, but the closure was truncated by its budget")]
    IncompleteSubgroup,

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use bruhat::{
    classify_shape, directed_ball, full_directed_graph, is_reduced_factorization,
    path_of_factorization, restrict_to_subgroup, same_graph, subgroup_directed_graph, BruhatGraph,
    BruhatPath, Direction, Shape,
};
pub use cli::{parse_factorization, parse_group_file, parse_word};
pub use coxeter::{CoxEntry, CoxeterSystem, Element, Root, RootSign, Word};
pub use hurwitz::{
    apply_braid, apply_sigma, extract_insertion_permutation, hurwitz_orbit, permutation_to_braid,
    resolve_descent, straighten, straighten_with, transitivity_braid, transitivity_braid_with,
    BraidLetter, BraidWord, Factorization, InsertionPermutation,
};
pub use parabolic::{
    are_conjugate_systems, is_parabolic_coxeter_element, is_standard_parabolic_coxeter_element,
    parabolic_closure_of_factorization, red_enumerate, red_enumerate_in, red_enumerate_in_with,
    red_enumerate_with, theorem2_check, theorem2_check_with, validate_simple_system,
    DEFAULT_GROUP_BUDGET,
};
pub use reflect::{
    dihedral_reflection_line, enumerate_reflections, reflection_length, reflection_length_with,
    subgroup_closure, Completeness, ReflectionSet, ReflectionSubgroup,
};
pub use scalar::{CycField, Scalar, Sign};
