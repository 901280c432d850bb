//! Identifying codes in Hamming graphs: exact construction, verification,
//! and minimization.
//!
//! A Hamming graph is a Cartesian product of complete graphs. Its vertices
//! are mixed-radix words, adjacent exactly when they differ in one
//! coordinate. A code (vertex subset) identifies the graph when every
//! vertex is distinguished by the set of codewords in its closed
//! neighborhood. Everything here is exact integer computation: no floats,
//! no sampling.
//!
//! - [`hamming`]: radix vectors, vertices, distances, neighborhoods.
//! - [`codesets`]: codes over a vertex set and the identifying-code
//!   predicates, each with a deterministic witness on failure.
//! - [`algebra`]: subgroup structure of the vertex group and linear codes
//!   over prime fields.
//! - [`constructions`]: explicit code families and closed-form bounds.
//! - [`search`]: exact minimizers by exhaustive, pruned enumeration.

pub mod algebra;
pub mod codesets;
pub mod constructions;
pub mod hamming;
pub mod search;

mod arith;
mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
