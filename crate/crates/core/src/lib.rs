//! Linear groupoid identities: canonical names, identity-hedrons,
//! implication and variety classification, wreath-product AC-niceness
//! testing, and finite groupoid models.
//!
//! A linear identity of length `2n` equates two products of the same `n`
//! distinct variables. It is written `<n|i|j|f>`: `i` and `j` are the
//! Catalan labels of the two bracketings and `f` sends the position of each
//! left-side variable to its position on the right. Permutations compose
//! left to right throughout.

pub mod corpus;
pub mod error;
pub mod hedron;
pub mod identities;
pub mod models;
pub mod permgroup;
pub mod terms;
pub mod varieties;
pub mod wreath;

pub use error::{Error, Limits, Result};
pub use identities::{parse_identity, LinearIdentity};
pub use models::GroupoidTable;
pub use permgroup::Permutation;
