//! Minimal permutation-group engine: composition, orbits with transversals,
//! Schreier generators, stabilizer chains, and symmetric-group tests.

mod chain;
mod perm;

pub use chain::{
    factorial, is_full_symmetric, orbit_with_transversal, schreier_generators, StabilizerChain,
};
pub use perm::{all_permutations, Permutation};
