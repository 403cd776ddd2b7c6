use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A numeric argument fell outside its documented range.
    #[error("{what} = {value} out of range (max {max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },

    /// Textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A state-space guard was exceeded; see `Limits`.
    #[error("guard violation: {0}")]
    Guard(String),

    /// Arguments are individually valid but mutually inconsistent.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size guards for the search-heavy operations. The defaults keep every
/// operation within interactive runtimes; `unrestricted` lifts them for
/// callers that know what they are doing.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest `n` for which Catalan numbers are tabulated.
    pub max_catalan: usize,
    /// Largest identity length parameter `n` accepted by full enumeration.
    pub max_enumerate: usize,
    /// Largest `n` for the census (iterates all of `S_n`).
    pub max_census: usize,
    /// Largest node count `C_m` for hedron construction.
    pub max_hedron_nodes: u64,
    /// Largest state count `C_m * m!` for journey search.
    pub max_bfs_states: u64,
    /// Largest permutation degree for stabilizer chains.
    pub max_degree: usize,
    /// Largest groupoid order for model search.
    pub max_search_order: usize,
    /// Largest `m` for the group-theoretic niceness method.
    pub max_group_m: usize,
    /// Largest `m` for the journey-search niceness method.
    pub max_bfs_m: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_catalan: 20,
            max_enumerate: 5,
            max_census: 8,
            max_hedron_nodes: 5000,
            max_bfs_states: 10_000_000,
            max_degree: 512,
            max_search_order: 6,
            max_group_m: 6,
            max_bfs_m: 7,
        }
    }
}

impl Limits {
    pub fn unrestricted() -> Self {
        Limits {
            max_catalan: 30,
            max_enumerate: usize::MAX,
            max_census: usize::MAX,
            max_hedron_nodes: u64::MAX,
            max_bfs_states: u64::MAX,
            max_degree: usize::MAX,
            max_search_order: usize::MAX,
            max_group_m: usize::MAX,
            max_bfs_m: usize::MAX,
        }
    }
}
