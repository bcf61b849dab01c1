use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("infinite exponent")]
    InfiniteExponent,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclic group of order 0 is not allowed")]
    ZeroOrder,
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },
    #[error("p = {p} does not divide the exponent")]
    PrimeNotDividing { p: u64 },
    #[error("descriptors are not p-groups for a common prime")]
    NotPGroup,
    #[error("top layer at p = {p} is infinite; no separation exists")]
    NoSeparation { p: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("subgroup closure exceeded cap {cap}")]
    CapExceeded { cap: usize },
    #[error("variable x{0} is not assigned")]
    Unassigned(usize),
    #[error("lower central series did not terminate after {0} steps")]
    NotNilpotent(usize),
}
