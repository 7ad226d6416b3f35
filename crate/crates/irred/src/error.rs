use thiserror::Error;

/// Errors surfaced by fallible constructors and queries.
///
/// Pure combinatorial routines whose preconditions encode programmer errors
/// (for example removing a node that is not removable) panic instead; this
/// type covers failures that can be triggered by user-supplied input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("composition parts must be positive, got {0:?}")]
    InvalidComposition(Vec<u32>),
    #[error("cannot parse {0:?} as a partition")]
    ParsePartition(String),
    #[error("p must be a prime, got {0}")]
    InvalidPrime(u32),
    #[error("partition {0:?} is not {1}-regular")]
    NotRegular(Vec<u32>, u32),
    #[error("inconsistent Mullineux symbol: {0}")]
    BadSymbol(String),
    #[error("invalid subgroup descriptor: {0}")]
    BadDescriptor(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown verify suite {0:?}")]
    UnknownSuite(String),
    #[error("no shape family matches {0:?}; this would contradict the classification")]
    NoFamily(Vec<u32>),
    #[error("shape families {1} all match {0:?}; expected exactly one")]
    AmbiguousFamily(Vec<u32>, String),
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
