use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's domain (zero modulus, value above
    /// 2^63 - 1, element not reduced mod n, bad range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A prime argument was required.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The element has no solution to m^2 x = m (mod n).
    #[error("{m} is not regular modulo {n}")]
    NotRegular { m: u64, n: u64 },

    /// The denominator is not a unitary divisor of the modulus.
    #[error("{d} is not a unitary divisor of {n}")]
    NotUnitary { d: u64, n: u64 },

    /// A brute-force search was refused because n exceeds the cap.
    #[error("n = {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    /// Allocation failure or a table size beyond what can be indexed.
    #[error("resource error: {0}")]
    Resource(String),

    /// Failure writing an output stream.
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
