use alloc::string::String;
use core::fmt;

/// Errors raised by the combinatorial layer and the Hecke engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts not weakly decreasing, or an unparsable partition string.
    InvalidPartition(String),
    /// A parameter outside its documented range (e.g. `e < 2`).
    InvalidParameter(String),
    /// Two objects that must have equal size do not.
    SizeMismatch { left: usize, right: usize },
    /// A partition required to be an e-core is not one.
    NotCore(String),
    /// A partition required to be e-restricted is not.
    NotRestricted(String),
    /// An internal sign/direction convention check failed.
    Convention(String),
    /// The requested size exceeds the configured guard.
    GuardExceeded { n: usize, max: usize },
    /// Indecomposability of a module could not be certified.
    NotIndecomposable(String),
    /// Minimal vertices found that are not conjugate.
    NonUniqueVertex(String),
    /// Division by zero in an exact field.
    DivisionByZero,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::NotCore(s) => write!(f, "not an e-core: {s}"),
            Error::NotRestricted(s) => write!(f, "not e-restricted: {s}"),
            Error::Convention(s) => write!(f, "convention error: {s}"),
            Error::GuardExceeded { n, max } => {
                write!(f, "size guard exceeded: n = {n} > {max}")
            }
            Error::NotIndecomposable(s) => {
                write!(f, "indecomposability not certified: {s}")
            }
            Error::NonUniqueVertex(s) => write!(f, "non-unique minimal vertex: {s}"),
            Error::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidParameter(alloc::format!("e = {e} must be at least 2")));
    }
    Ok(())
}

impl core::error::Error for Error {}
