use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every operation in the crate.
///
/// The three variants partition outcomes the same way the CLI exit codes do:
/// bad input, a blown resource cap, and a mathematical claim that turned out
/// false on the data at hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidInput(String),
    ResourceLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// A verified claim failed; the message carries the counterexample.
    Violation(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap {
            Err(Error::ResourceLimit { what, size, cap })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ResourceLimit { what, size, cap } => {
                write!(f, "resource limit: {what} is {size}, cap is {cap}")
            }
            Error::Violation(msg) => write!(f, "violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
