use thiserror::Error;

/// Errors raised by the permutation, polynomial and group-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument was outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request would exceed a size limit (matrix export, tables).
    #[error("resource limit: {0}")]
    Resource(String),
    /// Two polynomials over different variable families were combined.
    #[error("cannot mix single-index and pair-index variables in one polynomial")]
    MixedFamilies,
    /// Group-algebra operands live over different symmetric groups.
    #[error("degree mismatch: S_{left} vs S_{right}")]
    DegreeMismatch { left: usize, right: usize },
    /// A product exceeded the polynomial degree cap.
    #[error("polynomial degree {found} exceeds cap {cap}")]
    DegreeCap { found: u32, cap: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
