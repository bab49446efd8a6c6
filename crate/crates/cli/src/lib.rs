//! Library half of the `permspec` command: verification targets, the JSON
//! report and the spectrum and matrix printers.

pub mod matrix;
pub mod report;
pub mod spectrum;
pub mod target;
pub mod verify;

pub use report::{Check, Status, VerificationReport};
pub use target::Target;
pub use verify::{verify, Options, UsageError};
