//! Command-line harness for the `copwin` library: solving, corpus scans,
//! generators, trap reports and strategy simulation.
//!
//! Output is one record per line, either `key=value` pairs in a fixed order
//! or (with `--json`) one JSON object per line with the same keys.

pub mod commands;
pub mod report;
pub mod scan;
pub mod source;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A theorem or lemma check failed.
    pub const VIOLATION: i32 = 1;
    /// Bad arguments or unreadable input.
    pub const USAGE: i32 = 2;
    /// A state budget or search cap stopped some computation.
    pub const RESOURCE: i32 = 3;
}

/// Folds per-item outcomes into one exit code: violations beat input
/// errors, which beat resource limits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Status {
    pub violation: bool,
    pub input_error: bool,
    pub resource: bool,
}

impl Status {
    pub fn code(self) -> i32 {
        if self.violation {
            exit::VIOLATION
        } else if self.input_error {
            exit::USAGE
        } else if self.resource {
            exit::RESOURCE
        } else {
            exit::OK
        }
    }
}
