//! Front end for `wreathmac`: subcommand implementations and the acceptance
//! self-test.

pub mod commands;
pub mod format;
pub mod selftest;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const COMPUTE: i32 = 1;
    pub const CHECK_FAILED: i32 = 2;
    pub const BAD_INPUT: i32 = 3;
}

/// Exit status for a core error: malformed input is 3, anything else 1.
pub fn exit_code_for(e: &wreathmac::Error) -> i32 {
    use wreathmac::Error::*;
    match e {
        Parse(_) | Invalid(_) | SizeMismatch(..) | Parity(_) => exit::BAD_INPUT,
        _ => exit::COMPUTE,
    }
}
