//! Command-line front end for `binmat`: oracle verification, wall-clock
//! benchmarks, operation counting, format conversion and boolean powers.

pub mod bench;
pub mod cli;
pub mod verify;

pub use cli::{boolean_power, run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
