//! The `gmr` command-line tool: ring-spec parsing, command dispatch and
//! deterministic reports. The binary in `main.rs` is a thin clap wrapper.

pub mod commands;
pub mod report;
pub mod spec;

pub use commands::{run_bytes, run_command, run_corpus, run_file, Command, Flags, MethodChoice, Suite};
pub use report::{Format, Report};
pub use spec::{parse_spec, Diagnostic, RingSpecDocument};
