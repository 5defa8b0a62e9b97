//! Front end for `wdw-core`: flag parsing, the `solve`, `family` and
//! `verify` commands, and CSV/JSON output.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{Cli, Command, RunConfig};
pub use error::CliError;

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(a) => commands::cmd_solve(&RunConfig::from_common(&a)?),
        Command::Family(a) => commands::cmd_family(&RunConfig::from_family(&a)?),
        Command::Verify(a) => commands::cmd_verify(&RunConfig::from_family(&a)?),
    }
}
