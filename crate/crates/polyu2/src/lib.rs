//! Report formats and the command-line front end for [`polyu2_core`].
//!
//! Every JSON document carries `"schema": 1`. Exact-mode matrix entries and
//! coefficients are quadruples `[p, q, r, s]` meaning `(p/q)·√(r/s)`, or lists
//! of them for sums of radicals; float-mode values are decimal strings with
//! 17 significant digits.

pub mod config;
pub mod encode;
pub mod error;
pub mod formats;
pub mod run;

use std::io::Write;

pub use config::{Cli, Command, OutFormat, RunConfig};
pub use encode::{Carrier, Entry, Mode};
pub use error::{CliError, FailureSummary};
pub use run::{run, Output};

/// Runs the tool end to end and returns the process exit code.
///
/// Output goes to `--out` when given, else to `stdout`; a failure summary in
/// JSON goes to `stderr` whenever the exit code is nonzero.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let outcome = RunConfig::from_cli(cli).and_then(|cfg| {
        let out = run(&cfg)?;
        match &cli.out {
            Some(path) => std::fs::write(path, &out.body).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?,
            None => stdout
                .write_all(out.body.as_bytes())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?,
        }
        Ok(out)
    });
    let summary = match outcome {
        Ok(out) if out.passed() => return error::EXIT_PASS,
        Ok(out) => FailureSummary::verification(out.failures),
        Err(e) => FailureSummary::from_error(&e),
    };
    if let Ok(line) = serde_json::to_string(&summary) {
        let _ = writeln!(stderr, "{line}");
    }
    summary.exit_code
}
