//! Runs, file formats and parallel batches around `linstat-core`.

pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod funcspec;
pub mod manifest;
pub mod runner;

pub use config::RunConfig;
pub use error::{CliError, CliResult};
pub use runner::RayonRunner;

use std::collections::BTreeMap;
use std::path::Path;

/// Resolve the config, run the subcommand and write the manifest. Returns the
/// exit code together with the text meant for stdout.
pub fn execute(
    sub: &str,
    config_file: Option<&Path>,
    flags: BTreeMap<String, String>,
) -> (i32, String) {
    let cfg = match config_file
        .map(|p| config::read_config_file(p, sub))
        .transpose()
        .and_then(|file| RunConfig::resolve(sub, file.unwrap_or_default(), flags))
    {
        Ok(c) => c,
        Err(e) => return (e.exit_code(), format!("error: {e}")),
    };
    let runner = match RayonRunner::from_env() {
        Ok(r) => r,
        Err(e) => {
            let e = CliError::from(e);
            return (e.exit_code(), format!("error: {e}"));
        }
    };
    let mut manifest = manifest::Manifest::new(&cfg, runner.threads());
    let (code, text) = match commands::run(&cfg, &runner) {
        Ok(o) => {
            manifest.outputs = o.outputs;
            match o.breach {
                Some(b) => {
                    let e = CliError::Breach(b);
                    (e.exit_code(), format!("{}\nerror: {e}", o.summary))
                }
                None => (0, o.summary),
            }
        }
        Err(e) => (e.exit_code(), format!("error: {e}")),
    };
    manifest.exit_code = code;
    // the output directory exists unless the run failed before creating it
    if cfg.out_dir().is_dir() {
        if let Err(e) = manifest.write(&cfg.out_dir()) {
            return (CliError::from(e).exit_code(), format!("{text}\nerror: cannot write manifest"));
        }
    }
    (code, text)
}
