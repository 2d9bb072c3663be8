//! Run configuration: a per-subcommand schema of keys, a flat `key = value`
//! file grammar, and flag overrides.
//!
//! File grammar, one entry per line:
//!
//! ```text
//! # comment
//! key = value
//! ```
//!
//! Keys are the long flag names without the leading dashes. Lists are comma
//! separated. Blank lines and lines starting with `#` are ignored; a key may
//! appear once. A `manifest.json` written by an earlier run is also accepted
//! as a config file, which replays that run.

use crate::error::{CliError, CliResult};
use crate::funcspec::FunctionSpec;
use linstat_core::rh::verify::Identity;
use linstat_core::{EnsembleSpec, Kind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Ensemble,
    Real,
    /// Integer >= 1.
    Count,
    /// Any u64.
    Seed,
    CountList,
    RealList,
    Function,
    Path,
    Choice(&'static [&'static str]),
    Bool,
    /// Comma list of identity names, or `all`.
    Identities,
    /// A real number or `none`.
    OptionalReal,
    /// A count or `auto`.
    OptionalCount,
}

pub struct KeySpec {
    pub key: &'static str,
    pub kind: ValueKind,
    pub default: &'static str,
    pub help: &'static str,
}

const fn k(key: &'static str, kind: ValueKind, default: &'static str, help: &'static str) -> KeySpec {
    KeySpec { key, kind, default, help }
}

const ENSEMBLE: KeySpec = k("ensemble", ValueKind::Ensemble, "gue", "gue, lue or jue");
const ALPHA: KeySpec = k("alpha", ValueKind::Real, "0", "LUE/JUE exponent at -1, > -1");
const BETA: KeySpec = k("beta", ValueKind::Real, "0", "JUE exponent at +1, > -1");
const SEED: KeySpec = k("seed", ValueKind::Seed, "0", "master seed; draw i uses ChaCha8 stream i");
const OUT: KeySpec = k("out", ValueKind::Path, "linstat-out", "output directory");
const FUNCTION: KeySpec =
    k("function", ValueKind::Function, "chebyshev:2", "chebyshev:k, exp, runge, or a JSON coefficient file");
const DEGREE: KeySpec = k("degree", ValueKind::OptionalCount, "auto", "Chebyshev degree for exp/runge");

pub const SUBCOMMANDS: [&str; 6] = ["sample", "functionals", "clt-run", "charfn", "cov", "rh-verify"];

pub fn schema(sub: &str) -> Vec<KeySpec> {
    match sub {
        "sample" => vec![
            ENSEMBLE,
            k("n", ValueKind::Count, "16", "matrix size"),
            ALPHA,
            BETA,
            k("draws", ValueKind::Count, "100", "number of matrices"),
            SEED,
            OUT,
            k("format", ValueKind::Choice(&["csv", "bin"]), "csv", "eigenvalue file format"),
            k("method", ValueKind::Choice(&["tridiagonal", "dense"]), "tridiagonal", "sampler"),
        ],
        "functionals" => vec![ENSEMBLE, ALPHA, BETA, FUNCTION, DEGREE, OUT],
        "clt-run" => vec![
            ENSEMBLE,
            ALPHA,
            BETA,
            FUNCTION,
            DEGREE,
            k("n-list", ValueKind::CountList, "8,16,32,64", "strictly increasing matrix sizes"),
            k("draws", ValueKind::Count, "100000", "draws per n, at least 10000"),
            SEED,
            OUT,
            k("ceiling", ValueKind::OptionalReal, "none", "fail with exit 4 if bound_constant exceeds this"),
            k("self-test", ValueKind::Bool, "false", "fit constructed data KS_n = 2 n^(-1/3) instead of sampling"),
        ],
        "charfn" => vec![
            ENSEMBLE,
            ALPHA,
            BETA,
            FUNCTION,
            DEGREE,
            k("n-list", ValueKind::CountList, "4,8,16,32", "matrix sizes"),
            k("h-grid", ValueKind::RealList, "-1,-0.5,-0.25,0.25,0.5,1", "arguments of the characteristic function"),
            k("draws", ValueKind::Count, "100000", "draws per n"),
            SEED,
            OUT,
        ],
        "cov" => vec![
            ENSEMBLE,
            k("n", ValueKind::Count, "64", "matrix size"),
            ALPHA,
            BETA,
            k("l", ValueKind::Count, "4", "number of Chebyshev statistics"),
            k("draws", ValueKind::Count, "100000", "number of matrices"),
            SEED,
            OUT,
        ],
        "rh-verify" => vec![
            ENSEMBLE,
            ALPHA,
            BETA,
            k("identity", ValueKind::Identities, "all", "comma list of identities, or all"),
            k("points", ValueKind::Count, "50", "probe points per identity"),
            k("n-list", ValueKind::CountList, "20,40,80,160,320", "n values for the matching sweep"),
            k("f-tilde", ValueKind::Function, "chebyshev:2", "f in f~ = i h f"),
            k("h", ValueKind::Real, "0.3", "h in f~ = i h f"),
            k("perturb-d1", ValueKind::Real, "0", "test hook: added to the D1 exponent"),
            k("radius", ValueKind::Real, "0.1", "matching circle radius"),
            DEGREE,
            OUT,
        ],
        _ => Vec::new(),
    }
}

/// A fully resolved configuration: every schema key has a value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: String,
    pub values: BTreeMap<String, String>,
}

/// Parse the flat `key = value` grammar.
pub fn parse_flat(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) =
            line.split_once('=').ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
        let key = key.trim().to_string();
        if key.is_empty() {
            return Err(CliError::Config(format!("line {}: empty key", i + 1)));
        }
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(CliError::Config(format!("line {}: duplicate key '{key}'", i + 1)));
        }
    }
    Ok(map)
}

/// Read a config file: flat grammar, or a manifest from an earlier run.
pub fn read_config_file(path: &Path, sub: &str) -> CliResult<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let m: crate::manifest::Manifest = serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{} is not a run manifest: {e}", path.display())))?;
        if m.config.subcommand != sub {
            return Err(CliError::Config(format!(
                "manifest is for '{}', not '{sub}'",
                m.config.subcommand
            )));
        }
        return Ok(m.config.values);
    }
    parse_flat(&text)
}

impl RunConfig {
    /// Merge file values and flag values (flags win) over the defaults, then
    /// validate every key.
    pub fn resolve(
        sub: &str,
        file: BTreeMap<String, String>,
        flags: BTreeMap<String, String>,
    ) -> CliResult<RunConfig> {
        let schema = schema(sub);
        if schema.is_empty() {
            return Err(CliError::Config(format!("unknown subcommand '{sub}'")));
        }
        let mut values: BTreeMap<String, String> =
            schema.iter().map(|s| (s.key.to_string(), s.default.to_string())).collect();
        for (key, v) in file.into_iter().chain(flags) {
            if !values.contains_key(&key) {
                return Err(CliError::Config(format!("unknown key '{key}' for {sub}")));
            }
            values.insert(key, v);
        }
        let cfg = RunConfig { subcommand: sub.to_string(), values };
        cfg.validate(&schema)?;
        Ok(cfg)
    }

    fn validate(&self, schema: &[KeySpec]) -> CliResult<()> {
        for s in schema {
            let v = &self.values[s.key];
            let bad = |why: &str| Err(CliError::Config(format!("{} = '{v}': {why}", s.key)));
            match s.kind {
                ValueKind::Ensemble => {
                    if v.parse::<Kind>().is_err() {
                        return bad("expected gue, lue or jue");
                    }
                }
                ValueKind::Real => {
                    if !parse_real(v).is_some_and(f64::is_finite) {
                        return bad("expected a finite number");
                    }
                }
                ValueKind::Count => {
                    if !v.parse::<usize>().is_ok_and(|c| c >= 1) {
                        return bad("expected a positive integer");
                    }
                }
                ValueKind::Seed => {
                    if v.parse::<u64>().is_err() {
                        return bad("expected a nonnegative integer");
                    }
                }
                ValueKind::CountList => match parse_list::<usize>(v) {
                    Some(l) if !l.is_empty() && l.iter().all(|&c| c >= 1) => {}
                    _ => return bad("expected a comma list of positive integers"),
                },
                ValueKind::RealList => match parse_list::<f64>(v) {
                    Some(l) if !l.is_empty() && l.iter().all(|x| x.is_finite()) => {}
                    _ => return bad("expected a comma list of finite numbers"),
                },
                ValueKind::Function => {
                    FunctionSpec::parse(v)?;
                }
                ValueKind::Path => {
                    if v.is_empty() {
                        return bad("empty path");
                    }
                }
                ValueKind::Choice(opts) => {
                    if !opts.contains(&v.as_str()) {
                        return bad(&format!("expected one of {}", opts.join(", ")));
                    }
                }
                ValueKind::Bool => {
                    if v != "true" && v != "false" {
                        return bad("expected true or false");
                    }
                }
                ValueKind::Identities => {
                    if v != "all" && v.split(',').any(|n| Identity::from_name(n.trim()).is_none()) {
                        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                        return bad(&format!("known identities: {}", names.join(", ")));
                    }
                }
                ValueKind::OptionalReal => {
                    if v != "none" && !parse_real(v).is_some_and(|x| !x.is_nan()) {
                        return bad("expected a number or none");
                    }
                }
                ValueKind::OptionalCount => {
                    if v != "auto" && v.parse::<usize>().is_err() {
                        return bad("expected an integer or auto");
                    }
                }
            }
        }
        // cross-key checks
        if self.values.contains_key("ensemble") {
            self.ensemble(1)?;
        }
        if self.subcommand == "clt-run" && self.bool("self-test") == Some(false) {
            let l = self.counts("n-list");
            if l.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Config("n-list must be strictly increasing".into()));
            }
            if self.count("draws") < 10_000 {
                return Err(CliError::Config("draws must be at least 10000 for a rate sweep".into()));
            }
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> &str {
        self.values.get(key).map(String::as_str).unwrap_or("")
    }

    pub fn real(&self, key: &str) -> f64 {
        parse_real(self.get(key)).unwrap_or(f64::NAN)
    }

    pub fn count(&self, key: &str) -> usize {
        self.get(key).parse().unwrap_or(0)
    }

    pub fn seed(&self) -> u64 {
        self.get("seed").parse().unwrap_or(0)
    }

    pub fn counts(&self, key: &str) -> Vec<usize> {
        parse_list(self.get(key)).unwrap_or_default()
    }

    pub fn reals(&self, key: &str) -> Vec<f64> {
        parse_list(self.get(key)).unwrap_or_default()
    }

    pub fn bool(&self, key: &str) -> Option<bool> {
        self.values.get(key).map(|v| v == "true")
    }

    pub fn optional_real(&self, key: &str) -> Option<f64> {
        parse_real(self.get(key))
    }

    pub fn optional_count(&self, key: &str) -> Option<usize> {
        self.get(key).parse().ok()
    }

    pub fn out_dir(&self) -> PathBuf {
        PathBuf::from(self.get("out"))
    }

    pub fn function(&self, key: &str) -> CliResult<FunctionSpec> {
        FunctionSpec::parse(self.get(key))
    }

    /// The ensemble with matrix size n (validated).
    pub fn ensemble(&self, n: usize) -> CliResult<EnsembleSpec> {
        let kind: Kind = self.get("ensemble").parse()?;
        Ok(EnsembleSpec::new(kind, n, self.real("alpha"), self.real("beta"))?)
    }

    pub fn identities(&self) -> Vec<Identity> {
        let v = self.get("identity");
        if v == "all" {
            return Vec::new();
        }
        v.split(',').filter_map(|n| Identity::from_name(n.trim())).collect()
    }

    /// The config in the flat grammar, for writing next to outputs.
    pub fn to_flat(&self) -> String {
        let mut s = format!("# linstat {}\n", self.subcommand);
        for (k, v) in &self.values {
            s.push_str(&format!("{k} = {v}\n"));
        }
        s
    }
}

fn parse_real(s: &str) -> Option<f64> {
    match s.trim() {
        "inf" => Some(f64::INFINITY),
        t => t.parse().ok(),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Option<Vec<T>> {
    s.split(',').map(|p| p.trim().parse().ok()).collect()
}
