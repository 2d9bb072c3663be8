//! Test function selection: `chebyshev:k`, `exp`, `runge`, or a path to a
//! JSON array of Chebyshev coefficients.

use crate::error::{CliError, CliResult};
use linstat_core::chebyshev::{transform, TRIM_TOL};
use linstat_core::stats::StatFunction;
use linstat_core::{ChebyshevSeries, TestFunction};
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Chebyshev(usize),
    Exp,
    Runge,
    File(PathBuf),
}

/// Transform degree used for the non-polynomial built-ins unless overridden.
pub fn default_degree(spec: &FunctionSpec) -> usize {
    match spec {
        FunctionSpec::Exp => 40,
        // poles at +/- i/5 make the coefficients decay like 1.22^{-j}
        FunctionSpec::Runge => 220,
        FunctionSpec::Chebyshev(k) => *k,
        FunctionSpec::File(_) => 0,
    }
}

impl FunctionSpec {
    pub fn parse(s: &str) -> CliResult<Self> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("chebyshev:") {
            return k
                .parse::<usize>()
                .map(FunctionSpec::Chebyshev)
                .map_err(|_| CliError::Config(format!("bad Chebyshev degree in '{s}'")));
        }
        match s {
            "exp" => Ok(FunctionSpec::Exp),
            "runge" => Ok(FunctionSpec::Runge),
            "" => Err(CliError::Config("empty function".into())),
            path => Ok(FunctionSpec::File(PathBuf::from(path))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FunctionSpec::Chebyshev(k) => format!("chebyshev:{k}"),
            FunctionSpec::Exp => "exp".into(),
            FunctionSpec::Runge => "runge".into(),
            FunctionSpec::File(p) => p.display().to_string(),
        }
    }

    /// Series and tail evaluator. `degree` only affects exp and runge.
    pub fn build(&self, degree: Option<usize>) -> CliResult<StatFunction> {
        let from_test = |t: TestFunction, m: usize| -> CliResult<StatFunction> {
            let s = transform(&t, m)?.trim(TRIM_TOL);
            Ok(StatFunction::new(s, t.tail().cloned()))
        };
        match self {
            FunctionSpec::Chebyshev(k) => {
                let mut c = vec![0.0; k + 1];
                c[*k] = 1.0;
                Ok(StatFunction::polynomial(ChebyshevSeries::new(c)))
            }
            FunctionSpec::Exp => from_test(TestFunction::exp(), degree.unwrap_or(default_degree(self))),
            FunctionSpec::Runge => from_test(TestFunction::runge(), degree.unwrap_or(default_degree(self))),
            FunctionSpec::File(p) => Ok(StatFunction::polynomial(read_series(p)?)),
        }
    }
}

pub fn read_series(path: &std::path::Path) -> CliResult<ChebyshevSeries> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read coefficient file {}: {e}", path.display())))?;
    let s: ChebyshevSeries = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{} is not a JSON array of numbers: {e}", path.display())))?;
    if s.coeffs().iter().any(|c| !c.is_finite()) {
        return Err(CliError::Config(format!("{} has non-finite coefficients", path.display())));
    }
    Ok(s)
}
