//! On-disk formats.
//!
//! CSV tables: any number of provenance lines `# key: value`, then a column
//! line `# col1,col2,...`, then comma separated data rows. Floats are written
//! in shortest round-trip form, so reading a table back gives the same bits.
//!
//! Binary eigenvalue files (little endian):
//!
//! | bytes | content |
//! |-------|---------|
//! | 8     | magic `LSTEIG01` |
//! | 1     | ensemble: 0 gue, 1 lue, 2 jue |
//! | 7     | zero padding |
//! | 8     | alpha, f64 |
//! | 8     | beta, f64 |
//! | 8     | n, u64 |
//! | 8     | draws, u64 |
//! | 8     | seed, u64 |
//! | 8     | zero padding |
//! | 8 n draws | eigenvalues, f64, draw-major and ascending within a draw |

use crate::error::{CliError, CliResult};
use linstat_core::{EnsembleSpec, Kind};
use std::io::{BufWriter, Read, Write};
use std::path::Path;

pub const BINARY_MAGIC: &[u8; 8] = b"LSTEIG01";
const BINARY_HEADER: usize = 64;

/// Shortest representation that parses back to the same f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    /// Provenance pairs from `# key: value` lines.
    pub provenance: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { provenance: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn provenance(mut self, key: &str, value: impl ToString) -> Self {
        self.provenance.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_f64(&mut self, row: &[f64]) {
        self.push(row.iter().map(|v| fmt_f64(*v)).collect());
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        let mut out = BufWriter::new(std::fs::File::create(path)?);
        for (k, v) in &self.provenance {
            writeln!(out, "# {k}: {v}")?;
        }
        writeln!(out, "# {}", self.columns.join(","))?;
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read(path: &Path) -> CliResult<Table> {
        let text = std::fs::read_to_string(path)?;
        let mut t = Table::default();
        let comments: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
        let Some((cols, prov)) = comments.split_last() else {
            return Err(CliError::Numeric(format!("{}: missing column line", path.display())));
        };
        for line in prov {
            let body = line.trim_start_matches('#').trim();
            if let Some((k, v)) = body.split_once(": ") {
                t.provenance.push((k.to_string(), v.to_string()));
            }
        }
        t.columns = cols.trim_start_matches('#').trim().split(',').map(str::to_string).collect();
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .flexible(false)
            .from_reader(text.as_bytes());
        for rec in r.records() {
            let rec = rec?;
            t.rows.push(rec.iter().map(str::to_string).collect());
        }
        Ok(t)
    }

    pub fn get_provenance(&self, key: &str) -> Option<&str> {
        self.provenance.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Column by name, parsed as f64 (empty cells become NaN).
    pub fn column_f64(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j].parse().unwrap_or(f64::NAN)).collect())
    }
}

fn kind_code(k: Kind) -> u8 {
    match k {
        Kind::Gue => 0,
        Kind::Lue => 1,
        Kind::Jue => 2,
    }
}

/// Eigenvalue batch with its generating parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBatch {
    pub spec: EnsembleSpec,
    pub seed: u64,
    pub draws: Vec<Vec<f64>>,
}

impl EigenBatch {
    pub fn write_binary(&self, path: &Path) -> CliResult<()> {
        let mut out = BufWriter::new(std::fs::File::create(path)?);
        let mut head = [0u8; BINARY_HEADER];
        head[..8].copy_from_slice(BINARY_MAGIC);
        head[8] = kind_code(self.spec.kind);
        head[16..24].copy_from_slice(&self.spec.alpha.to_le_bytes());
        head[24..32].copy_from_slice(&self.spec.beta.to_le_bytes());
        head[32..40].copy_from_slice(&(self.spec.n as u64).to_le_bytes());
        head[40..48].copy_from_slice(&(self.draws.len() as u64).to_le_bytes());
        head[48..56].copy_from_slice(&self.seed.to_le_bytes());
        out.write_all(&head)?;
        for d in &self.draws {
            for v in d {
                out.write_all(&v.to_le_bytes())?;
            }
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_binary(path: &Path) -> CliResult<EigenBatch> {
        let mut bytes = Vec::new();
        std::fs::File::open(path)?.read_to_end(&mut bytes)?;
        let bad = |why: &str| CliError::Numeric(format!("{}: {why}", path.display()));
        if bytes.len() < BINARY_HEADER || &bytes[..8] != BINARY_MAGIC {
            return Err(bad("not a linstat eigenvalue file"));
        }
        let u = |o: usize| u64::from_le_bytes(bytes[o..o + 8].try_into().unwrap());
        let f = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().unwrap());
        let kind = match bytes[8] {
            0 => Kind::Gue,
            1 => Kind::Lue,
            2 => Kind::Jue,
            _ => return Err(bad("unknown ensemble code")),
        };
        let (n, draws) = (u(32) as usize, u(40) as usize);
        if bytes.len() != BINARY_HEADER + 8 * n * draws {
            return Err(bad("length does not match header"));
        }
        let spec = EnsembleSpec { kind, n, alpha: f(16), beta: f(24) };
        let data = (0..draws)
            .map(|d| (0..n).map(|j| f(BINARY_HEADER + 8 * (d * n + j))).collect())
            .collect();
        Ok(EigenBatch { spec, seed: u(48), draws: data })
    }

    pub fn to_table(&self, method: &str) -> Table {
        let cols: Vec<String> = (0..self.spec.n).map(|j| format!("lambda{j}")).collect();
        let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
        let mut t = Table::new(&cols)
            .provenance("tool", format!("linstat {}", env!("CARGO_PKG_VERSION")))
            .provenance("ensemble", self.spec.kind.name())
            .provenance("n", self.spec.n)
            .provenance("alpha", fmt_f64(self.spec.alpha))
            .provenance("beta", fmt_f64(self.spec.beta))
            .provenance("draws", self.draws.len())
            .provenance("seed", self.seed)
            .provenance("method", method);
        for d in &self.draws {
            t.push_f64(d);
        }
        t
    }

    pub fn from_table(t: &Table) -> CliResult<EigenBatch> {
        let bad = |why: String| CliError::Numeric(why);
        let p = |k: &str| t.get_provenance(k).ok_or_else(|| bad(format!("missing provenance '{k}'")));
        let kind: Kind = p("ensemble")?.parse()?;
        let num = |k: &str| p(k)?.parse::<f64>().map_err(|e| bad(format!("{k}: {e}")));
        let spec = EnsembleSpec { kind, n: num("n")? as usize, alpha: num("alpha")?, beta: num("beta")? };
        let seed = p("seed")?.parse::<u64>().map_err(|e| bad(format!("seed: {e}")))?;
        let draws = t
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.parse::<f64>().map_err(|e| bad(format!("value '{v}': {e}")))).collect())
            .collect::<CliResult<Vec<Vec<f64>>>>()?;
        Ok(EigenBatch { spec, seed, draws })
    }
}
