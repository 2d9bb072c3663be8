//! The six subcommands. Each reads a resolved [`RunConfig`], writes its
//! artifacts into the output directory, and reports what it wrote.

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::formats::{fmt_f64, EigenBatch, Table};
use crate::runner::RayonRunner;
use linstat_core::ensemble::{sample_with, Method};
use linstat_core::functionals::limit_functionals;
use linstat_core::hankel::{hankel_charfn, HankelOracle, N_MAX};
use linstat_core::rh::verify::{verify, RhReport, VerifyConfig};
use linstat_core::rh::ComplexSeries;
use linstat_core::stats::{
    charfn_estimate, generate_batch, joint_covariance, lemma2_gap, rate_sweep, BatchRunner, RateReport, RateRow,
};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::path::Path;

/// Result of a finished run. `breach` is set when the run completed and wrote
/// its outputs but a verification threshold was exceeded.
#[derive(Debug, Default)]
pub struct Outcome {
    pub outputs: Vec<String>,
    pub summary: String,
    pub breach: Option<String>,
}

impl Outcome {
    fn wrote(&mut self, name: &str) {
        self.outputs.push(name.to_string());
    }
}

pub fn run(cfg: &RunConfig, runner: &RayonRunner) -> CliResult<Outcome> {
    let dir = cfg.out_dir();
    std::fs::create_dir_all(&dir)?;
    match cfg.subcommand.as_str() {
        "sample" => cmd_sample(cfg, runner, &dir),
        "functionals" => cmd_functionals(cfg, &dir),
        "clt-run" => cmd_clt_run(cfg, runner, &dir),
        "charfn" => cmd_charfn(cfg, runner, &dir),
        "cov" => cmd_cov(cfg, runner, &dir),
        "rh-verify" => cmd_rh_verify(cfg, runner, &dir),
        other => Err(CliError::Config(format!("unknown subcommand '{other}'"))),
    }
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T, out: &mut Outcome) -> CliResult<()> {
    std::fs::write(dir.join(name), serde_json::to_string_pretty(value)? + "\n")?;
    out.wrote(name);
    Ok(())
}

fn write_table(dir: &Path, name: &str, t: &Table, out: &mut Outcome) -> CliResult<()> {
    t.write(&dir.join(name))?;
    out.wrote(name);
    Ok(())
}

/// Config values as provenance lines. The output directory is left out so a
/// replayed run writes identical tables elsewhere.
fn provenance(t: Table, cfg: &RunConfig) -> Table {
    let t = t.provenance("tool", format!("linstat {}", env!("CARGO_PKG_VERSION")));
    cfg.values.iter().filter(|(k, _)| *k != "out").fold(t, |t, (k, v)| t.provenance(k, v))
}

pub fn cmd_sample(cfg: &RunConfig, runner: &RayonRunner, dir: &Path) -> CliResult<Outcome> {
    let spec = cfg.ensemble(cfg.count("n"))?;
    let method = if cfg.get("method") == "dense" { Method::Dense } else { Method::Tridiagonal };
    let seed = cfg.seed();
    let draws = runner.map(0, cfg.count("draws") as u64, |i| Ok(sample_with(&spec, seed, i, method)?.eigenvalues))?;
    let batch = EigenBatch { spec, seed, draws };
    let mut out = Outcome::default();
    if cfg.get("format") == "bin" {
        batch.write_binary(&dir.join("eigenvalues.bin"))?;
        out.wrote("eigenvalues.bin");
    } else {
        write_table(dir, "eigenvalues.csv", &batch.to_table(cfg.get("method")), &mut out)?;
    }
    out.summary = format!("wrote {} draws of {} eigenvalues ({})", batch.draws.len(), spec.n, spec.kind.name());
    Ok(out)
}

#[derive(Debug, Serialize)]
struct FunctionalsOut {
    ensemble: String,
    alpha: f64,
    beta: f64,
    function: String,
    degree: usize,
    kappa: f64,
    mu: f64,
    k_var: f64,
}

pub fn cmd_functionals(cfg: &RunConfig, dir: &Path) -> CliResult<Outcome> {
    let spec = cfg.ensemble(1)?;
    let fs = cfg.function("function")?;
    let f = fs.build(cfg.optional_count("degree"))?;
    let lf = limit_functionals(&spec, &f.series);
    let o = FunctionalsOut {
        ensemble: spec.kind.name().into(),
        alpha: spec.alpha,
        beta: spec.beta,
        function: fs.name(),
        degree: f.series.degree(),
        kappa: lf.kappa,
        mu: lf.mu,
        k_var: lf.k_var,
    };
    let mut out = Outcome::default();
    write_json(dir, "functionals.json", &o, &mut out)?;
    out.summary = serde_json::to_string_pretty(&o)?;
    Ok(out)
}

/// KS_n = 2 n^{-1/3}: the fit must return slope -1/3 and, with d = 3, a
/// bound constant of 2.
pub fn self_test_report(n_list: &[usize]) -> CliResult<RateReport> {
    let rows = n_list.iter().map(|&n| RateRow { n, ks: 2.0 * (n as f64).powf(-1.0 / 3.0), stderr: 0.0 }).collect();
    Ok(RateReport::from_rows(rows, 3)?)
}

pub fn cmd_clt_run(cfg: &RunConfig, runner: &RayonRunner, dir: &Path) -> CliResult<Outcome> {
    let n_list = cfg.counts("n-list");
    let self_test = cfg.bool("self-test") == Some(true);
    let report = if self_test {
        let mut l = n_list.clone();
        l.sort_unstable();
        l.dedup();
        if l.len() < 2 {
            return Err(CliError::Config("self-test needs at least two distinct n".into()));
        }
        self_test_report(&l)?
    } else {
        let template = cfg.ensemble(1)?;
        let f = cfg.function("function")?.build(cfg.optional_count("degree"))?;
        rate_sweep(runner, &template, &f, &n_list, cfg.count("draws") as u64, cfg.seed())?
    };
    let mut t = provenance(Table::new(&["n", "ks", "stderr", "scaled_ks"]), cfg)
        .provenance("d", report.d)
        .provenance("slope", fmt_f64(report.fit.slope))
        .provenance("bound_constant", fmt_f64(report.bound_constant));
    for r in &report.rows {
        let scaled = (r.n as f64).powf(1.0 / report.d as f64) * r.ks;
        t.push(vec![r.n.to_string(), fmt_f64(r.ks), fmt_f64(r.stderr), fmt_f64(scaled)]);
    }
    let mut out = Outcome::default();
    write_table(dir, "rates.csv", &t, &mut out)?;
    write_json(dir, "rate_report.json", &report, &mut out)?;
    out.summary = format!(
        "slope {:.6} (95% CI {:.4}..{:.4}), bound_constant {:.6} (d = {}), KS nonincreasing within error: {}",
        report.fit.slope,
        report.fit.slope_ci.0,
        report.fit.slope_ci.1,
        report.bound_constant,
        report.d,
        report.nonincreasing_within_error()
    );
    if self_test && (report.fit.slope + 1.0 / 3.0).abs() > 1e-12 {
        out.breach = Some(format!("self-test slope {} is not -1/3", report.fit.slope));
    }
    if let Some(c) = cfg.optional_real("ceiling") {
        if !(report.bound_constant <= c) {
            out.breach = Some(format!("bound_constant {} exceeds ceiling {c}", report.bound_constant));
        }
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct CharfnSummary {
    ensemble: String,
    function: String,
    /// Per n: max over h of n |phi_hat - e^{-h^2/2}| and its standard error.
    per_n: Vec<(usize, f64, f64)>,
    /// Largest scaled gap over the sweep.
    constant: f64,
    /// Largest |phi_hat - phi_exact| / stderr over the rows with an exact value.
    max_z_vs_exact: Option<f64>,
}

pub fn cmd_charfn(cfg: &RunConfig, runner: &RayonRunner, dir: &Path) -> CliResult<Outcome> {
    let fs = cfg.function("function")?;
    let f = fs.build(cfg.optional_count("degree"))?;
    let h_grid = cfg.reals("h-grid");
    let mut t = provenance(
        Table::new(&[
            "n", "h", "re", "im", "se_re", "se_im", "gap", "gap_se", "scaled_gap", "exact_re", "exact_im", "z",
        ]),
        cfg,
    );
    let mut per_n = Vec::new();
    let mut max_z: Option<f64> = None;
    for n in cfg.counts("n-list") {
        let spec = cfg.ensemble(n)?;
        let batch = generate_batch(runner, &spec, &f, cfg.seed(), 0, cfg.count("draws") as u64)?;
        let gaps = lemma2_gap(&batch.values, &h_grid);
        let oracle = if n <= N_MAX { Some(HankelOracle::new(&spec)?) } else { None };
        let exact: Vec<Option<Complex64>> = runner.install(|| {
            h_grid
                .par_iter()
                .map(|&h| oracle.as_ref().map(|o| hankel_charfn(o, &f.series, h)).transpose())
                .collect::<linstat_core::Result<Vec<_>>>()
        })?;
        let mut worst = (0.0f64, 0.0f64);
        for ((g, &h), ex) in gaps.iter().zip(&h_grid).zip(&exact) {
            let e = charfn_estimate(&batch.values, h);
            let scaled = n as f64 * g.gap;
            if scaled > worst.0 {
                worst = (scaled, n as f64 * g.stderr);
            }
            let (ere, eim, z) = match ex {
                Some(x) => {
                    let z = (e.value - x).norm() / e.stderr().max(f64::MIN_POSITIVE);
                    max_z = Some(max_z.map_or(z, |m| m.max(z)));
                    (fmt_f64(x.re), fmt_f64(x.im), fmt_f64(z))
                }
                None => (String::new(), String::new(), String::new()),
            };
            t.push(vec![
                n.to_string(),
                fmt_f64(h),
                fmt_f64(e.value.re),
                fmt_f64(e.value.im),
                fmt_f64(e.se_re),
                fmt_f64(e.se_im),
                fmt_f64(g.gap),
                fmt_f64(g.stderr),
                fmt_f64(scaled),
                ere,
                eim,
                z,
            ]);
        }
        per_n.push((n, worst.0, worst.1));
    }
    let constant = per_n.iter().map(|p| p.1).fold(0.0, f64::max);
    let s = CharfnSummary {
        ensemble: cfg.get("ensemble").into(),
        function: fs.name(),
        per_n,
        constant,
        max_z_vs_exact: max_z,
    };
    let mut out = Outcome::default();
    write_table(dir, "charfn.csv", &t, &mut out)?;
    write_json(dir, "charfn_summary.json", &s, &mut out)?;
    out.summary = format!("max n |phi_hat - phi_N| = {constant:.6}");
    if let Some(z) = max_z {
        out.summary.push_str(&format!(", max |phi_hat - phi_exact| / stderr = {z:.3}"));
    }
    Ok(out)
}

pub fn cmd_cov(cfg: &RunConfig, runner: &RayonRunner, dir: &Path) -> CliResult<Outcome> {
    let spec = cfg.ensemble(cfg.count("n"))?;
    let l = cfg.count("l");
    let c = joint_covariance(runner, &spec, l, cfg.count("draws") as u64, cfg.seed())?;
    let mut t = provenance(Table::new(&["i", "j", "cov", "stderr", "expected", "z"]), cfg);
    let mut max_z = 0.0f64;
    for i in 0..l {
        for j in 0..l {
            let v = c.matrix[i * l + j];
            let se = c.stderr[i * l + j];
            let expected = if i == j { (i + 1) as f64 / 4.0 } else { 0.0 };
            let z = if se > 0.0 { (v - expected).abs() / se } else { f64::INFINITY };
            max_z = max_z.max(z);
            t.push(vec![(i + 1).to_string(), (j + 1).to_string(), fmt_f64(v), fmt_f64(se), fmt_f64(expected), fmt_f64(z)]);
        }
    }
    let mut out = Outcome::default();
    write_table(dir, "covariance.csv", &t, &mut out)?;
    write_json(dir, "covariance.json", &c, &mut out)?;
    let diag: Vec<String> = (0..l).map(|i| format!("{:.4}", c.matrix[i * l + i])).collect();
    out.summary = format!("diagonal [{}], max |cov - diag(k/4)| / stderr = {max_z:.3}", diag.join(", "));
    Ok(out)
}

/// Verify identities in parallel, one task per identity, merged in order.
pub fn rh_report(cfg: &RunConfig, runner: &RayonRunner) -> CliResult<RhReport> {
    let spec = cfg.ensemble(1)?;
    let f = cfg.function("f-tilde")?.build(cfg.optional_count("degree"))?;
    let vc = VerifyConfig {
        points: cfg.count("points"),
        n_list: cfg.counts("n-list"),
        f_tilde: ComplexSeries::from_real(&f.series, Complex64::new(0.0, cfg.real("h"))),
        d1_perturbation: cfg.real("perturb-d1"),
        radius: cfg.real("radius"),
    };
    let mut ids = cfg.identities();
    if ids.is_empty() {
        ids = linstat_core::rh::verify::Identity::ALL.to_vec();
    }
    let parts = runner.install(|| {
        ids.par_iter().map(|id| verify(&spec, &vc, &[*id])).collect::<linstat_core::Result<Vec<_>>>()
    })?;
    let mut merged = RhReport {
        ensemble: spec.kind.name().into(),
        alpha: spec.alpha,
        beta: spec.beta,
        rows: Vec::new(),
        summaries: Vec::new(),
        fits: Vec::new(),
        all_pass: true,
    };
    for p in parts {
        merged.all_pass &= p.all_pass;
        merged.rows.extend(p.rows);
        merged.summaries.extend(p.summaries);
        merged.fits.extend(p.fits);
    }
    Ok(merged)
}

pub fn cmd_rh_verify(cfg: &RunConfig, runner: &RayonRunner, dir: &Path) -> CliResult<Outcome> {
    let report = rh_report(cfg, runner)?;
    let mut rows = provenance(Table::new(&["identity", "re", "im", "residual"]), cfg);
    for r in &report.rows {
        rows.push(vec![r.identity.clone(), fmt_f64(r.re), fmt_f64(r.im), fmt_f64(r.residual)]);
    }
    let mut fits = provenance(Table::new(&["identity", "label", "x", "y"]), cfg);
    for fit in &report.fits {
        for (x, y) in fit.xs.iter().zip(&fit.ys) {
            fits.push(vec![fit.identity.clone(), fit.label.clone(), fmt_f64(*x), fmt_f64(*y)]);
        }
    }
    let mut out = Outcome::default();
    write_table(dir, "rh_residuals.csv", &rows, &mut out)?;
    write_table(dir, "rh_decay.csv", &fits, &mut out)?;
    write_json(dir, "rh_report.json", &report, &mut out)?;
    let mut s = String::new();
    for sm in &report.summaries {
        s.push_str(&format!(
            "{:<15} {:>5} probes  max {:.3e}  threshold {:.1e}  {}\n",
            sm.identity,
            sm.count,
            sm.max_residual,
            sm.threshold,
            if sm.pass { "ok" } else { "FAIL" }
        ));
    }
    if let Some(w) = report.worst() {
        s.push_str(&format!("worst: {} at {:.3} of its threshold", w.identity, w.max_residual / w.threshold));
    }
    out.summary = s;
    if !report.all_pass {
        let failed: Vec<&str> = report.summaries.iter().filter(|s| !s.pass).map(|s| s.identity.as_str()).collect();
        out.breach = Some(format!("residual above threshold: {}", failed.join(", ")));
    }
    Ok(out)
}
