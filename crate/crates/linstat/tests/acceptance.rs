//! Acceptance run. Prints one PASS/FAIL line per criterion with the measured
//! quantity, its pinned tolerance and the runtime against its budget, then
//! exits nonzero if any criterion failed.

use linstat::RayonRunner;
use linstat_core::chebyshev::{transform_fn, TRIM_TOL};
use linstat_core::ensemble::{rejection_sample, sample};
use linstat_core::functionals::{k_variance, k_variance_oracle, kappa_quadrature, limit_functionals, mu_quadrature};
use linstat_core::hankel::{gue_t2_charfn_exact, hankel_charfn, HankelOracle};
use linstat_core::rh::verify::{verify, VerifyConfig};
use linstat_core::stats::{
    charfn_estimate, generate_batch, joint_covariance, ks_pvalue, ks_two_sample, mean, rate_sweep, std_error,
    EmpiricalCdf, StatFunction,
};
use linstat_core::{ChebyshevSeries, EnsembleSpec, Kind};
use num_complex::Complex64;
use statrs::distribution::{Beta, ContinuousCDF, Gamma, Normal};
use std::time::{Duration, Instant};

const ALPHA: f64 = 0.5;
const BETA: f64 = -0.25;

fn ensembles(n: usize) -> [EnsembleSpec; 3] {
    [EnsembleSpec::gue(n), EnsembleSpec::lue(n, ALPHA), EnsembleSpec::jue(n, ALPHA, BETA)]
}

fn tk(k: usize) -> ChebyshevSeries {
    let mut c = vec![0.0; k + 1];
    c[k] = 1.0;
    ChebyshevSeries::new(c)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// kappa_k, mu_k and K = k/4 written out per ensemble.
fn closed_form(spec: &EnsembleSpec, k: usize) -> (f64, f64, f64) {
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^{k-1}
    let delta = |j: usize| if k == j { 1.0 } else { 0.0 };
    let (kappa, mu) = match spec.kind {
        Kind::Gue => (-delta(2) / 2.0, 0.0),
        Kind::Lue => (-delta(1) / 2.0, sign * spec.alpha / 2.0),
        Kind::Jue => (0.0, (sign * spec.alpha - spec.beta) / 2.0),
    };
    (kappa, mu, k as f64 / 4.0)
}

fn c1_functional_exactness() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_quad = 0.0f64;
    for spec in ensembles(1) {
        for k in 1..=10 {
            let f = tk(k);
            let lf = limit_functionals(&spec, &f);
            let (kc, mc, kk) = closed_form(&spec, k);
            worst = worst.max((lf.kappa - kc).abs()).max((lf.mu - mc).abs()).max((lf.k_var - kk).abs());
            // second route: the defining integrals by quadrature
            let kq = kappa_quadrature(&spec, |x| f.evaluate(x), 1e-14).unwrap();
            let mq = mu_quadrature(&spec, |x| f.evaluate(x), 1e-14).unwrap();
            worst_quad = worst_quad.max((kq - kc).abs()).max((mq - mc).abs());
        }
    }
    outcome(
        worst <= 1e-12 && worst_quad <= 1e-10,
        format!("max |closed form - coefficient formula| = {worst:.2e} (tol 1e-12); quadrature route {worst_quad:.2e} (tol 1e-10)"),
    )
}

fn c2_oracle_coherence() -> Outcome {
    let cases: [(&str, Box<dyn Fn(f64) -> f64>, usize); 3] = [
        ("T3", Box::new(|x: f64| tk(3).evaluate(x)), 3),
        ("exp", Box::new(|x: f64| x.exp()), 40),
        ("1/(1+4x^2)", Box::new(|x: f64| 1.0 / (1.0 + 4.0 * x * x)), 90),
    ];
    let mut parts = Vec::new();
    let mut worst = 0.0f64;
    for (name, f, m) in cases {
        let s = transform_fn(f, m).unwrap().trim(TRIM_TOL);
        let coef = k_variance(&s);
        let oracle = k_variance_oracle(&s, 2 * s.degree() + 16, 1e-10).unwrap();
        let err = (coef - oracle).abs();
        worst = worst.max(err);
        parts.push(format!("{name}: K = {coef:.10} vs {oracle:.10}"));
    }
    outcome(worst <= 1e-6, format!("{}; max diff {worst:.2e} (tol 1e-6)", parts.join(", ")))
}

fn c3_exact_vs_mc(runner: &RayonRunner) -> Outcome {
    const DRAWS: u64 = 1_000_000;
    let h_grid = [-1.0, -0.5, -0.25, 0.25, 0.5, 1.0];
    let f = StatFunction::polynomial(tk(2));
    let mut worst_z = 0.0f64;
    let mut count = 0;
    for n in 1..=6 {
        for spec in ensembles(n) {
            let batch = generate_batch(runner, &spec, &f, 31 + n as u64, 0, DRAWS).unwrap();
            let oracle = HankelOracle::new(&spec).unwrap();
            for h in h_grid {
                let exact = hankel_charfn(&oracle, &f.series, h).unwrap();
                let e = charfn_estimate(&batch.values, h);
                worst_z = worst_z.max((e.value - exact).norm() / e.stderr());
                count += 1;
            }
        }
    }
    // GUE n = 1, f = T1: S is exactly standard normal
    let oracle = HankelOracle::new(&EnsembleSpec::gue(1)).unwrap();
    let mut worst_gauss = 0.0f64;
    for k in 0..=40 {
        let h = -2.0 + 0.1 * k as f64;
        let v = hankel_charfn(&oracle, &tk(1), h).unwrap();
        worst_gauss = worst_gauss.max((v - Complex64::new((-0.5 * h * h).exp(), 0.0)).norm());
    }
    outcome(
        worst_z <= 3.0 && worst_gauss <= 1e-10,
        format!(
            "{count} comparisons at 1e6 draws: max |phi_mc - phi_hankel| / stderr = {worst_z:.3} (tol 3); GUE n=1 T1 vs exp(-h^2/2): {worst_gauss:.2e} (tol 1e-10)"
        ),
    )
}

fn c4_gap_bound(runner: &RayonRunner) -> Outcome {
    const DRAWS: u64 = 100_000;
    let h_grid: Vec<f64> = (0..=20).map(|k| -1.0 + 0.1 * k as f64).filter(|h: &f64| h.abs() > 1e-12).collect();
    let f = StatFunction::polynomial(tk(2));
    let mut per_n = Vec::new();
    let mut worst_z = 0.0f64;
    for n in [4usize, 8, 16, 32] {
        let spec = EnsembleSpec::gue(n);
        let batch = generate_batch(runner, &spec, &f, 400 + n as u64, 0, DRAWS).unwrap();
        let mut best = (0.0f64, 0.0f64, 0.0f64);
        for &h in &h_grid {
            let e = charfn_estimate(&batch.values, h);
            let gap = (e.value - Complex64::new((-0.5 * h * h).exp(), 0.0)).norm();
            let exact = gue_t2_charfn_exact(n, h);
            worst_z = worst_z.max((e.value - exact).norm() / e.stderr());
            let scaled = n as f64 * gap;
            if scaled > best.0 {
                let exact_scaled = n as f64 * (exact - Complex64::new((-0.5 * h * h).exp(), 0.0)).norm();
                best = (scaled, n as f64 * e.stderr(), exact_scaled);
            }
        }
        per_n.push((n, best.0, best.1, best.2));
    }
    let nonincreasing = per_n.windows(2).all(|w| w[1].1 <= w[0].1 + 3.0 * w[0].2.hypot(w[1].2));
    let constant = per_n.iter().map(|p| p.1).fold(0.0, f64::max);
    let table: Vec<String> = per_n.iter().map(|p| format!("n={} {:.4}+-{:.4} (exact {:.4})", p.0, p.1, p.2, p.3)).collect();
    outcome(
        nonincreasing && constant.is_finite() && worst_z <= 3.0,
        format!(
            "max_h n|phi_hat - phi_N|: {}; nonincreasing within 3 se: {nonincreasing}; constant {constant:.4}; MC vs closed form max z {worst_z:.3} (tol 3)",
            table.join(", ")
        ),
    )
}

fn c5_rate_bound(runner: &RayonRunner) -> Outcome {
    let f = StatFunction::polynomial(tk(2));
    let mut pass = true;
    let mut parts = Vec::new();
    for spec in ensembles(1) {
        let r = rate_sweep(runner, &spec, &f, &[8, 16, 32, 64, 128], 100_000, 2024).unwrap();
        let ok = r.nonincreasing_within_error() && r.bound_constant.is_finite();
        pass &= ok;
        let ks: Vec<String> = r.rows.iter().map(|x| format!("{:.4}", x.ks)).collect();
        parts.push(format!(
            "{} (d={}): KS [{}], bound constant {:.4}, slope {:.3}",
            spec.kind.name(),
            r.d,
            ks.join(", "),
            r.bound_constant,
            r.fit.slope
        ));
    }
    outcome(pass, format!("{}; nonincreasing within 3 bootstrap se", parts.join("; ")))
}

fn c6_covariance(runner: &RayonRunner) -> Outcome {
    let l = 4;
    let c = joint_covariance(runner, &EnsembleSpec::gue(64), l, 100_000, 77).unwrap();
    let mut worst = 0.0f64;
    for i in 0..l {
        for j in 0..l {
            let expected = if i == j { (i + 1) as f64 / 4.0 } else { 0.0 };
            worst = worst.max((c.matrix[i * l + j] - expected).abs() / c.stderr[i * l + j]);
        }
    }
    let diag: Vec<String> = (0..l).map(|i| format!("{:.4}", c.matrix[i * l + i])).collect();
    outcome(worst <= 5.0, format!("diagonal [{}]; max |cov - diag(k/4)| / stderr = {worst:.3} (tol 5)", diag.join(", ")))
}

fn c7_rh_suite() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for spec in ensembles(1) {
        let r = verify(&spec, &VerifyConfig::default(), &[]).unwrap();
        pass &= r.all_pass;
        let failed: Vec<&str> = r.summaries.iter().filter(|s| !s.pass).map(|s| s.identity.as_str()).collect();
        let get = |id: &str| r.summaries.iter().find(|s| s.identity == id).map_or(f64::NAN, |s| s.max_residual);
        parts.push(format!(
            "{}: szego-jump {:.1e}, g-phi {:.1e}, det {:.1e}, jumps <= {:.1e}, decay dev {:.3}/{:.3}, matching dev {:.3}{}",
            spec.kind.name(),
            get("szego-jump"),
            get("g-phi"),
            get("det"),
            ["n-jump", "airy-jump", "bessel-jump", "e-jump", "ju-jump", "factorization"].iter().map(|i| get(i)).fold(0.0, f64::max),
            get("airy-decay"),
            get("bessel-decay"),
            get("matching"),
            if failed.is_empty() { String::new() } else { format!(" FAILED {}", failed.join(",")) }
        ));
    }
    outcome(pass, parts.join("; "))
}

fn c8_sampler_certification() -> Outcome {
    const DRAWS: u64 = 10_000;
    let draws = |spec: &EnsembleSpec, seed: u64| -> Vec<Vec<f64>> {
        (0..DRAWS).map(|i| sample(spec, seed, i).unwrap().eigenvalues).collect()
    };
    let mut min_p = f64::INFINITY;
    let mut check = |d: f64, n: usize| min_p = min_p.min(ks_pvalue(d, n));

    let x: Vec<f64> = draws(&EnsembleSpec::gue(1), 1).into_iter().map(|v| v[0]).collect();
    let normal = Normal::new(0.0, 0.5).unwrap();
    check(EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| normal.cdf(t)), x.len());
    let x: Vec<f64> = draws(&EnsembleSpec::lue(1, ALPHA), 2).into_iter().map(|v| v[0]).collect();
    let g = Gamma::new(ALPHA + 1.0, 1.0).unwrap();
    check(EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| g.cdf(2.0 * (1.0 + t))), x.len());
    let x: Vec<f64> = draws(&EnsembleSpec::jue(1, ALPHA, BETA), 3).into_iter().map(|v| v[0]).collect();
    let b = Beta::new(ALPHA + 1.0, BETA + 1.0).unwrap();
    check(EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| b.cdf(0.5 * (1.0 + t))), x.len());
    let marginal_p = min_p;

    let mut min_two = f64::INFINITY;
    for n in 2..=3 {
        for spec in ensembles(n) {
            let ours = draws(&spec, 40 + n as u64);
            let oracle: Vec<Vec<f64>> = (0..DRAWS).map(|i| rejection_sample(&spec, 977, i).unwrap().eigenvalues).collect();
            for pick in [0, n - 1] {
                let a: Vec<f64> = ours.iter().map(|v| v[pick]).collect();
                let o: Vec<f64> = oracle.iter().map(|v| v[pick]).collect();
                min_two = min_two.min(ks_two_sample(&a, &o).1);
            }
        }
    }

    // second moments of the counting measure: 1/4 (semicircle), 1/2 (arcsine)
    let n = 64;
    let mut moment_ok = true;
    let mut moments = Vec::new();
    for (spec, expect) in [(EnsembleSpec::gue(n), 0.25), (EnsembleSpec::jue(n, 0.0, 0.0), 0.5)] {
        let m2: Vec<f64> = (0..4000).map(|i| sample(&spec, 9, i).unwrap().counting_measure_moment(2)).collect();
        let (m, se) = (mean(&m2), std_error(&m2));
        moment_ok &= (m - expect).abs() <= 3.0 * se + 1.0 / n as f64;
        moments.push(format!("{} <x^2> = {m:.4}", spec.kind.name()));
    }
    outcome(
        marginal_p > 1e-3 && min_two > 1e-3 && moment_ok,
        format!(
            "n=1 marginals min KS p = {marginal_p:.3}; rejection oracle min two-sample p = {min_two:.3} (tol 0.001); {}",
            moments.join(", ")
        ),
    )
}

fn main() {
    let runner = RayonRunner::from_env().expect("thread count");
    println!("acceptance run on {} thread(s)", runner.threads());
    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 functional exactness", Duration::from_secs(1), Box::new(c1_functional_exactness)),
        ("2 oracle coherence", Duration::from_secs(30), Box::new(c2_oracle_coherence)),
        ("3 exact vs Monte-Carlo charfn", Duration::from_secs(600), Box::new(|| c3_exact_vs_mc(&runner))),
        ("4 characteristic function gap bound", Duration::from_secs(600), Box::new(|| c4_gap_bound(&runner))),
        ("5 Kolmogorov distance rate bound", Duration::from_secs(1800), Box::new(|| c5_rate_bound(&runner))),
        ("6 limiting covariance", Duration::from_secs(300), Box::new(|| c6_covariance(&runner))),
        ("7 RH identity suite", Duration::from_secs(300), Box::new(c7_rh_suite)),
        ("8 sampler certification", Duration::from_secs(300), Box::new(c8_sampler_certification)),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in &criteria {
        let t = Instant::now();
        // a panic inside a criterion still yields a FAIL line
        let o = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run()))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                outcome(false, format!("panicked: {msg}"))
            });
        let dt = t.elapsed();
        let pass = o.pass && dt <= *budget;
        println!(
            "[{}] criterion {name}: {} | runtime {:.2}s (budget {}s)",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            dt.as_secs_f64(),
            budget.as_secs()
        );
        if !pass {
            failed.push(*name);
        }
    }
    if failed.is_empty() {
        println!("all {} acceptance criteria passed", criteria.len());
    } else {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
