//! Certifies the tridiagonal samplers against closed-form n = 1 marginals,
//! direct rejection sampling for n <= 3, the dense matrix models, and
//! equilibrium moments.

use linstat_core::ensemble::{rejection_sample, sample, sample_with, Method};
use linstat_core::stats::{ks_pvalue, ks_two_sample, mean, std_error, EmpiricalCdf};
use linstat_core::{EnsembleSpec, Kind};
use statrs::distribution::{Beta, ContinuousCDF, Gamma, Normal};

const DRAWS: u64 = 10_000;

fn draws(spec: &EnsembleSpec, seed: u64) -> Vec<Vec<f64>> {
    (0..DRAWS).map(|i| sample(spec, seed, i).unwrap().eigenvalues).collect()
}

#[test]
fn n1_marginals() {
    let gue = EnsembleSpec::gue(1);
    let x: Vec<f64> = draws(&gue, 1).into_iter().map(|v| v[0]).collect();
    let normal = Normal::new(0.0, 0.5).unwrap();
    let d = EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| normal.cdf(t));
    assert!(ks_pvalue(d, x.len()) > 1e-3, "GUE n=1 KS {d}");

    for alpha in [0.0, 0.5, 2.5] {
        let lue = EnsembleSpec::lue(1, alpha);
        let x: Vec<f64> = draws(&lue, 2).into_iter().map(|v| v[0]).collect();
        // 2(1 + x) ~ Gamma(alpha + 1, 1)
        let g = Gamma::new(alpha + 1.0, 1.0).unwrap();
        let d = EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| g.cdf(2.0 * (1.0 + t)));
        assert!(ks_pvalue(d, x.len()) > 1e-3, "LUE n=1 alpha={alpha} KS {d}");
    }

    for (a, b) in [(0.0, 0.0), (0.5, -0.25), (-0.6, 1.7)] {
        let jue = EnsembleSpec::jue(1, a, b);
        let x: Vec<f64> = draws(&jue, 3).into_iter().map(|v| v[0]).collect();
        // (1 + x)/2 ~ Beta(alpha + 1, beta + 1)
        let be = Beta::new(a + 1.0, b + 1.0).unwrap();
        let d = EmpiricalCdf::new(&x).unwrap().ks_distance_to(|t| be.cdf(0.5 * (1.0 + t)));
        assert!(ks_pvalue(d, x.len()) > 1e-3, "JUE n=1 ({a},{b}) KS {d}");
    }
}

fn compare_extremes(spec: &EnsembleSpec, other: &[Vec<f64>], label: &str) {
    let ours = draws(spec, 40 + spec.n as u64);
    for pick in [0usize, spec.n - 1] {
        let a: Vec<f64> = ours.iter().map(|v| v[pick]).collect();
        let b: Vec<f64> = other.iter().map(|v| v[pick]).collect();
        let (d, p) = ks_two_sample(&a, &b);
        assert!(p > 1e-3, "{label} {:?} n={} eigenvalue #{pick}: D={d} p={p}", spec.kind, spec.n);
    }
}

#[test]
fn small_n_matches_rejection_oracle() {
    for n in 2..=3 {
        for spec in [
            EnsembleSpec::gue(n),
            EnsembleSpec::lue(n, 0.5),
            EnsembleSpec::lue(n, 0.0),
            EnsembleSpec::jue(n, 0.5, -0.25),
            EnsembleSpec::jue(n, 2.0, 0.0),
        ] {
            let oracle: Vec<Vec<f64>> = (0..DRAWS).map(|i| rejection_sample(&spec, 977, i).unwrap().eigenvalues).collect();
            compare_extremes(&spec, &oracle, "rejection");
        }
    }
}

#[test]
fn tridiagonal_matches_dense_models() {
    for spec in [EnsembleSpec::gue(5), EnsembleSpec::lue(5, 1.0), EnsembleSpec::jue(5, 2.0, 1.0)] {
        let dense: Vec<Vec<f64>> =
            (0..DRAWS).map(|i| sample_with(&spec, 555, i, Method::Dense).unwrap().eigenvalues).collect();
        compare_extremes(&spec, &dense, "dense");
    }
}

#[test]
fn gue_median_is_zero() {
    let spec = EnsembleSpec::gue(64);
    let frac: Vec<f64> = (0..100_000)
        .map(|i| {
            let s = sample(&spec, 8, i).unwrap();
            s.eigenvalues.iter().filter(|&&x| x <= 0.0).count() as f64 / 64.0
        })
        .collect();
    let m = mean(&frac);
    let se = std_error(&frac);
    assert!((m - 0.5).abs() <= 3.0 * se, "{m} +- {se}");
}

#[test]
fn equilibrium_second_moments() {
    let n = 64;
    for (spec, expect) in [(EnsembleSpec::gue(n), 0.25), (EnsembleSpec::jue(n, 0.0, 0.0), 0.5)] {
        let m2: Vec<f64> = (0..4000).map(|i| sample(&spec, 9, i).unwrap().counting_measure_moment(2)).collect();
        let m = mean(&m2);
        let se = std_error(&m2);
        println!("{:?}: <x^2> = {m} +- {se}", spec.kind);
        assert!((m - expect).abs() <= 3.0 * se + 1.0 / n as f64, "{:?}: {m}", spec.kind);
    }
    let s = sample(&EnsembleSpec::lue(10, 0.5), 1, 1).unwrap();
    assert_eq!(s.counting_measure_moment(0), 1.0);
}

#[test]
fn linear_statistic_means() {
    use linstat_core::functionals::limit_functionals;
    use linstat_core::stats::StatFunction;
    use linstat_core::ChebyshevSeries;
    let n = 32;
    for spec in [EnsembleSpec::gue(n), EnsembleSpec::lue(n, 0.5), EnsembleSpec::jue(n, 0.5, -0.25)] {
        for k in 1..=2 {
            let mut c = vec![0.0; k + 1];
            c[k] = 1.0;
            let f = StatFunction::polynomial(ChebyshevSeries::new(c));
            let lf = limit_functionals(&spec, &f.series);
            let tr: Vec<f64> = (0..100_000).map(|i| f.trace(&sample(&spec, 12, i).unwrap().eigenvalues).unwrap()).collect();
            let diff = mean(&tr) - n as f64 * lf.kappa - lf.mu;
            let se = std_error(&tr);
            let c_meas = (diff.abs() - 3.0 * se).max(0.0) * n as f64;
            println!("{:?} T{k}: mean - n kappa - mu = {diff:.5} (se {se:.5}), C = {c_meas:.3}", spec.kind);
            assert!(diff.abs() <= 3.0 * se + 2.0 / n as f64);
        }
    }
    let _ = Kind::Gue;
}
