//! Property tests for the algebraic invariants of the series, functionals and
//! estimators.

use linstat_core::chebyshev::{transform_fn, ChebyshevSeries};
use linstat_core::ensemble::sample;
use linstat_core::functionals::limit_functionals;
use linstat_core::stats::{charfn_estimate, ks_distance, statistic, EmpiricalCdf, StatFunction};
use linstat_core::EnsembleSpec;
use proptest::prelude::*;

fn ensembles() -> impl Strategy<Value = EnsembleSpec> {
    prop_oneof![
        (1usize..12).prop_map(EnsembleSpec::gue),
        (1usize..12, -0.9f64..3.0).prop_map(|(n, a)| EnsembleSpec::lue(n, a)),
        (1usize..12, -0.9f64..3.0, -0.9f64..3.0).prop_map(|(n, a, b)| EnsembleSpec::jue(n, a, b)),
    ]
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..2.0, 1..max_len)
}

/// Power-basis polynomial by Horner.
fn horner(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn transform_round_trips_polynomials(p in coeffs(12), extra in 0usize..6) {
        let m = p.len() - 1 + extra;
        let s = transform_fn(|x| horner(&p, x), m).unwrap();
        let scale = p.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
        for k in 0..100 {
            let x = -1.0 + 2.0 * k as f64 / 99.0;
            prop_assert!((s.evaluate(x) - horner(&p, x)).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn transform_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0, m in 4usize..40) {
        let f = |x: f64| (1.5 * x).sin();
        let g = |x: f64| 1.0 / (2.0 + x);
        let lhs = transform_fn(|x| a * f(x) + b * g(x), m).unwrap();
        let sf = transform_fn(f, m).unwrap();
        let sg = transform_fn(g, m).unwrap();
        for j in 0..=m {
            prop_assert!((lhs.coeff(j) - (a * sf.coeff(j) + b * sg.coeff(j))).abs() <= 1e-12);
        }
    }

    #[test]
    fn parity_is_respected(m in 3usize..60, c in 0.1f64..2.0) {
        let even = transform_fn(|x| c * x * x, m).unwrap();
        let odd = transform_fn(|x| c * x * x * x, m).unwrap();
        for j in 0..=m {
            if j % 2 == 1 {
                prop_assert!(even.coeff(j).abs() <= 1e-13);
            } else {
                prop_assert!(odd.coeff(j).abs() <= 1e-13);
            }
        }
    }

    #[test]
    fn functionals_scale_and_shift(spec in ensembles(), c in coeffs(10), a in -3.0f64..3.0, shift in -5.0f64..5.0) {
        let s = ChebyshevSeries::new(c);
        let base = limit_functionals(&spec, &s);
        let scaled = limit_functionals(&spec, &s.scaled(a));
        prop_assert!((scaled.kappa - a * base.kappa).abs() <= 1e-12 * (1.0 + base.kappa.abs()));
        prop_assert!((scaled.mu - a * base.mu).abs() <= 1e-12 * (1.0 + base.mu.abs()));
        prop_assert!((scaled.k_var - a * a * base.k_var).abs() <= 1e-12 * (1.0 + base.k_var));

        let shifted = limit_functionals(&spec, &s.add(&ChebyshevSeries::new(vec![shift])));
        prop_assert!((shifted.kappa - base.kappa - shift).abs() <= 1e-12 * (1.0 + base.kappa.abs() + shift.abs()));
        prop_assert!((shifted.mu - base.mu).abs() <= 1e-12 * (1.0 + base.mu.abs()));
        prop_assert_eq!(shifted.k_var, base.k_var);
        prop_assert!(base.k_var >= 0.0);
    }

    #[test]
    fn ks_is_permutation_invariant(mut x in prop::collection::vec(-4.0f64..4.0, 1..200), seed in any::<u64>()) {
        let d0 = ks_distance(&EmpiricalCdf::new(&x).unwrap());
        // deterministic shuffle from the seed
        let mut state = seed | 1;
        for i in (1..x.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            x.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let d1 = ks_distance(&EmpiricalCdf::new(&x).unwrap());
        prop_assert_eq!(d0, d1);
        prop_assert!((0.0..=1.0).contains(&d0));
    }

    #[test]
    fn ecdf_is_a_distribution_function(x in prop::collection::vec(-4.0f64..4.0, 1..100), probes in prop::collection::vec(-5.0f64..5.0, 2..30)) {
        let cdf = EmpiricalCdf::new(&x).unwrap();
        let mut p = probes.clone();
        p.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in p.windows(2) {
            prop_assert!(cdf.eval(w[0]) <= cdf.eval(w[1]));
        }
        for t in &p {
            let v = cdf.eval(*t);
            prop_assert!((0.0..=1.0).contains(&v));
        }
        // right continuity: the jump at a sample point is already included there
        let n = x.len() as f64;
        for v in &x {
            let at = x.iter().filter(|y| **y <= *v).count() as f64 / n;
            prop_assert_eq!(cdf.eval(*v), at);
            prop_assert!(cdf.eval(v - 1e-9) < at);
        }
    }

    #[test]
    fn charfn_is_bounded_and_conjugate_symmetric(x in prop::collection::vec(-10.0f64..10.0, 1..200), h in -5.0f64..5.0) {
        let p = charfn_estimate(&x, h);
        let m = charfn_estimate(&x, -h);
        prop_assert!(p.value.norm() <= 1.0 + 1e-15);
        prop_assert_eq!(p.value.re, m.value.re);
        prop_assert_eq!(p.value.im, -m.value.im);
    }

    #[test]
    fn statistic_ignores_constant_shift(spec in ensembles(), c in coeffs(6), shift in -5.0f64..5.0, seed in 0u64..1000) {
        let mut c = c;
        if c.len() < 2 {
            c.push(1.0);
        }
        c[1] += 0.5_f64.copysign(c[1]);
        let s = ChebyshevSeries::new(c);
        let t = s.add(&ChebyshevSeries::new(vec![shift]));
        let eigs = sample(&spec, seed, 0).unwrap();
        let a = statistic(&eigs, &StatFunction::polynomial(s.clone()), &limit_functionals(&spec, &s)).unwrap();
        let b = statistic(&eigs, &StatFunction::polynomial(t.clone()), &limit_functionals(&spec, &t)).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()) * (1.0 + shift.abs()), "{a} vs {b}");
    }
}
