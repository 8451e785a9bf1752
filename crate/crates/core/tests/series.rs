use harmlike_core::coefficients::FunctionId;
use harmlike_core::series::{evaluate_series, reference_value, SeriesOptions};
use harmlike_core::{
    cauchy_product_oracle, cos_si_series, cosh_shi_series, exact_coefficients, ratio,
    shi_reference, shi_squared_series, si_reference, si_squared_series, ComplexScalar,
};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// Adaptive Simpson on `[a, b]`, independent of any series code.
fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, eps: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        eps: f64,
        whole: f64,
        m: f64,
        fm: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, eps / 2.0, left, lm, flm, depth - 1)
            + recurse(f, m, fm, b, fb, eps / 2.0, right, rm, frm, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, eps, whole, m, fm, 50)
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

fn sinhc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sinh() / x
    }
}

#[test]
fn references_match_quadrature() {
    let gibbs = adaptive_simpson(&sinc, 0.0, std::f64::consts::PI, 1e-15);
    assert!((gibbs - 1.851937051982466).abs() < 1e-13);
    let si_pi = si_reference(c(std::f64::consts::PI, 0.0)).unwrap();
    assert!((si_pi.re - gibbs).abs() < 1e-13 && si_pi.im == 0.0);

    let shi1_quad = adaptive_simpson(&sinhc, 0.0, 1.0, 1e-15);
    assert!((shi1_quad - 1.0572508753757285).abs() < 1e-13);
    let shi1 = shi_reference(c(1.0, 0.0)).unwrap();
    assert!((shi1.re - shi1_quad).abs() < 1e-13);

    for x in [0.5, 2.0, 5.0, 10.0] {
        let quad = adaptive_simpson(&sinc, 0.0, x, 1e-15);
        assert!(
            (si_reference(c(x, 0.0)).unwrap().re - quad).abs() < 1e-12,
            "x = {x}"
        );
    }
    let si_m1 = si_reference(c(-1.0, 0.0)).unwrap();
    assert_eq!(si_m1, -si_reference(c(1.0, 0.0)).unwrap());
}

#[test]
fn series_values_at_unit_argument() {
    let z = c(1.0, 0.0);
    // Si(1)² = 0.895073176035396168…, Shi(1)² = 1.117779413482744…,
    // 2cosh(1)Shi(1) = 3.262846703867502…
    let si2 = si_squared_series(z, 1e-15).unwrap();
    assert!((si2.value.re - 0.8950731760353962).abs() < 1e-15);
    let si1 = si_reference(z).unwrap().re;
    assert!((si2.value.re - si1 * si1).abs() < 1e-15);
    let shi2 = shi_squared_series(z, 1e-15).unwrap();
    assert!((shi2.value.re - 1.1177794134827442).abs() < 1e-15);
    let ch = cosh_shi_series(z, 1e-15).unwrap();
    assert!((ch.value.re - 3.2628467038675027).abs() < 4e-15);
    let cs = cos_si_series(z, 1e-15).unwrap();
    assert!((cs.value.re - 1.022_341_728_924_397).abs() < 4e-15);
}

#[test]
fn coefficient_tables_equal_cauchy_products() {
    for id in FunctionId::ALL {
        let weighted = exact_coefficients(id, 12).unwrap();
        let oracle = cauchy_product_oracle(id, 12).unwrap();
        assert_eq!(weighted, oracle, "{id}");
        assert_eq!(weighted.len(), 12);
    }
    let si2 = exact_coefficients(FunctionId::Si2, 2).unwrap();
    assert_eq!(si2.get(4), Some(&ratio(-1, 9)));
    let cos_si = cauchy_product_oracle(FunctionId::CosSi, 2).unwrap();
    assert_eq!(cos_si.get(3), Some(&ratio(-10, 9)));
}

#[test]
fn value_agreement_on_default_points() {
    let points = [
        c(0.5, 0.0),
        c(1.0, 0.0),
        c(2.0, 0.0),
        c(5.0, 0.0),
        c(10.0, 0.0),
        c(1.0, 2.0),
    ];
    for id in FunctionId::HARMONIC_WEIGHTED {
        for z in points {
            let r = evaluate_series(id, z, &SeriesOptions::with_tol(1e-14)).unwrap();
            let reference = reference_value(id, z).unwrap();
            let err = (r.value - reference).norm();
            assert!(r.converged && r.terms_used <= 80, "{id} at {z}: {r:?}");
            assert!(
                err <= 1e-12 * reference.norm().max(1.0),
                "{id} at {z}: err {err:e}"
            );
        }
    }
}

#[test]
fn trig_hyperbolic_bridge() {
    for y in [0.5, 1.0, 3.0] {
        let hyp = shi_squared_series(c(0.0, y), 1e-15).unwrap().value;
        let trig = si_squared_series(c(y, 0.0), 1e-15).unwrap().value;
        assert!(
            (hyp + trig).norm() < 1e-14 * trig.norm().max(1.0),
            "y = {y}"
        );
    }
}

#[test]
fn converged_flag_bounds_last_term() {
    for id in FunctionId::HARMONIC_WEIGHTED {
        for tol in [1e-4, 1e-8, 1e-14] {
            let r = evaluate_series(id, c(3.0, -1.0), &SeriesOptions::with_tol(tol)).unwrap();
            assert!(r.converged);
            assert!(r.last_term_magnitude <= tol * r.value.norm().max(1.0));
        }
    }
}

fn complex_in(radius: f64) -> impl Strategy<Value = ComplexScalar> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| ComplexScalar::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn parity(z in complex_in(5.0)) {
        let even_p = si_squared_series(z, 1e-15).unwrap().value;
        let even_m = si_squared_series(-z, 1e-15).unwrap().value;
        prop_assert!((even_p - even_m).norm() <= 1e-14 * even_p.norm().max(1.0));
        let odd_p = cos_si_series(z, 1e-15).unwrap().value;
        let odd_m = cos_si_series(-z, 1e-15).unwrap().value;
        prop_assert!((odd_p + odd_m).norm() <= 1e-14 * odd_p.norm().max(1.0));
    }

    #[test]
    fn entire_convergence(z in complex_in(10.0)) {
        for id in FunctionId::HARMONIC_WEIGHTED {
            let r = evaluate_series(id, z, &SeriesOptions::with_tol(1e-14)).unwrap();
            prop_assert!(r.converged);
            prop_assert!(r.terms_used <= 80);
        }
    }

    #[test]
    fn agrees_with_reference_in_disk(z in complex_in(4.0)) {
        for id in FunctionId::HARMONIC_WEIGHTED {
            let r = evaluate_series(id, z, &SeriesOptions::with_tol(1e-15)).unwrap();
            let reference = reference_value(id, z).unwrap();
            prop_assert!((r.value - reference).norm() <= 1e-12 * reference.norm().max(1.0));
        }
    }
}
