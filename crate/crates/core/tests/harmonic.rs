use harmlike_core::harmonic::min_nodes;
use harmlike_core::{
    harmonic_half, harmonic_like_direct, harmonic_like_exact, harmonic_like_sequence, integral_eq1,
    integral_eq2_exact, ratio, ComplexScalar, ExactRational,
};
use num_traits::{Pow, ToPrimitive, Zero};
use proptest::prelude::*;

/// Brute-force `Σ_{p=1}^{n} a^{n-p}/p` with explicit powers, no Horner.
fn power_sum(a: &ExactRational, n: u32) -> ExactRational {
    (1..=n)
        .map(|p| Pow::pow(a, n - p) / ratio(p as i64, 1))
        .fold(ExactRational::zero(), |acc, t| acc + t)
}

fn exact_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap()
}

#[test]
fn derived_examples_match_power_sum() {
    assert_eq!(power_sum(&ratio(1, 2), 4), ratio(2, 3));
    assert_eq!(power_sum(&ratio(2, 1), 3), ratio(16, 3));
    assert_eq!(power_sum(&ratio(1, 2), 3), ratio(5, 6));
    for (a, n) in [(ratio(1, 2), 4), (ratio(2, 1), 3), (ratio(-1, 3), 7)] {
        assert_eq!(harmonic_like_exact(&a, n), power_sum(&a, n));
    }
}

#[test]
fn exact_recurrence_for_many_a() {
    for a in [
        ratio(0, 1),
        ratio(1, 2),
        ratio(1, 1),
        ratio(2, 1),
        ratio(-1, 3),
        ratio(7, 5),
    ] {
        for n in 1..=50 {
            let lhs = harmonic_like_exact(&a, n);
            let rhs = &a * harmonic_like_exact(&a, n - 1) + ratio(1, n as i64);
            assert_eq!(lhs, rhs, "a = {a}, n = {n}");
        }
    }
}

#[test]
fn classical_specialization() {
    let mut classical = ExactRational::zero();
    for n in 1..=30 {
        classical += ratio(1, n as i64);
        assert_eq!(harmonic_like_exact(&ratio(1, 1), n), classical);
    }
    assert_eq!(harmonic_like_exact(&ratio(1, 1), 4), ratio(25, 12));
}

#[test]
fn eq2_equals_exact_sum() {
    for n in 1..=30 {
        assert_eq!(
            integral_eq2_exact(n).unwrap(),
            harmonic_like_exact(&ratio(1, 2), n),
            "n = {n}"
        );
    }
}

#[test]
fn quadrature_agrees_with_direct() {
    for a in [0.1, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0] {
        for n in 0..=20u32 {
            let got = integral_eq1(a, n, min_nodes(n) + 1).unwrap();
            let want = harmonic_like_direct(ComplexScalar::new(a, 0.0), n)
                .unwrap()
                .re;
            assert!(
                (got - want).abs() <= 1e-10 * (1.0 + want.abs()),
                "a = {a}, n = {n}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn quadrature_matches_exact_for_rational_a() {
    for (num, den) in [(1, 3), (3, 4), (5, 2), (-1, 2)] {
        let a = ratio(num, den);
        for n in 1..=16 {
            let got = integral_eq1(num as f64 / den as f64, n, min_nodes(n)).unwrap();
            let want = exact_f64(&power_sum(&a, n));
            assert!((got - want).abs() <= 1e-11 * (1.0 + want.abs()), "{a}, {n}");
        }
    }
}

#[test]
fn half_matches_exact_rational() {
    let half = ratio(1, 2);
    for n in 0..=60u32 {
        let want = exact_f64(&harmonic_like_exact(&half, n));
        assert!((harmonic_half(n as u64) - want).abs() <= 4.0 * f64::EPSILON * want);
    }
}

#[test]
fn half_large_n_is_stable() {
    let big = harmonic_half(1_000_000);
    assert!(big.is_finite() && big > 0.0);
    let gaps: Vec<f64> = [1_000u64, 10_000, 100_000]
        .iter()
        .map(|&n| (n as f64 * harmonic_half(n) - 2.0).abs())
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

fn complex_in(radius: f64) -> impl Strategy<Value = ComplexScalar> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| ComplexScalar::from_polar(r, t))
}

proptest! {
    #[test]
    fn first_value_is_one(a in complex_in(10.0)) {
        prop_assert_eq!(harmonic_like_direct(a, 1).unwrap(), ComplexScalar::new(1.0, 0.0));
        prop_assert_eq!(harmonic_like_sequence(a, 1).unwrap()[0], ComplexScalar::new(1.0, 0.0));
    }

    #[test]
    fn sequence_agrees_with_direct(a in complex_in(2.0), n_max in 1u32..=40) {
        let seq = harmonic_like_sequence(a, n_max).unwrap();
        prop_assert_eq!(seq.len(), n_max as usize);
        for (k, h) in seq.iter().enumerate() {
            let n = k as u32 + 1;
            let direct = harmonic_like_direct(a, n).unwrap();
            let scale = (1..=n)
                .map(|p| a.norm().powi((n - p) as i32) / p as f64)
                .fold(0.0, f64::max);
            prop_assert!((direct - h).norm() <= 1e-13 * (1.0 + scale));
        }
    }

    #[test]
    fn direct_tracks_exact_for_dyadic_a(num in -64i64..=64, n in 1u32..=30) {
        // a = num/32 is exact in binary
        let a = ratio(num, 32);
        let exact = exact_f64(&power_sum(&a, n));
        let got = harmonic_like_direct(ComplexScalar::new(num as f64 / 32.0, 0.0), n).unwrap();
        let scale: f64 = (1..=n).map(|p| (num.abs() as f64 / 32.0).powi((n - p) as i32) / p as f64).sum();
        prop_assert!((got.re - exact).abs() <= 1e-14 * (1.0 + scale));
    }
}
