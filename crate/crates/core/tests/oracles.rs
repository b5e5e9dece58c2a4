//! Extended-precision oracles versus the library implementations. The
//! frozen literals in the other test targets were produced by these oracles;
//! this target re-derives them on every run.

mod common;

use common::{bessel_i_series_oracle, erf_oracle, gamma_oracle, kummer_oracle};
use darboux::specfun::{bessel_i, bessel_k, erf, gamma, hermite_h, kummer_1f1, BesselKind};
use darboux::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn gamma_oracle_self_checks() {
    // Gamma(1/2)^2 = pi, Gamma(5) = 24, recurrence at a generic point.
    assert!((gamma_oracle(0.5).powi(2) - std::f64::consts::PI).abs() < 1e-14);
    assert!((gamma_oracle(5.0) - 24.0).abs() < 1e-13);
    let x = 1.3731;
    assert!((gamma_oracle(x + 1.0) - x * gamma_oracle(x)).abs() < 1e-13 * gamma_oracle(x + 1.0));
}

#[test]
fn gamma_against_oracle() {
    for &x in &[0.25, 0.5, 0.75, 1.0, 1.5, 3.25, 7.9, 15.5, 29.5] {
        let got = gamma(c(x, 0.0)).unwrap().re;
        let want = gamma_oracle(x);
        assert!(
            (got - want).abs() <= 1e-12 * want.abs(),
            "gamma({x}): {got} vs oracle {want}"
        );
    }
}

#[test]
fn gamma_ratio_feeds_the_critical_bound() {
    // 2 Gamma(3/4) / Gamma(1/4) must equal beta_c(0) computed downstream.
    let ratio = 2.0 * gamma_oracle(0.75) / gamma_oracle(0.25);
    assert!((ratio - 0.675_978_240_067_284_7).abs() < 1e-14);
    let bc = darboux::harmonic::beta_c(0.0).unwrap();
    assert!((bc - ratio).abs() <= 1e-12 * ratio);
}

#[test]
fn erf_against_oracle() {
    // Frozen reference: erf(1) = 0.8427007929497149 from the dd Taylor
    // oracle.
    assert!((erf_oracle(1.0) - 0.842_700_792_949_714_9).abs() < 1e-15);
    for &x in &[0.1, 0.5, 1.0, 1.7, 2.4, 3.0, 3.3, 4.2] {
        let got = erf(x);
        let want = erf_oracle(x);
        assert!(
            (got - want).abs() <= 1e-13,
            "erf({x}): {got} vs oracle {want}"
        );
    }
}

#[test]
fn kummer_against_oracle() {
    // Frozen reference: 1F1(1, 3/2, 1) = 2.030078469278705 from the dd
    // series oracle.
    assert!((kummer_oracle(1.0, 1.5, 1.0) - 2.030_078_469_278_705).abs() < 1e-14);
    for &(a, b, x) in &[
        (1.0, 1.5, 1.0),
        (0.25, 0.5, 4.0),
        (1.75, 2.5, 9.0),
        (0.75, 0.5, 20.25),
        (0.05, 1.5, 28.0),
    ] {
        let got = kummer_1f1(a, b, x).unwrap();
        let want = kummer_oracle(a, b, x);
        assert!(
            (got - want).abs() <= 1e-11 * want.abs(),
            "1F1({a},{b},{x}): {got} vs oracle {want}"
        );
    }
}

#[test]
fn hermite_against_integer_expansion() {
    // H_4 coefficients by exact integer recurrence: 16 x^4 - 48 x^2 + 12.
    // At integer arguments both evaluation orders are exact; H_4(1) = -20.
    assert_eq!(hermite_h(4, 1.0).unwrap(), -20.0);
    assert_eq!(hermite_h(4, -2.0).unwrap(), 76.0);
    let h4 = |x: f64| 16.0 * x.powi(4) - 48.0 * x * x + 12.0;
    for &x in &[0.3, 1.7, -0.9] {
        let got = hermite_h(4, x).unwrap();
        assert!((got - h4(x)).abs() <= 1e-14 * h4(x).abs().max(1.0));
    }
}

#[test]
fn bessel_i_against_dd_series() {
    // The frozen reference point (1/4, 2+i) plus a spread of series-regime
    // arguments.
    let want = bessel_i_series_oracle(0.25, c(2.0, 1.0));
    assert!(
        (want - c(1.533_874_521_206_098_3, 1.409_434_587_984_972)).norm() < 1e-13,
        "oracle drifted: {want}"
    );
    for &(nu, re, im) in &[
        (0.25, 2.0, 1.0),
        (0.25, -3.0, 0.5),
        (1.5, 5.0, -4.0),
        (0.75, 0.1, 0.0),
        (2.0, 8.0, 8.0),
    ] {
        let z = c(re, im);
        let got = bessel_i(nu, z).unwrap();
        let want = bessel_i_series_oracle(nu, z);
        assert!(
            (got - want).norm() <= 1e-11 * want.norm(),
            "I({nu}, {z}): {got} vs oracle {want}"
        );
    }
}

#[test]
fn bessel_k_reference_point_dual_route() {
    // K(1/4, 2+i): the reflection route through the dd I-series oracle
    // against the library value (which uses a continued fraction here) —
    // two unrelated algorithms.
    let nu = 0.25;
    let z = c(2.0, 1.0);
    let want = (bessel_i_series_oracle(-nu, z) - bessel_i_series_oracle(nu, z))
        * (std::f64::consts::PI / 2.0)
        / (nu * std::f64::consts::PI).sin();
    let got = bessel_k(nu, z).unwrap();
    assert!(
        (got - want).norm() <= 1e-10 * want.norm(),
        "K(1/4, 2+i): {got} vs oracle {want}"
    );
    assert!((got - c(0.037_929_013_030_114_33, -0.103_009_526_220_987_81)).norm() < 1e-11);
}

#[test]
fn bessel_derivative_against_central_difference_oracle() {
    // Reference point (1/4, 1+i) to 1e-6.
    let (nu, z, h) = (0.25, c(1.0, 1.0), 1e-5);
    for kind in [BesselKind::I, BesselKind::K] {
        let f = |w: Complex64| match kind {
            BesselKind::I => bessel_i(nu, w).unwrap(),
            _ => bessel_k(nu, w).unwrap(),
        };
        let fd = (f(z + c(h, 0.0)) - f(z - c(h, 0.0))) / (2.0 * h);
        let got = darboux::specfun::bessel_derivative(kind, nu, z).unwrap();
        assert!(
            (got - fd).norm() < 1e-6 * got.norm().max(1.0),
            "{kind:?}: {got} vs {fd}"
        );
    }
}
