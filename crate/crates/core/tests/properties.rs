//! Property tests over sampled parameter boxes.

use darboux::exp_potential::{exact_spectrum, SectorSpec};
use darboux::specfun::{
    bessel_derivative, bessel_i, bessel_j, bessel_k, bessel_y, erf, gamma, hankel1, hankel2,
    kummer_1f1, BesselKind,
};
use darboux::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn erf_is_odd(x in -5.5f64..5.5) {
        prop_assert_eq!(erf(-x), -erf(x));
    }

    #[test]
    fn kummer_transformation(a in -1.5f64..2.5, b in 0.3f64..3.0, x in 0.0f64..12.0) {
        // 1F1(a, b, x) = e^x 1F1(b-a, b, -x)
        let lhs = kummer_1f1(a, b, x).unwrap();
        let rhs = x.exp() * kummer_1f1(b - a, b, -x).unwrap();
        let scale = lhs.abs().max(rhs.abs()).max(1e-6);
        prop_assert!((lhs - rhs).abs() / scale < 1e-9, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn gamma_reflection(re in -4.0f64..4.0, im in -4.0f64..4.0) {
        let z = c(re, im);
        // Stay off the poles and their immediate neighbourhood.
        prop_assume!(z.im.abs() > 1e-3 || (z.re - z.re.round()).abs() > 1e-2);
        let lhs = gamma(z).unwrap() * gamma(c(1.0, 0.0) - z).unwrap() * (PI * z).sin() / PI;
        prop_assert!((lhs - c(1.0, 0.0)).norm() < 1e-10, "z={} -> {}", z, lhs);
    }

    #[test]
    fn hankel_pair_reconstructs_j(nu in 0.0f64..3.0, re in -20.0f64..20.0, im in -6.0f64..6.0) {
        let z = c(re, im);
        prop_assume!(z.norm() > 0.3);
        prop_assume!(!(z.im == 0.0 && z.re < 0.0));
        let lhs = hankel1(nu, z).unwrap() + hankel2(nu, z).unwrap();
        let rhs = bessel_j(nu, z).unwrap() * 2.0;
        let scale = lhs.norm().max(rhs.norm()).max(1e-30);
        prop_assert!((lhs - rhs).norm() / scale < 1e-8, "nu={} z={}", nu, z);
    }

    #[test]
    fn bessel_wronskian_ik(nu in 0.0f64..2.5, re in 0.5f64..22.0, im in -6.0f64..6.0) {
        // I K' - I' K = -1/z. The exponential growths of I and K cancel in
        // the product, so the identity is resolvable over the whole box.
        let z = c(re, im);
        let ik = bessel_i(nu, z).unwrap() * bessel_derivative(BesselKind::K, nu, z).unwrap()
            - bessel_derivative(BesselKind::I, nu, z).unwrap() * bessel_k(nu, z).unwrap();
        let w1 = -z.inv();
        prop_assert!((ik - w1).norm() / w1.norm() < 1e-8, "IK at nu={} z={}: {}", nu, z, ik);
    }

    #[test]
    fn bessel_wronskian_jy(nu in 0.0f64..2.5, re in 0.5f64..22.0, im in -3.5f64..3.5) {
        // J Y' - J' Y = 2/(pi z). Here |J|,|Y| ~ e^{|Im z|} while the
        // Wronskian is O(1/z), so the identity's f64 floor grows like
        // e^{2 |Im z|}; |Im z| <= 3.5 keeps it below the 1e-8 tolerance.
        let z = c(re, im);
        let jy = bessel_j(nu, z).unwrap() * bessel_derivative(BesselKind::Y, nu, z).unwrap()
            - bessel_derivative(BesselKind::J, nu, z).unwrap() * bessel_y(nu, z).unwrap();
        let w2 = 2.0 / (PI * z);
        prop_assert!((jy - w2).norm() / w2.norm() < 1e-8, "JY at nu={} z={}: {}", nu, z, jy);
    }

    #[test]
    fn quantization_sets_agree_across_parity(l in 1u32..6, count in 1usize..30) {
        // m = 2l and m = 2l + 1 produce identical spectra.
        let even = exact_spectrum(SectorSpec::new(2 * l).unwrap(), count);
        let odd = exact_spectrum(SectorSpec::new(2 * l + 1).unwrap(), count);
        prop_assert_eq!(even, odd);
    }

    #[test]
    fn quantization_excludes_integer_orders(m in 2u32..9, count in 1usize..40) {
        let q = exact_spectrum(SectorSpec::new(m).unwrap(), count);
        for nu in &q.nu_exact {
            prop_assert!(!nu.is_integer());
        }
        // Energies strictly increasing.
        for w in q.energies.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }
}
