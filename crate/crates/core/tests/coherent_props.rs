use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;
use proptest::prelude::*;
use susyosc::coherent::oracle::PrecisionSums;
use susyosc::coherent::{
    beamsplitter_pmf, cat_coefficients, cat_norm, distinguishability, energy_expectation, make_coherent, mandel_q,
    mean_number, CoherentState, Parity, SpatialBasis,
};
use susyosc::susy::SusyModel;

fn basis12() -> &'static SpatialBasis {
    static B: OnceLock<SpatialBasis> = OnceLock::new();
    B.get_or_init(|| SpatialBasis::new(&SusyModel::standard(), 12).unwrap())
}

fn abs_z() -> impl Strategy<Value = f64> {
    prop_oneof![0.0..10.0f64, 10.0..1e3f64, 1e3..1e5f64]
}

fn wrap(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    r.min(TAU - r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficients_are_normalized_eigenvectors(r in abs_z(), arg in -PI..PI) {
        let z = Complex64::from_polar(r, arg);
        let s = make_coherent(z).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        prop_assert!(s.eigen_residual() < 1e-10);
        if r > 0.0 {
            for (k, a) in s.alpha.iter().enumerate() {
                prop_assert!(wrap(a.phase - k as f64 * arg) < 1e-9);
            }
        }
    }

    #[test]
    fn beamsplitter_conditionals_are_binomial(r in 1.0..1e5f64) {
        let s = make_coherent(Complex64::new(r, 0.0)).unwrap();
        let pmf = beamsplitter_pmf(&s, 12);
        for n in 0..=12usize {
            if (0..=n).all(|n1| pmf.get(n1, n - n1) == 0.0) {
                continue;
            }
            let mut b = 1.0;
            for (n1, c) in pmf.conditional(n).iter().enumerate() {
                prop_assert!((c - b / 2f64.powi(n as i32)).abs() < 1e-12);
                b = b * (n - n1) as f64 / (n1 + 1) as f64;
            }
        }
    }

    #[test]
    fn overlap_is_bounded(r in abs_z()) {
        let d = distinguishability(&make_coherent(Complex64::new(r, 0.0)).unwrap());
        prop_assert!((-1.0..=1.0).contains(&d));
    }

    #[test]
    fn energy_grows_with_modulus(a in abs_z(), b in abs_z()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let e = |r: f64| energy_expectation(&make_coherent(Complex64::new(r, 0.0)).unwrap());
        prop_assert!(e(hi) >= e(lo) - 1e-12);
    }

    #[test]
    fn cat_components_have_disjoint_support(r in abs_z()) {
        let s = make_coherent(Complex64::new(r, 0.0)).unwrap();
        let even = cat_coefficients(&s, Parity::Even);
        let odd = cat_coefficients(&s, Parity::Odd);
        for (k, (e, o)) in even.iter().zip(&odd).enumerate() {
            prop_assert!(e.norm() * o.norm() == 0.0);
            let other = if k % 2 == 0 { o } else { e };
            prop_assert_eq!(other.norm(), 0.0);
        }
        prop_assert!((cat_norm(&s, Parity::Even) + cat_norm(&s, Parity::Odd) - 2.0).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn doubling_precision_leaves_observables_unchanged(r in abs_z()) {
        let z = Complex64::new(r, 0.0);
        let s = make_coherent(z).unwrap();
        let lo = PrecisionSums::new(z, s.k_terms, 128);
        let hi = PrecisionSums::new(z, s.k_terms, 256);
        let pairs = [
            (lo.mean_number(), hi.mean_number(), mean_number(&s)),
            (lo.distinguishability(), hi.distinguishability(), distinguishability(&s)),
            (lo.mandel_q(), hi.mandel_q(), mandel_q(&s)),
        ];
        for (a, b, f) in pairs {
            prop_assert!((a - b).abs() <= 1e-30_f64.max(1e-30 * b.abs()));
            prop_assert!((f - b).abs() <= 1e-8 * b.abs().max(1.0), "f64 {} vs oracle {}", f, b);
        }
    }

    #[test]
    fn density_is_periodic(r in abs_z(), x in 0.05..6.0f64, t in 0.0..1.0f64) {
        let s = CoherentState::with_truncation(Complex64::new(r, 0.0), 12).unwrap();
        let b = basis12();
        let r0 = b.density(&s, x, t).unwrap();
        let r1 = b.density(&s, x, t + PI / 6.0).unwrap();
        prop_assert!((r0 - r1).abs() <= 1e-12 * r0.abs().max(1.0));
    }

    #[test]
    fn wigner_is_real_and_confined(r in 0.0..1e4f64, x in -3.0..4.0f64, p in -5.0..5.0f64) {
        let s = CoherentState::with_truncation(Complex64::new(r, 0.0), 12).unwrap();
        let b = basis12();
        let w = b.wigner(&s, x, p).unwrap();
        prop_assert!(w.is_finite());
        if x <= 0.0 {
            prop_assert_eq!(w, 0.0);
        } else {
            let slice = b.wigner_slice(&s.coefficients(), x, p.abs() + 1.0).unwrap();
            let v = slice.eval(p);
            prop_assert!(v.im.abs() <= 1e-12 * v.re.abs().max(1.0));
        }
    }
}
