//! Acceptance criteria, one line each:
//! `criterion NN PASS|FAIL <summary> (<seconds>)`.
//!
//! A criterion listed in `KNOWN_DEVIATIONS` reports FAIL when it fails and
//! does not fail the run, provided its documented explanation still holds.
//! Any other failure, or a known deviation that starts passing, exits nonzero.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use susyosc::coherent::oracle::PrecisionSums;
use susyosc::coherent::{
    beamsplitter_pmf, denominator_squared, distinguishability, energy_expectation, linear_entropy, make_coherent,
    mandel_q, uncertainties, CoherentState, SpatialBasis,
};
use susyosc::hilbert::{ladder_coefficient_closed, ladder_coefficient_quadrature, moment_tables, TowerBasis};
use susyosc::susy::reference;
use susyosc::susy::verify::{
    verify_chain_functions, verify_eigen_identities, verify_heisenberg_algebra, verify_potential,
    verify_zero_modes,
};
use susyosc::susy::{CheckStatus, LadderName, SusyModel};

/// Pinned tolerances.
const D_SQUARED_REL: f64 = 0.05;
const LADDER_REL: f64 = 1e-8;
const WIGNER_PROBE_TOL: f64 = 0.002;
const PMF_TOTAL_TOL: f64 = 1e-10;
const BINOMIAL_TOL: f64 = 1e-12;
const ENTROPY_ZERO_TOL: f64 = 1e-10;
const ENTROPY_TARGET: f64 = 0.2;
const ENTROPY_TOL: f64 = 0.05;
const DIST_AT_1E5: f64 = 0.05;
const COEFF_NORM_TOL: f64 = 1e-12;
const EIGEN_RESIDUAL_TOL: f64 = 1e-10;
const DENSITY_NORM_TOL: f64 = 1e-8;
const WIGNER_MARGINAL_TOL: f64 = 1e-6;

const KNOWN_DEVIATIONS: [u8; 3] = [2, 9, 14];

struct Outcome {
    pass: bool,
    summary: String,
    /// For known deviations: whether the documented explanation still holds.
    explained: Option<bool>,
}

fn outcome(pass: bool, summary: String) -> Outcome {
    Outcome {
        pass,
        summary,
        explained: None,
    }
}

fn real(a: f64) -> Complex64 {
    Complex64::new(a, 0.0)
}

fn abs_z_grid() -> Vec<f64> {
    std::iter::once(0.0)
        .chain((0..49).map(|i| if i == 48 { 1e5 } else { 10f64.powf(5.0 * i as f64 / 48.0) }))
        .collect()
}

fn c01(model: &SusyModel) -> Outcome {
    let t = Instant::now();
    let recs = verify_potential(model);
    let pot = recs.iter().find(|r| r.check == "potential").expect("potential record");
    let ok = pot.status == CheckStatus::Pass;
    let dt = t.elapsed().as_secs_f64();
    outcome(
        ok && dt < 1.0,
        format!("partner potential equals the reference closed form exactly ({}, {dt:.3} s)", pot.residual_description),
    )
}

fn c02(model: &SusyModel) -> Outcome {
    let recs = verify_chain_functions(model);
    let bad: Vec<&str> = recs
        .iter()
        .filter(|r| r.status != CheckStatus::Pass)
        .map(|r| r.check.trim_start_matches("chain-function:"))
        .collect();
    let summary = if bad.is_empty() {
        "Q1..Q4, Q̄4, Q̄5 equal the reference forms".to_string()
    } else {
        format!(
            "reference forms differ for {} (corrected: exact Q2 numerator 8(3+4x⁴), exact Q4 numerator 45+8x⁴(15-8x²+2x⁴))",
            bad.join(", ")
        )
    };
    // The exact chain itself is confirmed by intertwining; the residual
    // mismatch must be exactly the two reference entries that disagree.
    let q2 = &model.adding.q_functions[1];
    let q4 = &model.adding.q_functions[3];
    let q2_num = susyosc::exactfn::Polynomial::from_ints(&[3, 0, 0, 0, 4]);
    let explained = bad == ["Q2", "Q4"]
        && q2.rat.numer().primitive() == q2_num.primitive()
        && q4.rat.numer().primitive() == reference::wronskian_polynomial().primitive();
    Outcome {
        pass: bad.is_empty(),
        summary,
        explained: Some(explained),
    }
}

fn c03(model: &SusyModel) -> Outcome {
    let nus = model.levels(11);
    let states = model.states(&nus).expect("states");
    let recs = verify_eigen_identities(model, &states);
    let ok = recs.len() == nus.len() && recs.iter().all(|r| r.status == CheckStatus::Pass);
    outcome(ok, format!("H ψ_ν = (2ν+1) ψ_ν exactly for {} levels {:?}", recs.len(), nus))
}

fn c04(model: &SusyModel) -> Outcome {
    let nus = model.levels(11);
    let odd = model.truncated_levels(11);
    let states = model.states(&nus).expect("states");
    let mut recs = verify_zero_modes(model, &states, &reference::untruncated_zero_modes(), &nus);
    recs.extend(verify_zero_modes(model, &states, &reference::truncated_zero_modes(), &odd));
    let fails = recs.iter().filter(|r| r.status != CheckStatus::Pass).count();
    outcome(
        fails == 0,
        format!("{} zero-mode table entries and off-table pairs checked, {fails} mismatches", recs.len()),
    )
}

fn c05(model: &SusyModel) -> Outcome {
    let states = model.states(&model.levels(11)).expect("states");
    let mut fails = 0;
    let mut flagged = Vec::new();
    let mut total = 0;
    for name in LadderName::LOWERING {
        let recs = verify_heisenberg_algebra(model, name, &states);
        total += recs.len();
        fails += recs.iter().filter(|r| r.status == CheckStatus::Fail).count();
        if recs.iter().any(|r| r.status == CheckStatus::Flagged) {
            flagged.push(name.symbol());
        }
    }
    outcome(
        fails == 0,
        format!(
            "{total} commutator/structure checks, {fails} failures; reference polynomial flagged for [{}]",
            flagged.join(", ")
        ),
    )
}

fn c06() -> Outcome {
    let expected = reference::DENOMINATOR_SQUARES;
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 1..=3usize {
        let exact = denominator_squared(k);
        let v = num_traits::ToPrimitive::to_f64(&exact).expect("finite");
        let rel = (v - expected[k]).abs() / expected[k];
        ok &= rel <= D_SQUARED_REL;
        let shown = if exact.is_integer() {
            exact.to_integer().to_string()
        } else {
            exact.to_string()
        };
        parts.push(format!("D{k}² = {shown} ({:.1}% off)", 100.0 * rel));
    }
    ok &= denominator_squared(1).to_integer() == BigInt::from(153_538_560u64);
    outcome(ok, parts.join("; "))
}

fn c07(model: &SusyModel) -> Outcome {
    let mut worst = 0.0f64;
    let mut ok = true;
    for i in 1..=5 {
        match ladder_coefficient_quadrature(model, i) {
            Ok(q) => {
                let c = ladder_coefficient_closed(i);
                let rel = (q.abs() - c).abs() / c;
                worst = worst.max(rel);
                ok &= rel < LADDER_REL;
            }
            Err(_) => ok = false,
        }
    }
    outcome(ok, format!("a_(5+6i), i = 1..5: closed form vs quadrature, worst relative {worst:.2e}"))
}

fn c08() -> Outcome {
    let es: Vec<f64> = abs_z_grid()
        .iter()
        .map(|&a| energy_expectation(&make_coherent(real(a)).expect("state")))
        .collect();
    let monotone = es.windows(2).all(|w| w[1] >= w[0]);
    outcome(
        es[0] == 11.0 && monotone,
        format!("<E>(0) = {}, nondecreasing on 50 points up to |z| = 1e5 (last {:.6})", es[0], es[49]),
    )
}

fn c09(model: &SusyModel) -> Outcome {
    let full = make_coherent(real(500.0)).expect("state");
    let reference_state = full.truncated(1);
    let basis = SpatialBasis::new(model, full.k_terms).expect("basis");
    let (x, p) = (1.9, 0.8);
    let w_ref = basis.wigner(&reference_state, x, p).expect("wigner");
    let w_conv = basis.wigner(&full, x, p).expect("wigner");
    let target = reference::WIGNER_PROBE;
    // The reference value matches half of the 1/π-normalized transform; the
    // transform itself is confirmed by its normalization.
    let norm = basis.wigner_normalization(&full).expect("normalization");
    let explained = (0.5 * w_ref - target).abs() <= WIGNER_PROBE_TOL && (norm - 1.0).abs() < WIGNER_MARGINAL_TOL;
    Outcome {
        pass: (w_ref - target).abs() <= WIGNER_PROBE_TOL,
        summary: format!(
            "W(1.9, 0.8; 500) = {w_ref:.5} at k1=k2=0 (reference {target}), converged {w_conv:.5}; ∫∫W = {norm:.8}"
        ),
        explained: Some(explained),
    }
}

fn c10() -> Outcome {
    let s = make_coherent(real(1e5)).expect("state");
    let pmf = beamsplitter_pmf(&s, 20);
    let total_ok = (pmf.total() - 1.0).abs() <= PMF_TOTAL_TOL + pmf.tail_bound;
    let mut worst = 0.0f64;
    let occupied: Vec<usize> = (0..=20usize)
        .filter(|&n| (0..=n).any(|n1| pmf.get(n1, n - n1) > 0.0))
        .collect();
    for &n in &occupied {
        let cond = pmf.conditional(n);
        for (n1, c) in cond.iter().enumerate() {
            let b = binomial(n, n1) / 2f64.powi(n as i32);
            worst = worst.max((c - b).abs());
        }
    }
    let defect = pmf.factorization_defect();
    let nonfactor = defect.abs() > 1e-6 * pmf.get(1, 1) * pmf.get(0, 0);
    outcome(
        total_ok && worst < BINOMIAL_TOL && nonfactor,
        format!(
            "ΣP = {:.15}, tail bound {:.1e}, binomial deviation {worst:.1e} over n = 0..{}, P11·P00 - P10·P01 = {defect:.4e}",
            pmf.total(),
            pmf.tail_bound,
            occupied.last().copied().unwrap_or(0),
        ),
    )
}

fn binomial(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn c11() -> Outcome {
    let s0 = linear_entropy(&make_coherent(real(0.0)).expect("state"));
    let s5 = linear_entropy(&make_coherent(real(1e5)).expect("state"));
    outcome(
        s0.abs() <= ENTROPY_ZERO_TOL && (s5 - ENTROPY_TARGET).abs() <= ENTROPY_TOL,
        format!("S(0) = {s0:.1e}, S(1e5) = {s5:.4} at cutoffs 10"),
    )
}

fn c12(model: &SusyModel) -> Outcome {
    let tables = moment_tables(&TowerBasis::new(model, 7).expect("basis"));
    let mut min = (f64::INFINITY, f64::INFINITY, f64::INFINITY);
    for i in 0..40 {
        let z = 2e4 * i as f64 / 39.0;
        let u = uncertainties(&make_coherent(real(z)).expect("state"), &tables);
        min = (min.0.min(u.sigma_x), min.1.min(u.sigma_p), min.2.min(u.product()));
    }
    outcome(
        min.0 > FRAC_1_SQRT_2 && min.1 > FRAC_1_SQRT_2 && min.2 >= 0.5,
        format!("min σx = {:.4}, min σp = {:.4}, min σxσp = {:.4} on 40 real z up to 2e4", min.0, min.1, min.2),
    )
}

fn c13() -> Outcome {
    let q0 = mandel_q(&make_coherent(real(0.0)).expect("state"));
    let qs: Vec<f64> = (0..50)
        .map(|i| 10f64.powf(5.0 * i as f64 / 49.0))
        .map(|a| mandel_q(&make_coherent(real(a)).expect("state")))
        .collect();
    let max = qs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    outcome(q0 == 0.0 && max < 0.0, format!("Q(0) = {q0}, max Q on 50 points in [1, 1e5] = {max:.3e}"))
}

fn c14() -> Outcome {
    let d = |a: f64| distinguishability(&make_coherent(real(a)).expect("state"));
    let d0 = d(0.0);
    let grid: Vec<f64> = (1..=4000).map(|i| 1e5 * i as f64 / 4000.0).collect();
    let vals: Vec<f64> = grid.iter().map(|&a| d(a)).collect();
    let changes = vals.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    let d_end = d(1e5);
    let oracle = PrecisionSums::new(real(1e5), make_coherent(real(1e5)).expect("state").k_terms, 256).distinguishability();
    let first_two = d0 == 1.0 && changes >= 2;
    Outcome {
        pass: first_two && d_end.abs() < DIST_AT_1E5,
        summary: format!(
            "D(0) = {d0}, {changes} sign changes on (0, 1e5], D(1e5) = {d_end:.5} (256-bit oracle {oracle:.5}, bound 0.05)"
        ),
        explained: Some(first_two && (d_end - oracle).abs() < 1e-12),
    }
}

fn c15(model: &SusyModel) -> Outcome {
    let zs = [0.0, 1.0, 500.0, 1e4, 3e4, 1e5];
    let mut worst_norm = 0.0f64;
    let mut worst_res = 0.0f64;
    for &a in &zs {
        for arg in [0.0, 1.1] {
            let s = make_coherent(Complex64::from_polar(a, arg)).expect("state");
            worst_norm = worst_norm.max((s.norm_sqr() - 1.0).abs());
            worst_res = worst_res.max(s.eigen_residual());
        }
    }
    let basis = SpatialBasis::new(model, 12).expect("basis");
    let mut worst_density = 0.0f64;
    let mut worst_period = 0.0f64;
    for &a in &[0.0, 500.0, 1e5] {
        let s = CoherentState::with_truncation(real(a), 12).expect("state");
        for t in [0.0, 0.1, 0.37] {
            worst_density = worst_density.max((basis.density_norm(&s, t).unwrap() - s.norm_sqr()).abs());
            for x in [0.4, 1.3, 2.9] {
                let r0 = basis.density(&s, x, t).unwrap();
                let r1 = basis.density(&s, x, t + PI / 6.0).unwrap();
                worst_period = worst_period.max((r0 - r1).abs());
            }
        }
    }
    let w = make_coherent(real(500.0)).expect("state");
    let wb = SpatialBasis::new(model, w.k_terms).expect("basis");
    let mut worst_marginal = 0.0f64;
    for x in [0.3, 1.0, 1.9, 3.0] {
        let m = wb.wigner_marginal(&w, x).unwrap();
        worst_marginal = worst_marginal.max((m - wb.density(&w, x, 0.0).unwrap()).abs());
    }
    let norm = wb.wigner_normalization(&w).unwrap();
    let zero_left = wb.wigner(&w, -0.5, 0.3).unwrap() == 0.0;
    let ok = worst_norm < COEFF_NORM_TOL
        && worst_res < EIGEN_RESIDUAL_TOL
        && worst_density < DENSITY_NORM_TOL
        && worst_period < 1e-12
        && worst_marginal < WIGNER_MARGINAL_TOL
        && (norm - 1.0).abs() < WIGNER_MARGINAL_TOL
        && zero_left;
    outcome(
        ok,
        format!(
            "Σ|α|² dev {worst_norm:.1e}, eigen residual {worst_res:.1e}, ∫ρ dev {worst_density:.1e}, \
             period dev {worst_period:.1e}, marginal dev {worst_marginal:.1e}, ∫∫W - 1 = {:.1e}",
            norm - 1.0
        ),
    )
}

fn main() -> ExitCode {
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let model = SusyModel::standard();
    let criteria: Vec<(u8, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(|| c01(&model))),
        (2, Box::new(|| c02(&model))),
        (3, Box::new(|| c03(&model))),
        (4, Box::new(|| c04(&model))),
        (5, Box::new(|| c05(&model))),
        (6, Box::new(c06)),
        (7, Box::new(|| c07(&model))),
        (8, Box::new(c08)),
        (9, Box::new(|| c09(&model))),
        (10, Box::new(c10)),
        (11, Box::new(c11)),
        (12, Box::new(|| c12(&model))),
        (13, Box::new(c13)),
        (14, Box::new(c14)),
        (15, Box::new(|| c15(&model))),
    ];
    let mut passed = 0;
    let mut failed = Vec::new();
    let mut broken = Vec::new();
    for (n, run) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let t = Instant::now();
        let o = run();
        let secs = t.elapsed().as_secs_f64();
        let known = KNOWN_DEVIATIONS.contains(&n);
        println!(
            "criterion {n:02} {} {} ({secs:.2} s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary
        );
        if o.pass {
            passed += 1;
            if known {
                println!("  criterion {n:02} is listed as a known deviation but passed");
                broken.push(n);
            }
        } else {
            failed.push(n);
            if !(known && o.explained == Some(true)) {
                broken.push(n);
            }
        }
    }
    println!(
        "acceptance: {passed} PASS, {} FAIL {:?}; known deviations {:?}",
        failed.len(),
        failed,
        KNOWN_DEVIATIONS
    );
    if broken.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for {broken:?}");
        ExitCode::FAILURE
    }
}
