use super::moments::{energy_expectation_of_state, ladder_coefficient_closed, ladder_coefficient_quadrature, moment_tables};
use super::state::TowerBasis;
use crate::error::Result;
use crate::susy::{CheckRecord, SusyModel};

/// Tolerance on overlaps and energies of the normalized tower.
pub const BASIS_TOL: f64 = 1e-10;
/// Relative tolerance of the closed-form vs quadrature ladder coefficients.
pub const LADDER_TOL: f64 = 1e-8;

/// Numeric cross-checks: orthonormality and energies of the first `k_basis`
/// tower states, `a_{5+6i}` closed form vs quadrature for `i = 1..=ladder_max`,
/// and Hermiticity of the momentum table.
pub fn verify_numerics(model: &SusyModel, k_basis: usize, ladder_max: u32) -> Result<Vec<CheckRecord>> {
    let basis = TowerBasis::new(model, k_basis)?;
    let mut out = Vec::new();
    for a in 0..basis.len() {
        let nu = basis.states[a].nu;
        let mut worst = 0.0f64;
        for b in 0..basis.len() {
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((basis.overlap(a, b) - target).abs());
        }
        out.push(CheckRecord::new(
            "orthonormality",
            None,
            Some(nu),
            worst < BASIS_TOL,
            format!("max deviation {worst:.3e}"),
        ));
        let e = energy_expectation_of_state(model, &basis, a);
        let rel = (e - basis.states[a].energy()).abs() / basis.states[a].energy();
        out.push(CheckRecord::new(
            "energy-expectation",
            None,
            Some(nu),
            rel < BASIS_TOL,
            format!("<H> = {e:.15e}, relative deviation {rel:.3e}"),
        ));
    }
    let tables = moment_tables(&basis);
    let herm = tables.momentum_hermiticity_residual();
    out.push(CheckRecord::new(
        "momentum-hermiticity",
        None,
        None,
        herm < BASIS_TOL,
        format!("max |Mp - Mp^dagger| {herm:.3e}"),
    ));
    for i in 1..=ladder_max {
        let closed = ladder_coefficient_closed(i);
        let quad = ladder_coefficient_quadrature(model, i)?;
        let rel = (quad.abs() - closed).abs() / closed;
        out.push(CheckRecord::new(
            "ladder-coefficient",
            None,
            Some(5 + 6 * i as i64),
            rel < LADDER_TOL,
            format!("closed {closed:.15e}, quadrature {quad:.15e}, relative {rel:.3e}"),
        ));
    }
    Ok(out)
}
