use std::f64::consts::PI;

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde_json::json;
use susyosc::coherent::oracle::PrecisionSums;
use susyosc::coherent::{
    beamsplitter_pmf, cat_norm, denominator_squared, distinguishability, energy_expectation, linear_entropy_with,
    make_coherent, mandel_q, uncertainties, CoherentState, Parity, SpatialBasis,
};
use susyosc::exactfn::highprec;
use susyosc::hilbert::{moment_tables, TowerBasis};
use susyosc::par;
use susyosc::susy::SusyModel;

use crate::dataset::{Cell, Dataset};
use crate::grid::Grid;
use crate::RunConfig;

pub const FIGURES: [&str; 9] = ["fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11"];

/// Reference truncations: densities sum to `k = 11`, moments to `k = 6`.
const DENSITY_TERMS: usize = 12;
const MOMENT_TERMS: usize = 7;
const WIGNER_REFERENCE_TERMS: usize = 1;
const PROBE: (f64, f64) = (1.9, 0.8);

fn z_of(cfg: &RunConfig, default_abs: f64) -> Complex64 {
    Complex64::from_polar(cfg.z_abs.unwrap_or(default_abs), cfg.z_arg_deg.to_radians())
}

/// `0` followed by a geometric sweep `1..1e5`.
fn default_abs_z() -> Vec<f64> {
    std::iter::once(0.0).chain(Grid::geometric(1.0, 1e5, 49).points()).collect()
}

fn z_sweep(cfg: &RunConfig, default: Vec<f64>) -> Vec<f64> {
    cfg.grid_z.as_ref().map_or(default, Grid::points)
}

fn real_z(a: f64) -> Complex64 {
    Complex64::new(a, 0.0)
}

fn states(zs: &[f64]) -> Result<Vec<CoherentState>> {
    par::map(zs, |&a| make_coherent(real_z(a)))
        .into_iter()
        .collect::<susyosc::Result<Vec<_>>>()
        .context("building coherent states")
}

pub fn run(name: &str, cfg: &RunConfig) -> Result<Dataset> {
    match name {
        "fig3" => fig3(cfg),
        "fig4" => fig4(cfg),
        "fig5" => fig5(cfg),
        "fig6" => fig6(cfg),
        "fig7" => fig7(cfg),
        "fig8" => fig8(cfg),
        "fig9" => fig9(cfg),
        "fig10" => fig10(cfg),
        "fig11" => fig11(cfg),
        other => bail!("unknown figure `{other}` (expected one of {})", FIGURES.join(", ")),
    }
}

fn scalar_sweep(name: &str, column: &str, cfg: &RunConfig, f: fn(&CoherentState) -> f64) -> Result<Dataset> {
    let zs = z_sweep(cfg, default_abs_z());
    let mut d = Dataset::new(name, &["abs_z", column]);
    for (a, s) in zs.iter().zip(states(&zs)?) {
        d.push(vec![(*a).into(), f(&s).into()]);
    }
    Ok(d)
}

fn fig3(cfg: &RunConfig) -> Result<Dataset> {
    let mut d = scalar_sweep("fig3", "energy", cfg, energy_expectation)?;
    let zs = z_sweep(cfg, default_abs_z());
    let bits = highprec::precision_bits();
    let last = *zs.last().expect("non-empty grid");
    let s = make_coherent(real_z(last))?;
    d.note("oracle_energy_at_last", PrecisionSums::new(real_z(last), s.k_terms, bits).energy());
    d.note("precision_bits", bits);
    Ok(d)
}

fn fig5(cfg: &RunConfig) -> Result<Dataset> {
    scalar_sweep("fig5", "distinguishability", cfg, distinguishability)
}

fn fig11(cfg: &RunConfig) -> Result<Dataset> {
    scalar_sweep("fig11", "mandel_q", cfg, mandel_q)
}

fn fig9(cfg: &RunConfig) -> Result<Dataset> {
    let zs = z_sweep(cfg, default_abs_z());
    let cut = cfg.entropy_cutoff;
    let mut d = Dataset::new("fig9", &["abs_z", "linear_entropy", "linear_entropy_doubled_cutoffs"]);
    for (a, s) in zs.iter().zip(states(&zs)?) {
        d.push(vec![
            (*a).into(),
            linear_entropy_with(&s, cut, cut).into(),
            linear_entropy_with(&s, 2 * cut, 2 * cut).into(),
        ]);
    }
    d.note("cutoff", cut);
    Ok(d)
}

fn fig10(cfg: &RunConfig) -> Result<Dataset> {
    let zs = z_sweep(cfg, Grid::linear(0.0, 2e4, 40).points());
    let k = cfg.trunc_k.unwrap_or(MOMENT_TERMS);
    let model = SusyModel::standard();
    let tables = moment_tables(&TowerBasis::new(&model, k)?);
    let mut d = Dataset::new("fig10", &["z", "sigma_x", "sigma_p", "product"]);
    for (a, s) in zs.iter().zip(states(&zs)?) {
        let u = uncertainties(&s, &tables);
        d.push(vec![(*a).into(), u.sigma_x.into(), u.sigma_p.into(), u.product().into()]);
    }
    d.note("moment_terms", k);
    Ok(d)
}

fn time_grid(cfg: &RunConfig) -> Vec<f64> {
    cfg.grid_t.clone().unwrap_or(Grid::linear(0.0, PI / 6.0, 61)).points()
}

fn fig4(cfg: &RunConfig) -> Result<Dataset> {
    let z = z_of(cfg, 1e5);
    let k = cfg.trunc_k.unwrap_or(DENSITY_TERMS);
    let s = CoherentState::with_truncation(z, k)?;
    let basis = SpatialBasis::new(&SusyModel::standard(), k)?;
    let xs = cfg.grid_x.clone().unwrap_or(Grid::linear(0.0, 8.0, 161)).points();
    let ts = time_grid(cfg);
    let c = s.coefficients();
    let rows = par::map(&ts, |&t| -> susyosc::Result<Vec<Vec<Cell>>> {
        xs.iter()
            .map(|&x| Ok(vec![x.into(), t.into(), basis.density_of(&c, x, t)?.into()]))
            .collect()
    });
    let mut d = Dataset::new("fig4", &["x", "t", "density"]);
    for r in rows {
        for row in r? {
            d.push(row);
        }
    }
    d.note("terms", k);
    d.note("retained_weight", s.norm_sqr());
    d.note("norm_at_t0", basis.density_norm(&s, 0.0)?);
    Ok(d)
}

fn fig6(cfg: &RunConfig) -> Result<Dataset> {
    let z = z_of(cfg, 1e5);
    let k = cfg.trunc_k.unwrap_or(DENSITY_TERMS);
    let s = CoherentState::with_truncation(z, k)?;
    let basis = SpatialBasis::new(&SusyModel::standard(), k)?;
    let xs = cfg.grid_x.clone().unwrap_or(Grid::linear(0.0, 8.0, 161)).points();
    let ts = time_grid(cfg);
    let rows = par::map(&ts, |&t| -> susyosc::Result<Vec<Vec<Cell>>> {
        xs.iter()
            .map(|&x| {
                Ok(vec![
                    x.into(),
                    t.into(),
                    basis.cat_density(&s, Parity::Even, x, t)?.into(),
                    basis.cat_density(&s, Parity::Odd, x, t)?.into(),
                ])
            })
            .collect()
    });
    let mut d = Dataset::new("fig6", &["x", "t", "density_even", "density_odd"]);
    for r in rows {
        for row in r? {
            d.push(row);
        }
    }
    let full = make_coherent(z)?;
    d.note("terms", k);
    d.note("exact_norm_even", cat_norm(&full, Parity::Even));
    d.note("exact_norm_odd", cat_norm(&full, Parity::Odd));
    Ok(d)
}

fn fig7(cfg: &RunConfig) -> Result<Dataset> {
    let z = z_of(cfg, 500.0);
    let full = make_coherent(z)?;
    let reference_state = full.truncated(cfg.trunc_kw.unwrap_or(WIGNER_REFERENCE_TERMS).min(full.k_terms));
    let basis = SpatialBasis::new(&SusyModel::standard(), full.k_terms)?;
    let xs = cfg.grid_x.clone().unwrap_or(Grid::linear(0.0, 6.0, 61)).points();
    let pg = cfg.grid_p.clone().unwrap_or(Grid::linear(-4.0, 4.0, 81));
    let ps = pg.points();
    let (cp, cf) = (reference_state.coefficients(), full.coefficients());
    let rows = par::map(&xs, |&x| -> susyosc::Result<Vec<Vec<Cell>>> {
        let sp = basis.wigner_slice(&cp, x, pg.max_abs())?;
        let sf = basis.wigner_slice(&cf, x, pg.max_abs())?;
        Ok(ps
            .iter()
            .map(|&p| vec![x.into(), p.into(), sp.eval(p).re.into(), sf.eval(p).re.into()])
            .collect())
    });
    let mut d = Dataset::new("fig7", &["x", "p", "wigner_reference_truncation", "wigner_converged"]);
    for r in rows {
        for row in r? {
            d.push(row);
        }
    }
    d.note("reference_terms", reference_state.k_terms);
    d.note("converged_terms", full.k_terms);
    d.note(
        "probe",
        json!({
            "x": PROBE.0,
            "p": PROBE.1,
            "reference_truncation": basis.wigner(&reference_state, PROBE.0, PROBE.1)?,
            "converged": basis.wigner(&full, PROBE.0, PROBE.1)?,
        }),
    );
    Ok(d)
}

fn fig8(cfg: &RunConfig) -> Result<Dataset> {
    let z = z_of(cfg, 1e5);
    let s = make_coherent(z)?;
    let pmf = beamsplitter_pmf(&s, cfg.nmax);
    let mut d = Dataset::new("fig8", &["n1", "n2", "probability"]);
    for n1 in 0..=cfg.nmax {
        for n2 in 0..=cfg.nmax {
            d.push(vec![n1.into(), n2.into(), pmf.get(n1, n2).into()]);
        }
    }
    d.note("total", pmf.total());
    d.note("tail_bound", pmf.tail_bound);
    d.note("factorization_defect", pmf.factorization_defect());
    Ok(d)
}

/// `D_k²` exactly and in floating point for `k = 0..=6`.
pub fn tables() -> Dataset {
    let mut d = Dataset::new("tables", &["k", "d_squared_exact", "d_squared"]);
    for k in 0..=6usize {
        let r = denominator_squared(k);
        let v = highprec::to_f64(&highprec::from_rational(&r, 128));
        d.push(vec![k.into(), Cell::Text(r.to_string()), v.into()]);
    }
    d
}
