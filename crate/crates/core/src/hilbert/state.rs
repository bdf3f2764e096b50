use serde::Serialize;

use super::basis::{log_hermite_norm, CombinationEval, HermiteCombination};
use super::quadrature::{integrate_halfline, QuadratureRule, DEFAULT_TOL, DEFAULT_X_MAX};
use crate::error::{Error, Result};
use crate::exactfn::GaussRational;
use crate::par;
use crate::susy::SusyModel;

/// Lowest level of the `C̃` tower.
pub const TOWER_BASE: i64 = 5;
/// Index spacing of the `C̃` tower.
pub const TOWER_STEP: i64 = 6;

pub fn tower_level(k: usize) -> i64 {
    TOWER_BASE + TOWER_STEP * k as i64
}

/// Integration cutoff for level `nu`: the classical turning point plus seven
/// units, never below 15.
pub fn x_max_for(nu: i64) -> f64 {
    DEFAULT_X_MAX.max((2.0 * nu.max(0) as f64 + 1.0).sqrt() + 7.0)
}

/// Unit-norm partner state on the half line.
#[derive(Clone, Debug)]
pub struct NormalizedState {
    pub nu: i64,
    /// Position in the tower `ν = 5 + 6k`, when `ν` belongs to it.
    pub k_index: Option<usize>,
    /// `(∫₀^∞ R² dx)^{1/2}` for the sign-fixed representation `R`.
    pub norm_constant: f64,
    /// Sign-fixed representation `R = r₀ h_n + r₁ h_n'`.
    pub combination: HermiteCombination,
    value: CombinationEval,
    slope: CombinationEval,
}

impl NormalizedState {
    pub fn energy(&self) -> f64 {
        (2 * self.nu + 1) as f64
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.value.eval(x)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.slope.eval(x)
    }

    /// Exact form `G` with `ψ = e^{log_scale()} G`.
    pub fn exact_form(&self) -> GaussRational {
        self.combination.to_gauss_rational()
    }

    pub fn log_scale(&self) -> f64 {
        log_hermite_norm(self.combination.n) - self.norm_constant.ln()
    }
}

/// Representation of the partner state `ν` with the exact sign convention
/// (highest-degree numerator coefficient positive).
pub fn representation(model: &SusyModel, nu: i64) -> Result<HermiteCombination> {
    let comb = if nu >= 0 {
        HermiteCombination::oscillator(nu as usize).apply_product(&model.adding.composite())
    } else {
        let s = model.state(nu)?;
        HermiteCombination {
            n: 0,
            r0: s.wavefunction.rat,
            r1: crate::exactfn::RationalFunction::zero(),
        }
    };
    if comb.is_zero() {
        return Err(Error::NoSuchLevel(nu));
    }
    Ok(if comb.to_gauss_rational().leading_sign() < 0 {
        HermiteCombination {
            n: comb.n,
            r0: -&comb.r0,
            r1: -&comb.r1,
        }
    } else {
        comb
    })
}

/// Normalized half-line state `ν`; only levels vanishing at the origin qualify.
pub fn normalize(model: &SusyModel, nu: i64) -> Result<NormalizedState> {
    if nu.rem_euclid(2) != 1 {
        return Err(Error::InvalidArgument(format!(
            "level {nu} does not vanish at the origin"
        )));
    }
    let comb = representation(model, nu)?;
    let raw = comb.to_f64();
    let rule = QuadratureRule::halfline(x_max_for(nu), DEFAULT_TOL);
    let norm2 = integrate_halfline(|x| raw.eval(x).powi(2), &rule)?;
    let norm_constant = norm2.sqrt();
    let value = raw.scaled(1.0 / norm_constant);
    let slope = comb.derivative().to_f64().scaled(1.0 / norm_constant);
    let k_index = (nu >= TOWER_BASE && (nu - TOWER_BASE) % TOWER_STEP == 0)
        .then(|| ((nu - TOWER_BASE) / TOWER_STEP) as usize);
    Ok(NormalizedState {
        nu,
        k_index,
        norm_constant,
        combination: comb,
        value,
        slope,
    })
}

/// Tower states `ψ_{5+6k}`, `k = 0..K`, with values and slopes tabulated on a
/// shared half-line rule.
#[derive(Clone, Debug)]
pub struct TowerBasis {
    pub states: Vec<NormalizedState>,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// `values[k][j] = ψ_k(nodes[j])`.
    pub values: Vec<Vec<f64>>,
    pub slopes: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizationRecord {
    pub k: usize,
    pub nu: i64,
    pub energy: f64,
    pub norm_constant: f64,
}

impl TowerBasis {
    pub fn new(model: &SusyModel, k_max: usize) -> Result<Self> {
        if k_max == 0 {
            return Err(Error::InvalidArgument("basis size must be at least 1".into()));
        }
        let levels: Vec<i64> = (0..k_max).map(tower_level).collect();
        let states = par::map(&levels, |&nu| normalize(model, nu))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let rule = QuadratureRule::halfline(x_max_for(*levels.last().expect("non-empty")), DEFAULT_TOL).refined();
        let (nodes, weights) = rule.points();
        let values = par::map(&states, |s| nodes.iter().map(|&x| s.eval(x)).collect());
        let slopes = par::map(&states, |s| nodes.iter().map(|&x| s.derivative(x)).collect());
        Ok(TowerBasis {
            states,
            nodes,
            weights,
            values,
            slopes,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// `∫ f(x) a_j b_j` over the tabulated rule.
    pub fn inner<F: Fn(f64) -> f64>(&self, a: &[f64], b: &[f64], f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .zip(a.iter().zip(b))
            .map(|((&x, &w), (&u, &v))| w * f(x) * u * v)
            .sum()
    }

    pub fn overlap(&self, k1: usize, k2: usize) -> f64 {
        self.inner(&self.values[k1], &self.values[k2], |_| 1.0)
    }

    pub fn normalization_records(&self) -> Vec<NormalizationRecord> {
        self.states
            .iter()
            .enumerate()
            .map(|(k, s)| NormalizationRecord {
                k,
                nu: s.nu,
                energy: s.energy(),
                norm_constant: s.norm_constant,
            })
            .collect()
    }
}
