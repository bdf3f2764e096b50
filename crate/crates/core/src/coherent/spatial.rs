use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::Serialize;

use super::observables::{distinguishability, TOWER_SPACING};
use super::state::CoherentState;
use crate::error::{Error, Result};
use crate::hilbert::state::x_max_for;
use crate::hilbert::{marginal_tail, QuadratureRule, TowerBasis, WignerSlice};
use crate::par;
use crate::susy::SusyModel;

/// Parity of a cat state `(|+z⟩ ± |-z⟩)/√2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// Cat-state expansion coefficients in the tower basis.
pub fn cat_coefficients(s: &CoherentState, parity: Parity) -> Vec<Complex64> {
    let keep = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    s.coefficients()
        .into_iter()
        .enumerate()
        .map(|(k, a)| {
            if k % 2 == keep {
                a * (2.0 * FRAC_1_SQRT_2)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect()
}

/// Exact squared norm `1 ± D(z)` of the `1/√2` cat combination.
pub fn cat_norm(s: &CoherentState, parity: Parity) -> f64 {
    1.0 + parity.sign() * distinguishability(s)
}

/// `c_k e^{-12ikt}`.
pub fn evolve(coeffs: &[Complex64], t: f64) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * Complex64::from_polar(1.0, -TOWER_SPACING * k as f64 * t))
        .collect()
}

/// Tower basis used to put coherent superpositions on the half line.
#[derive(Clone, Debug)]
pub struct SpatialBasis {
    pub tower: TowerBasis,
}

impl SpatialBasis {
    pub fn new(model: &SusyModel, k_terms: usize) -> Result<Self> {
        Ok(SpatialBasis {
            tower: TowerBasis::new(model, k_terms)?,
        })
    }

    pub fn len(&self) -> usize {
        self.tower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tower.is_empty()
    }

    fn check(&self, coeffs: &[Complex64]) -> Result<()> {
        if coeffs.len() > self.len() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients but only {} basis states",
                coeffs.len(),
                self.len()
            )));
        }
        Ok(())
    }

    /// `Σ c_k ψ_{5+6k}(x)`, zero for `x <= 0`.
    pub fn amplitude(&self, coeffs: &[Complex64], x: f64) -> Complex64 {
        if x <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        coeffs
            .iter()
            .zip(&self.tower.states)
            .map(|(c, s)| c * s.eval(x))
            .sum()
    }

    /// `|Σ c_k e^{-12ikt} ψ_k(x)|²`.
    pub fn density_of(&self, coeffs: &[Complex64], x: f64, t: f64) -> Result<f64> {
        self.check(coeffs)?;
        Ok(self.amplitude(&evolve(coeffs, t), x).norm_sqr())
    }

    pub fn density(&self, s: &CoherentState, x: f64, t: f64) -> Result<f64> {
        self.density_of(&s.coefficients(), x, t)
    }

    pub fn cat_density(&self, s: &CoherentState, parity: Parity, x: f64, t: f64) -> Result<f64> {
        self.density_of(&cat_coefficients(s, parity), x, t)
    }

    /// `∫₀^∞ ρ(x, t) dx` on the tabulated rule of the basis.
    pub fn density_norm_of(&self, coeffs: &[Complex64], t: f64) -> Result<f64> {
        self.check(coeffs)?;
        let c = evolve(coeffs, t);
        let tw = &self.tower;
        Ok(tw
            .weights
            .iter()
            .enumerate()
            .map(|(j, w)| {
                let amp: Complex64 = c.iter().zip(&tw.values).map(|(c, v)| c * v[j]).sum();
                w * amp.norm_sqr()
            })
            .sum())
    }

    pub fn density_norm(&self, s: &CoherentState, t: f64) -> Result<f64> {
        self.density_norm_of(&s.coefficients(), t)
    }

    /// Upper bound on the spatial frequency of the retained states.
    fn omega(&self, k_terms: usize) -> f64 {
        let nu = self.tower.states[k_terms.max(1) - 1].nu;
        (2.0 * nu as f64 + 1.0).sqrt() + 1.0
    }

    /// Wigner quadrature at fixed `x` for `Φ = Σ c_k ψ_k`, resolving `|p| <= p_max`.
    pub fn wigner_slice(&self, coeffs: &[Complex64], x: f64, p_max: f64) -> Result<WignerSlice> {
        self.check(coeffs)?;
        let phi = |y: f64| self.amplitude(coeffs, y);
        Ok(WignerSlice::new(x, phi, phi, p_max, self.omega(coeffs.len())))
    }

    /// `W(x, p) = Σ α*_{k₁} w_{k₁k₂}(x, p) α_{k₂}` over the retained terms of `s`.
    pub fn wigner(&self, s: &CoherentState, x: f64, p: f64) -> Result<f64> {
        Ok(self.wigner_slice(&s.coefficients(), x, p)?.eval(p).re)
    }

    /// Momentum cutoff of the marginal integrals.
    pub fn momentum_cutoff(&self, s: &CoherentState) -> f64 {
        (4.0 * self.omega(s.k_terms)).max(64.0)
    }

    /// `Σ c_k ψ_k'(x)`.
    pub fn slope(&self, coeffs: &[Complex64], x: f64) -> Complex64 {
        coeffs
            .iter()
            .zip(&self.tower.states)
            .map(|(c, s)| c * s.derivative(x))
            .sum()
    }

    /// `Σ c_k ψ_k'(0)`.
    pub fn wall_slope(&self, coeffs: &[Complex64]) -> Complex64 {
        coeffs
            .iter()
            .zip(&self.tower.states)
            .map(|(c, s)| c * s.derivative(0.0))
            .sum()
    }

    /// `∫ W(x, p) dp`: trapezoid sum up to the cutoff plus the leading tail.
    pub fn wigner_marginal(&self, s: &CoherentState, x: f64) -> Result<f64> {
        let p_max = self.momentum_cutoff(s);
        let c = s.coefficients();
        let body = self.wigner_slice(&c, x, p_max)?.momentum_marginal(p_max);
        let w0 = self.wall_slope(&c).conj();
        let s_term = (w0 * self.amplitude(&c, 2.0 * x)).re;
        let u_term = (w0 * self.slope(&c, 2.0 * x)).re;
        Ok(body + marginal_tail(s_term, u_term, x, p_max))
    }

    /// `∫∫ W dx dp`, integrating the momentum marginal over the half line.
    pub fn wigner_normalization(&self, s: &CoherentState) -> Result<f64> {
        let x_max = x_max_for(self.tower.states[s.k_terms.max(1) - 1].nu);
        let panels = (x_max / 0.5).ceil() as usize;
        let (nodes, weights) = QuadratureRule::composite(0.0, x_max, panels, 16, 1e-10).points();
        let vals = par::map(&nodes, |&x| self.wigner_marginal(s, x));
        let mut total = 0.0;
        for (v, w) in vals.into_iter().zip(weights) {
            total += v? * w;
        }
        Ok(total)
    }
}
