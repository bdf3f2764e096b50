use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::ladder_coefficient_squared;

/// Lowest weight of the `C̃` tower.
pub const LOWEST_WEIGHT: i64 = 5;
/// Relative amplitude below which the series is cut.
pub const TAIL_RATIO: f64 = 1e-16;
/// Upper bound on the adaptive truncation.
pub const DEFAULT_KMAX: usize = 64;

/// Complex number as `exp(log_mag + i phase)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogPolar {
    pub log_mag: f64,
    pub phase: f64,
}

impl LogPolar {
    pub const ZERO: LogPolar = LogPolar {
        log_mag: f64::NEG_INFINITY,
        phase: 0.0,
    };

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.log_mag.exp(), self.phase)
    }

    pub fn norm_sqr(self) -> f64 {
        (2.0 * self.log_mag).exp()
    }
}

/// Exact `D_k² = Π_{i=1}^{k} a²_{5+6i}`.
pub fn denominator_squared(k: usize) -> BigRational {
    (1..=k as u32).fold(BigRational::one(), |acc, i| acc * ladder_coefficient_squared(i))
}

/// `ln D_k`, accumulated factor by factor.
pub fn log_denominators(k_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(k_max + 1);
    let mut acc = 0.0;
    out.push(acc);
    for i in 1..=k_max as u32 {
        let a2 = ladder_coefficient_squared(i).to_f64().expect("finite");
        acc += 0.5 * a2.ln();
        out.push(acc);
    }
    out
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.iter().map(|&x| (x - m).exp()).sum::<f64>().ln()
}

/// Eigenstate `C̃|z⟩ = z|z⟩` of the tower lowering operator,
/// `α_k = z^k / (D_k √F)`.
#[derive(Clone, Debug, Serialize)]
pub struct CoherentState {
    pub mu: i64,
    pub z: Complex64,
    /// Number of retained terms `k = 0..K`.
    pub k_terms: usize,
    pub log_d: Vec<f64>,
    pub alpha: Vec<LogPolar>,
    /// `ln F` over the retained terms.
    pub log_f: f64,
}

/// Log-weights `ln(|z|^{2k} / D_k²)` for `k = 0..n`.
fn log_weights(z: Complex64, log_d: &[f64]) -> Vec<f64> {
    let lz = z.norm().ln();
    log_d
        .iter()
        .enumerate()
        .map(|(k, &ld)| if k == 0 { 0.0 } else { 2.0 * k as f64 * lz - 2.0 * ld })
        .collect()
}

impl CoherentState {
    fn from_log_weights(z: Complex64, log_d: Vec<f64>, lw: Vec<f64>) -> Self {
        let log_f = log_sum_exp(&lw);
        let arg = z.arg();
        let alpha = lw
            .iter()
            .enumerate()
            .map(|(k, &w)| LogPolar {
                log_mag: 0.5 * (w - log_f),
                phase: k as f64 * arg,
            })
            .collect();
        CoherentState {
            mu: LOWEST_WEIGHT,
            z,
            k_terms: log_d.len(),
            log_d,
            alpha,
            log_f,
        }
    }

    /// Truncation chosen so that the first omitted amplitude is below
    /// `1e-16` of the largest one.
    pub fn new(z: Complex64, k_max: usize) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite eigenvalue {z}")));
        }
        if z.norm() == 0.0 {
            return Ok(Self::from_log_weights(z, vec![0.0], vec![0.0]));
        }
        let log_d = log_denominators(k_max);
        let lw = log_weights(z, &log_d);
        let mut best = f64::NEG_INFINITY;
        let cut = TAIL_RATIO.ln() * 2.0;
        for (k, &w) in lw.iter().enumerate() {
            if k > 0 && w < best + cut && w < lw[k - 1] {
                return Ok(Self::from_log_weights(z, log_d[..k].to_vec(), lw[..k].to_vec()));
            }
            best = best.max(w);
        }
        Err(Error::InsufficientTruncation(k_max))
    }

    /// First `k_terms` coefficients of the converged state, not renormalized.
    pub fn with_truncation(z: Complex64, k_terms: usize) -> Result<Self> {
        if k_terms == 0 {
            return Err(Error::InvalidArgument("truncation must keep at least one term".into()));
        }
        let full = Self::new(z, DEFAULT_KMAX.max(k_terms))?;
        Ok(full.truncated(k_terms))
    }

    pub fn truncated(&self, k_terms: usize) -> Self {
        let log_d = log_denominators(k_terms - 1);
        let lw = log_weights(self.z, &log_d);
        let alpha = (0..k_terms)
            .map(|k| {
                if self.z.norm() == 0.0 && k > 0 {
                    LogPolar::ZERO
                } else {
                    LogPolar {
                        log_mag: 0.5 * (lw[k] - self.log_f),
                        phase: k as f64 * self.z.arg(),
                    }
                }
            })
            .collect();
        CoherentState {
            mu: self.mu,
            z: self.z,
            k_terms,
            log_d,
            alpha,
            log_f: self.log_f,
        }
    }

    pub fn coefficients(&self) -> Vec<Complex64> {
        self.alpha.iter().map(|a| a.to_complex()).collect()
    }

    /// `|α_k|²`.
    pub fn weights(&self) -> Vec<f64> {
        self.alpha.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.weights().iter().sum()
    }

    /// `F = Σ |z|^{2k} / D_k²` over the series that fixed the normalization.
    pub fn normalization(&self) -> f64 {
        self.log_f.exp()
    }

    /// `‖C̃|z⟩ - z|z⟩‖ / |z|` from the matrix action `C̃|5+6k⟩ = a_{5+6k}|5+6k-6⟩`,
    /// over the components `k = 0..K-1`.
    pub fn eigen_residual(&self) -> f64 {
        let c = self.coefficients();
        if self.z.norm() == 0.0 {
            return c.iter().skip(1).map(|a| a.norm()).sum();
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for k in 0..c.len().saturating_sub(1) {
            let a = (self.log_d[k + 1] - self.log_d[k]).exp();
            let lhs = c[k + 1] * a;
            let rhs = self.z * c[k];
            num += (lhs - rhs).norm_sqr();
            den += rhs.norm_sqr();
        }
        if den == 0.0 {
            0.0
        } else {
            (num / den).sqrt()
        }
    }
}

/// Adaptive constructor with the default `k_max`.
pub fn make_coherent(z: Complex64) -> Result<CoherentState> {
    CoherentState::new(z, DEFAULT_KMAX)
}
