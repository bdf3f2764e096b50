use num_complex::Complex64;
use serde::Serialize;

use super::state::CoherentState;
use crate::hilbert::MomentTables;

/// Energy spacing of the `C̃` tower.
pub const TOWER_SPACING: f64 = 12.0;
/// Default `κ` and `r` cutoffs of the entropy sums.
pub const ENTROPY_CUTOFF: usize = 10;
/// Default photon-number cutoff of the beamsplitter table.
pub const DEFAULT_NMAX: usize = 20;

/// `⟨N⟩` with `N|5+6k⟩ = k|5+6k⟩`.
pub fn mean_number(s: &CoherentState) -> f64 {
    s.weights().iter().enumerate().map(|(k, w)| k as f64 * w).sum()
}

/// `⟨N²⟩`.
pub fn mean_number_squared(s: &CoherentState) -> f64 {
    s.weights().iter().enumerate().map(|(k, w)| (k * k) as f64 * w).sum()
}

/// `⟨E⟩ = 11 + 12 ⟨N⟩`.
pub fn energy_expectation(s: &CoherentState) -> f64 {
    (2 * s.mu + 1) as f64 + TOWER_SPACING * mean_number(s)
}

/// Overlap `⟨-z|+z⟩ = Σ (-1)^k |α_k|²`.
pub fn distinguishability(s: &CoherentState) -> f64 {
    s.weights()
        .iter()
        .enumerate()
        .map(|(k, w)| if k % 2 == 0 { *w } else { -w })
        .sum()
}

/// `Q = (ΔN² - ⟨N⟩) / ⟨N⟩ = (⟨N(N-1)⟩ - ⟨N⟩²) / ⟨N⟩`, zero at `z = 0`.
pub fn mandel_q(s: &CoherentState) -> f64 {
    let n = mean_number(s);
    if n == 0.0 {
        return 0.0;
    }
    let factorial: f64 = s
        .weights()
        .iter()
        .enumerate()
        .map(|(k, w)| (k * k.saturating_sub(1)) as f64 * w)
        .sum();
    (factorial - n * n) / n
}

fn log_binomial(n: usize, r: usize) -> f64 {
    let lf = |m: usize| (1..=m).map(|i| (i as f64).ln()).sum::<f64>();
    lf(n) - lf(r) - lf(n - r)
}

/// Joint photon-number distribution behind a 50:50 beamsplitter.
#[derive(Clone, Debug, Serialize)]
pub struct BeamsplitterPmf {
    pub z: Complex64,
    pub n_max: usize,
    /// `table[n1][n2]`.
    pub table: Vec<Vec<f64>>,
    /// `Σ_{n1+n2 > n_max} ...` bounded by the weight beyond total `n_max`.
    pub tail_bound: f64,
}

impl BeamsplitterPmf {
    pub fn get(&self, n1: usize, n2: usize) -> f64 {
        self.table[n1][n2]
    }

    pub fn total(&self) -> f64 {
        self.table.iter().flatten().sum()
    }

    /// `P(n1, n - n1) / Σ_m P(m, n - m)` for `n <= n_max`.
    pub fn conditional(&self, n: usize) -> Vec<f64> {
        let row: Vec<f64> = (0..=n).map(|n1| self.table[n1][n - n1]).collect();
        let sum: f64 = row.iter().sum();
        row.into_iter().map(|p| if sum > 0.0 { p / sum } else { 0.0 }).collect()
    }

    /// `P(1,1) P(0,0) - P(1,0) P(0,1)`.
    pub fn factorization_defect(&self) -> f64 {
        self.get(1, 1) * self.get(0, 0) - self.get(1, 0) * self.get(0, 1)
    }
}

pub fn beamsplitter_pmf(s: &CoherentState, n_max: usize) -> BeamsplitterPmf {
    let alpha = &s.alpha;
    let ln2 = std::f64::consts::LN_2;
    let entry = |n1: usize, n2: usize| -> f64 {
        let n = n1 + n2;
        match alpha.get(n) {
            Some(a) if a.log_mag.is_finite() => {
                (2.0 * a.log_mag + log_binomial(n, n1) - n as f64 * ln2).exp()
            }
            _ => 0.0,
        }
    };
    let table = (0..=n_max).map(|n1| (0..=n_max).map(|n2| entry(n1, n2)).collect()).collect();
    let w = s.weights();
    let tail_bound = w.iter().skip(n_max + 1).fold(0.0, |a, b| a + b);
    BeamsplitterPmf {
        z: s.z,
        n_max,
        table,
        tail_bound,
    }
}

/// `G(k, r) = α_k 2^{-k/2} C(k, r)^{1/2}`.
fn g_coefficient(s: &CoherentState, k: usize, r: usize) -> Complex64 {
    if r > k {
        return Complex64::new(0.0, 0.0);
    }
    match s.alpha.get(k) {
        Some(a) if a.log_mag.is_finite() => {
            let lm = a.log_mag - 0.5 * k as f64 * std::f64::consts::LN_2 + 0.5 * log_binomial(k, r);
            Complex64::from_polar(lm.exp(), a.phase)
        }
        _ => Complex64::new(0.0, 0.0),
    }
}

/// `S = 1 - Σ_{r₁,r₂ ≤ r_cut} |M(r₁, r₂)|²`,
/// `M(r₁, r₂) = Σ_{κ ≤ κ_cut} G(κ+r₁, r₁) G*(κ+r₂, r₂)`.
pub fn linear_entropy_with(s: &CoherentState, kappa_cut: usize, r_cut: usize) -> f64 {
    let g: Vec<Vec<Complex64>> = (0..=kappa_cut)
        .map(|kappa| (0..=r_cut).map(|r| g_coefficient(s, kappa + r, r)).collect())
        .collect();
    let mut purity = 0.0;
    for r1 in 0..=r_cut {
        for r2 in 0..=r_cut {
            let m: Complex64 = g.iter().map(|row| row[r1] * row[r2].conj()).sum();
            purity += m.norm_sqr();
        }
    }
    1.0 - purity
}

pub fn linear_entropy(s: &CoherentState) -> f64 {
    linear_entropy_with(s, ENTROPY_CUTOFF, ENTROPY_CUTOFF)
}

/// Entropy at the default cutoffs and at doubled cutoffs.
pub fn linear_entropy_convergence(s: &CoherentState) -> (f64, f64) {
    (
        linear_entropy(s),
        linear_entropy_with(s, 2 * ENTROPY_CUTOFF, 2 * ENTROPY_CUTOFF),
    )
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Uncertainties {
    pub mean_x: f64,
    pub mean_x2: f64,
    pub mean_p: f64,
    pub mean_p2: f64,
    pub sigma_x: f64,
    pub sigma_p: f64,
}

impl Uncertainties {
    pub fn product(&self) -> f64 {
        self.sigma_x * self.sigma_p
    }
}

/// Second moments from the tabulated matrix elements, using the first
/// `tables.len()` coefficients of `s`.
pub fn uncertainties(s: &CoherentState, tables: &MomentTables) -> Uncertainties {
    let c = s.coefficients();
    let k = c.len().min(tables.len());
    let mut x = Complex64::new(0.0, 0.0);
    let mut x2 = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(0.0, 0.0);
    let mut p2 = Complex64::new(0.0, 0.0);
    for a in 0..k {
        for b in 0..k {
            let w = c[a].conj() * c[b];
            x += w * tables.mx[a][b];
            x2 += w * tables.mx2[a][b];
            p += w * tables.mp[a][b];
            p2 += w * tables.mp2[a][b];
        }
    }
    Uncertainties {
        mean_x: x.re,
        mean_x2: x2.re,
        mean_p: p.re,
        mean_p2: p2.re,
        sigma_x: (x2.re - x.re * x.re).max(0.0).sqrt(),
        sigma_p: (p2.re - p.re * p.re).max(0.0).sqrt(),
    }
}
