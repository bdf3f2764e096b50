use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on `[-1, 1]`, ascending.
pub fn legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let rule = GaussLegendre::new(NonZeroUsize::new(order).expect("order >= 1"));
    let mut pairs: Vec<(f64, f64)> = rule.as_node_weight_pairs().to_vec();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

#[derive(Clone, Debug)]
pub struct Panel {
    pub a: f64,
    pub b: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Composite Gauss–Legendre rule on `[lo, x_max]`.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub panels: Vec<Panel>,
    pub x_max: f64,
    pub target_tol: f64,
    order: usize,
}

pub const DEFAULT_X_MAX: f64 = 15.0;
pub const DEFAULT_PANEL_WIDTH: f64 = 0.5;
pub const DEFAULT_ORDER: usize = 32;
pub const DEFAULT_TOL: f64 = 1e-12;

impl QuadratureRule {
    pub fn composite(lo: f64, hi: f64, n_panels: usize, order: usize, target_tol: f64) -> Self {
        assert!(hi > lo && n_panels >= 1);
        let (t, w) = legendre(order);
        let h = (hi - lo) / n_panels as f64;
        let panels = (0..n_panels)
            .map(|i| {
                let a = lo + i as f64 * h;
                let b = if i + 1 == n_panels { hi } else { a + h };
                let (c, s) = (0.5 * (a + b), 0.5 * (b - a));
                Panel {
                    a,
                    b,
                    nodes: t.iter().map(|&u| c + s * u).collect(),
                    weights: w.iter().map(|&v| s * v).collect(),
                }
            })
            .collect();
        QuadratureRule {
            panels,
            x_max: hi,
            target_tol,
            order,
        }
    }

    /// `[0, x_max]` with panels of width about `0.5`.
    pub fn halfline(x_max: f64, target_tol: f64) -> Self {
        let n = (x_max / DEFAULT_PANEL_WIDTH).ceil().max(1.0) as usize;
        Self::composite(0.0, x_max, n, DEFAULT_ORDER, target_tol)
    }

    pub fn standard() -> Self {
        Self::halfline(DEFAULT_X_MAX, DEFAULT_TOL)
    }

    pub fn lower(&self) -> f64 {
        self.panels[0].a
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Every panel bisected.
    pub fn refined(&self) -> Self {
        Self::composite(
            self.lower(),
            self.x_max,
            2 * self.panels.len(),
            self.order,
            self.target_tol,
        )
    }

    pub fn len(&self) -> usize {
        self.panels.len() * self.order
    }

    pub fn is_empty(&self) -> bool {
        self.panels.is_empty()
    }

    /// Flattened `(nodes, weights)`.
    pub fn points(&self) -> (Vec<f64>, Vec<f64>) {
        let nodes = self.panels.iter().flat_map(|p| p.nodes.iter().copied()).collect();
        let weights = self.panels.iter().flat_map(|p| p.weights.iter().copied()).collect();
        (nodes, weights)
    }

    /// Plain rule application, no error control.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.panels
            .iter()
            .map(|p| p.nodes.iter().zip(&p.weights).map(|(&x, &w)| w * f(x)).sum::<f64>())
            .sum()
    }
}

/// `∫₀^∞ f` for integrands with an `e^{-x²}` envelope.
///
/// The rule and its bisection must agree, and the tail past `x_max`
/// (estimated as `|f(x_max)| / (2 x_max - 1)`) must be negligible, both
/// relative to `target_tol · max(1, |I|)`.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule) -> Result<f64> {
    let coarse = rule.apply(&f);
    let fine = rule.refined().apply(&f);
    let tail = f(rule.x_max).abs() / (2.0 * rule.x_max - 1.0).max(1.0);
    let scale = fine.abs().max(1.0);
    let err = (fine - coarse).abs() + tail;
    if !fine.is_finite() || err > rule.target_tol * scale {
        return Err(Error::Quadrature(format!(
            "refinement difference {:.3e}, tail {:.3e}, tolerance {:.3e}",
            (fine - coarse).abs(),
            tail,
            rule.target_tol * scale
        )));
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gaussian_moments() {
        let rule = QuadratureRule::standard();
        let i0 = integrate_halfline(|x| (-x * x).exp(), &rule).unwrap();
        assert!((i0 / (PI.sqrt() / 2.0) - 1.0).abs() < 1e-14);
        let i2 = integrate_halfline(|x| 4.0 * x * x * (-x * x).exp(), &rule).unwrap();
        assert!((i2 - PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn slow_tail_is_rejected() {
        let rule = QuadratureRule::halfline(3.0, 1e-12);
        assert!(matches!(
            integrate_halfline(|x| (-x).exp(), &rule),
            Err(Error::Quadrature(_))
        ));
    }

    #[test]
    fn legendre_nodes_are_sorted_and_sum_to_two() {
        let (t, w) = legendre(16);
        assert!(t.windows(2).all(|p| p[0] < p[1]));
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }
}
