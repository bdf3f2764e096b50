//! Half-line Wigner transforms.
//!
//! For functions supported on `x >= 0` the transform at `x > 0` is
//! `(1/π) ∫_{-x}^{x} f*(x-y) g(x+y) e^{-2ipy} dy`, and zero for `x <= 0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::legendre;
use super::state::NormalizedState;

const NODES_PER_PANEL: usize = 16;

/// `y`-quadrature of the Wigner integral at fixed `x`, reusable for many `p`.
#[derive(Clone, Debug)]
pub struct WignerSlice {
    pub x: f64,
    ys: Vec<f64>,
    /// `f*(x-y) g(x+y) w / π` at each node.
    samples: Vec<Complex64>,
}

impl WignerSlice {
    /// `omega` bounds the spatial frequency of `f` and `g`; the rule resolves
    /// `e^{-2ipy}` for `|p| <= p_max`.
    pub fn new<F, G>(x: f64, f: F, g: G, p_max: f64, omega: f64) -> Self
    where
        F: Fn(f64) -> Complex64,
        G: Fn(f64) -> Complex64,
    {
        if x <= 0.0 {
            return WignerSlice {
                x,
                ys: Vec::new(),
                samples: Vec::new(),
            };
        }
        let freq = 2.0 * p_max.abs() + 2.0 * omega;
        let width = (4.0 * PI / freq).min(0.25);
        let panels = ((2.0 * x) / width).ceil().max(1.0) as usize;
        let h = 2.0 * x / panels as f64;
        let (t, w) = legendre(NODES_PER_PANEL);
        let mut ys = Vec::with_capacity(panels * NODES_PER_PANEL);
        let mut samples = Vec::with_capacity(panels * NODES_PER_PANEL);
        for i in 0..panels {
            let c = -x + (i as f64 + 0.5) * h;
            for (&u, &v) in t.iter().zip(&w) {
                let y = c + 0.5 * h * u;
                let weight = 0.5 * h * v / PI;
                ys.push(y);
                samples.push(f(x - y).conj() * g(x + y) * weight);
            }
        }
        WignerSlice { x, ys, samples }
    }

    pub fn eval(&self, p: f64) -> Complex64 {
        self.ys
            .iter()
            .zip(&self.samples)
            .map(|(&y, &s)| s * Complex64::from_polar(1.0, -2.0 * p * y))
            .sum()
    }

    /// `∫_{-p_max}^{p_max} Re W(x, p) dp`, using the closed form
    /// `∫ e^{-2ipy} dp = sin(2 p_max y) / y` on each node. The slice must have
    /// been built for at least `p_max`.
    pub fn momentum_marginal(&self, p_max: f64) -> f64 {
        self.ys
            .iter()
            .zip(&self.samples)
            .map(|(&y, s)| {
                let k = if y == 0.0 { 2.0 * p_max } else { (2.0 * p_max * y).sin() / y };
                s.re * k
            })
            .sum()
    }
}

/// Sine integral `Si(t)` for `t >= 0`: power series below 2, complex
/// continued fraction for `E₁(it)` above.
pub fn sine_integral(t: f64) -> f64 {
    if t <= 2.0 {
        let mut term = t;
        let mut sum = t;
        let mut n = 0.0;
        loop {
            n += 1.0;
            term *= -t * t / ((2.0 * n) * (2.0 * n + 1.0));
            let add = term / (2.0 * n + 1.0);
            sum += add;
            if add.abs() < 1e-17 * sum.abs() {
                return sum;
            }
        }
    }
    let mut b = Complex64::new(1.0, t);
    let mut c = Complex64::new(1e300, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..200 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(t.cos(), -t.sin());
    0.5 * PI + h.im
}

/// `∫_{|p| > p_max} W dp` from the first two wall terms of the large-`|p|`
/// expansion, for a pair vanishing at `x = 0` with regular curvature there.
///
/// With `s = Re(f*'(0) g(2x))` and `u = Re(f*'(0) g'(2x))` the `±p` sum of `W`
/// behaves as `(-s cos(2px)/p² + u sin(2px)/p³) / π`.
pub fn marginal_tail(s: f64, u: f64, x: f64, p_max: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let a = 2.0 * x;
    let t = a * p_max;
    let i2 = t.cos() / p_max - a * (0.5 * PI - sine_integral(t));
    let i3 = t.sin() / (2.0 * p_max * p_max) + 0.5 * a * i2;
    (-s * i2 + u * i3) / PI
}

/// `w_{k₁k₂}(x, p)` for two normalized half-line states.
pub fn wigner_kernel(a: &NormalizedState, b: &NormalizedState, x: f64, p: f64) -> Complex64 {
    if x <= 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let omega = (2.0 * a.nu.max(b.nu) as f64 + 1.0).sqrt() + 1.0;
    let ev = |s: &NormalizedState, t: f64| Complex64::new(if t > 0.0 { s.eval(t) } else { 0.0 }, 0.0);
    WignerSlice::new(x, |t| ev(a, t), |t| ev(b, t), p, omega).eval(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_integral_values() {
        assert!((sine_integral(1.0) - 0.946_083_070_367_183).abs() < 1e-14);
        assert!((sine_integral(5.0) - 1.549_931_244_944_674).abs() < 1e-14);
        assert!((sine_integral(20.0) - 1.548_241_701_043_44).abs() < 1e-13);
        assert!((sine_integral(400.0) - 0.5 * PI).abs() < 3e-3);
    }

    #[test]
    fn nonpositive_x_gives_empty_slice() {
        let s = WignerSlice::new(-0.3, |_| Complex64::new(1.0, 0.0), |_| Complex64::new(1.0, 0.0), 5.0, 1.0);
        assert_eq!(s.eval(0.7), Complex64::new(0.0, 0.0));
        assert_eq!(s.momentum_marginal(5.0), 0.0);
    }
}
