//! Partner states in the form `r₀(x) h_n(x) + r₁(x) h_n'(x)`, with `h_n` the
//! normalized Hermite function and `r₀, r₁` exact rational functions.
//!
//! First-order operators act on the pair through `h_n'' = (x² - 2n - 1) h_n`,
//! so high-index states never go through a high-degree polynomial in `f64`.

use std::f64::consts::PI;

use crate::exactfn::rational::F64Rational;
use crate::exactfn::{hermite, q, FirstOrderOperator, GaussRational, Polynomial, RationalFunction};

/// `(h_n(x), h_n'(x))` for the normalized Hermite functions
/// `h_n = (2ⁿ n! √π)^{-1/2} H_n e^{-x²/2}`.
pub fn hermite_function(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
    for k in 0..n {
        let next = (2.0 / (k as f64 + 1.0)).sqrt() * x * cur - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    let deriv = (2.0 * n as f64).sqrt() * prev - x * cur;
    (cur, deriv)
}

/// `ln((2ⁿ n! √π)^{-1/2})`.
pub fn log_hermite_norm(n: usize) -> f64 {
    let log_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
    -0.5 * (n as f64 * 2f64.ln() + log_fact + 0.5 * PI.ln())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteCombination {
    pub n: usize,
    pub r0: RationalFunction,
    pub r1: RationalFunction,
}

impl HermiteCombination {
    /// `h_n` itself.
    pub fn oscillator(n: usize) -> Self {
        HermiteCombination {
            n,
            r0: RationalFunction::one(),
            r1: RationalFunction::zero(),
        }
    }

    fn curvature(&self) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::new(vec![
            -q(2 * self.n as i64 + 1),
            q(0),
            q(1),
        ]))
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn derivative(&self) -> Self {
        HermiteCombination {
            n: self.n,
            r0: &self.r0.derivative() + &(&self.r1 * &self.curvature()),
            r1: &self.r0 + &self.r1.derivative(),
        }
    }

    pub fn apply(&self, op: &FirstOrderOperator) -> Self {
        let d = self.derivative();
        let (d0, d1) = if op.derivative_sign < 0 {
            (-&d.r0, -&d.r1)
        } else {
            (d.r0, d.r1)
        };
        HermiteCombination {
            n: self.n,
            r0: &d0 + &(&op.superpotential * &self.r0),
            r1: &d1 + &(&op.superpotential * &self.r1),
        }
    }

    /// Operators written left to right; the last acts first.
    pub fn apply_product(&self, ops: &[FirstOrderOperator]) -> Self {
        ops.iter().rev().fold(self.clone(), |acc, op| acc.apply(op))
    }

    /// Exact `(r₀ H_n + r₁ (H_n' - x H_n)) e^{-x²/2}`, which equals the
    /// represented function divided by the positive constant `e^{log_hermite_norm(n)}`.
    pub fn to_gauss_rational(&self) -> GaussRational {
        let h = RationalFunction::from_poly(hermite(self.n));
        let hd = RationalFunction::from_poly(&hermite(self.n).derivative() - &(&Polynomial::x() * &hermite(self.n)));
        GaussRational::new(&(&self.r0 * &h) + &(&self.r1 * &hd), -1)
    }

    pub fn to_f64(&self) -> CombinationEval {
        CombinationEval {
            n: self.n,
            r0: self.r0.to_f64(),
            r1: self.r1.to_f64(),
            r1_zero: self.r1.is_zero(),
            scale: 1.0,
        }
    }
}

/// Double-precision evaluator of a [`HermiteCombination`] times `scale`.
#[derive(Clone, Debug)]
pub struct CombinationEval {
    pub n: usize,
    pub r0: F64Rational,
    pub r1: F64Rational,
    r1_zero: bool,
    pub scale: f64,
}

impl CombinationEval {
    pub fn eval(&self, x: f64) -> f64 {
        let (h, hd) = hermite_function(self.n, x);
        let mut v = self.r0.eval(x) * h;
        if !self.r1_zero {
            v += self.r1.eval(x) * hd;
        }
        self.scale * v
    }

    pub fn scaled(mut self, c: f64) -> Self {
        self.scale *= c;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfn::{highprec, oscillator_state};

    #[test]
    fn hermite_functions_match_exact_forms() {
        for n in [0usize, 1, 5, 12] {
            let exact = oscillator_state(n);
            let c = log_hermite_norm(n).exp();
            for x in [0.3, 1.7, 4.1] {
                let (h, hd) = hermite_function(n, x);
                let e = c * exact.eval_f64(x);
                let ed = c * exact.differentiate().eval_f64(x);
                assert!((h - e).abs() < 1e-12, "n={n} x={x}");
                assert!((hd - ed).abs() < 1e-11, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn operator_action_matches_exact_route() {
        let a = FirstOrderOperator::annihilator();
        let w = FirstOrderOperator::raising(
            RationalFunction::new(Polynomial::from_ints(&[1, 3]), Polynomial::from_ints(&[2, 0, 1])).unwrap(),
        );
        let comb = HermiteCombination::oscillator(6).apply(&w).apply(&a);
        let exact = a.apply(&w.apply(&oscillator_state(6)));
        assert!(comb.to_gauss_rational().proportionality(&exact) == Some(q(1)));
        let ev = comb.to_f64();
        let c = log_hermite_norm(6).exp();
        for x in [0.25, 2.5] {
            let hp = highprec::evaluate_with(&exact, &highprec::from_f64(x, 128), 128).unwrap();
            assert!((ev.eval(x) - c * highprec::to_f64(&hp)).abs() < 1e-10);
        }
    }
}
