use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::quadrature::{integrate_halfline, QuadratureRule, DEFAULT_TOL};
use super::state::{normalize, tower_level, x_max_for, TowerBasis};
use crate::error::{Error, Result};
use crate::exactfn::highprec;
use crate::par;
use crate::susy::{LadderName, SusyModel};

fn factorial_ratio(hi: i64, lo: i64) -> BigInt {
    // hi! / lo!
    ((lo + 1)..=hi).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact `a²_{5+6i}`, the squared matrix element `⟨5+6i-6|C̃|5+6i⟩`:
/// `2⁶ (11+6i) (4+6i)!/(6i-1)! · (8+6i)(9+6i)(10+6i) / ((2+6i)(3+6i)(4+6i))`.
pub fn ladder_coefficient_squared(i: u32) -> BigRational {
    assert!(i >= 1, "tower index starts at 1");
    let s = 6 * i as i64;
    let num = BigInt::from(64)
        * BigInt::from(11 + s)
        * factorial_ratio(4 + s, s - 1)
        * BigInt::from((8 + s) * (9 + s) * (10 + s));
    let den = BigInt::from((2 + s) * (3 + s) * (4 + s));
    BigRational::new(num, den)
}

pub fn ladder_coefficient_closed(i: u32) -> f64 {
    ladder_coefficient_squared(i).to_f64().expect("finite").sqrt()
}

/// `⟨ψ_{ν-6}| C̃ |ψ_ν⟩`, `ν = 5 + 6i`, by half-line quadrature.
///
/// `C̃ ψ_ν` is formed exactly from the explicit sixth-order operator and
/// evaluated at each node with exact rational arithmetic.
pub fn ladder_coefficient_quadrature(model: &SusyModel, i: u32) -> Result<f64> {
    matrix_element(model, LadderName::CTilde, tower_level(i as usize), tower_level(i as usize - 1))
}

/// `⟨ψ_target| l |ψ_source⟩` for two normalized half-line states.
pub fn matrix_element(model: &SusyModel, name: LadderName, source: i64, target: i64) -> Result<f64> {
    let src = normalize(model, source)?;
    let tgt = normalize(model, target)?;
    let op = model.ladder(name);
    let image = op.apply(&src.exact_form());
    let scale = src.log_scale().exp();
    let rule = QuadratureRule::halfline(x_max_for(source.max(target)), DEFAULT_TOL);
    let bits = 128;
    let f = |x: f64| -> f64 {
        let hp = highprec::from_f64(x, bits);
        let v = highprec::evaluate_with(&image, &hp, bits).map(|v| highprec::to_f64(&v));
        match v {
            Ok(v) => scale * v * tgt.eval(x),
            Err(_) => f64::NAN,
        }
    };
    let (nodes, weights) = rule.points();
    let vals = par::map(&nodes, |&x| f(x));
    let coarse: f64 = vals.iter().zip(&weights).map(|(v, w)| v * w).sum();
    let (fnodes, fweights) = rule.refined().points();
    let fvals = par::map(&fnodes, |&x| f(x));
    let fine: f64 = fvals.iter().zip(&fweights).map(|(v, w)| v * w).sum();
    if !fine.is_finite() || (fine - coarse).abs() > 1e-10 * fine.abs().max(1.0) {
        return Err(Error::Quadrature(format!(
            "matrix element {source} -> {target}: {coarse} vs {fine}"
        )));
    }
    Ok(fine)
}

/// Position and momentum matrix elements in the tower basis.
#[derive(Clone, Debug, Serialize)]
pub struct MomentTables {
    pub mx: Vec<Vec<f64>>,
    pub mx2: Vec<Vec<f64>>,
    /// `-i ∫ ψ_{k₁} ψ_{k₂}'`: purely imaginary, antisymmetric.
    pub mp: Vec<Vec<Complex64>>,
    /// `∫ ψ_{k₁}' ψ_{k₂}'`.
    pub mp2: Vec<Vec<f64>>,
    /// `a_{5+6i}` for `i = 1..K` (closed form).
    pub a_coeffs: Vec<f64>,
}

pub fn moment_tables(basis: &TowerBasis) -> MomentTables {
    let k = basis.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
    let entries = par::map(&pairs, |&(a, b)| {
        let (va, vb) = (&basis.values[a], &basis.values[b]);
        let x = basis.inner(va, vb, |x| x);
        let x2 = basis.inner(va, vb, |x| x * x);
        let p = basis.inner(va, &basis.slopes[b], |_| 1.0);
        let p2 = basis.inner(&basis.slopes[a], &basis.slopes[b], |_| 1.0);
        (x, x2, p, p2)
    });
    let grid = |f: &dyn Fn(&(f64, f64, f64, f64)) -> f64| -> Vec<Vec<f64>> {
        (0..k).map(|a| (0..k).map(|b| f(&entries[a * k + b])).collect()).collect()
    };
    MomentTables {
        mx: grid(&|e| e.0),
        mx2: grid(&|e| e.1),
        mp: (0..k)
            .map(|a| (0..k).map(|b| Complex64::new(0.0, -entries[a * k + b].2)).collect())
            .collect(),
        mp2: grid(&|e| e.3),
        a_coeffs: (1..k as u32).map(ladder_coefficient_closed).collect(),
    }
}

impl MomentTables {
    pub fn len(&self) -> usize {
        self.mx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mx.is_empty()
    }

    /// `max |Mp - Mp†|`.
    pub fn momentum_hermiticity_residual(&self) -> f64 {
        let k = self.len();
        let mut worst = 0.0f64;
        for a in 0..k {
            for b in 0..k {
                worst = worst.max((self.mp[a][b] - self.mp[b][a].conj()).norm());
            }
        }
        worst
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// `∫ ψ (-ψ'' + V ψ) dx = ∫ ψ'² + V ψ²` for a tower state.
pub fn energy_expectation_of_state(model: &SusyModel, basis: &TowerBasis, k: usize) -> f64 {
    let v = model.partner.potential().to_f64();
    basis.inner(&basis.values[k], &basis.values[k], |x| v.eval(x))
        + basis.inner(&basis.slopes[k], &basis.slopes[k], |_| 1.0)
}

/// Closed-form radicand as an integer when it is one.
pub fn ladder_coefficient_integer(i: u32) -> Option<BigInt> {
    let r = ladder_coefficient_squared(i);
    r.is_integer().then(|| r.to_integer())
}

/// `∫₀^∞ |ψ_ν|²` recomputed on an independent rule (sanity hook for callers).
pub fn norm_check(model: &SusyModel, nu: i64) -> Result<f64> {
    let s = normalize(model, nu)?;
    integrate_halfline(|x| s.eval(x).powi(2), &QuadratureRule::halfline(x_max_for(nu) + 2.0, DEFAULT_TOL))
}
