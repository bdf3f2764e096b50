use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfn::{
    oscillator_state, q, seed_function, wronskian, FirstOrderOperator, GaussRational, Polynomial,
    RationalFunction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainKind {
    /// Darboux–Crum: non-normalizable seeds `φ_m`, levels added below the spectrum.
    StateAdding,
    /// Krein–Adler: consecutive bound states `ψ_k, ψ_{k+1}` deleted.
    StateDeleting,
}

/// One complete SUSY chain: `Q^(i)`, `W^(i) = -(ln Q^(i))'`, `A^(i) = d/dx + W^(i)`.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub kind: ChainKind,
    /// `m_i` for the adding chain, `{k, k+1}` for the deleting chain.
    pub seeds: Vec<i64>,
    pub seed_functions: Vec<GaussRational>,
    /// `𝒲(f_1..f_i)` for `i = 1..len`.
    pub wronskians: Vec<GaussRational>,
    pub q_functions: Vec<GaussRational>,
    pub superpotentials: Vec<RationalFunction>,
    /// `A^(i)` in chain order; the composite operator is `A^(n) ... A^(1)`.
    pub supercharges: Vec<FirstOrderOperator>,
    /// Constant `ΔE` in `V = x² - 2 (ln P)'' + ΔE`, `P` the full Wronskian with
    /// its Gaussian factor removed.
    pub energy_shift: BigRational,
}

/// `-(d/dx) ln f` for `f = r e^{s x²/2}`, i.e. `-(r'/r + s x)`.
pub fn log_derivative_superpotential(f: &GaussRational) -> Result<RationalFunction> {
    let logd = f.rat.derivative().div(&f.rat)?;
    let sx = RationalFunction::from_poly(Polynomial::monomial(q(f.weight), 1));
    Ok(-(&logd + &sx))
}

fn build_chain(kind: ChainKind, seeds: Vec<i64>, seed_functions: Vec<GaussRational>) -> Result<ChainData> {
    let n = seed_functions.len();
    let mut wronskians = Vec::with_capacity(n);
    for i in 1..=n {
        let w = wronskian(&seed_functions[..i]);
        if w.is_zero() {
            return Err(Error::DegenerateWronskian(seeds));
        }
        wronskians.push(w);
    }
    let mut q_functions = Vec::with_capacity(n);
    for i in 0..n {
        let qf = if i == 0 {
            wronskians[0].clone()
        } else {
            wronskians[i].try_div(&wronskians[i - 1])?
        };
        q_functions.push(qf);
    }
    let superpotentials = q_functions
        .iter()
        .map(log_derivative_superpotential)
        .collect::<Result<Vec<_>>>()?;
    let supercharges = superpotentials
        .iter()
        .cloned()
        .map(FirstOrderOperator::lowering)
        .collect();
    let energy_shift = q(-2 * wronskians[n - 1].weight);
    Ok(ChainData {
        kind,
        seeds,
        seed_functions,
        wronskians,
        q_functions,
        superpotentials,
        supercharges,
        energy_shift,
    })
}

/// Darboux–Crum chain over seeds `φ_{m_1}, ..., φ_{m_k}`.
///
/// A repeated seed makes the Wronskian vanish and is reported as
/// [`Error::DegenerateWronskian`]; otherwise the seeds must be strictly increasing.
pub fn build_adding_chain(seeds: &[i64]) -> Result<ChainData> {
    if seeds.is_empty() {
        return Err(Error::InvalidSeeds(seeds.to_vec(), "empty seed list"));
    }
    if seeds.iter().any(|&m| m < 0) {
        return Err(Error::InvalidSeeds(seeds.to_vec(), "negative seed index"));
    }
    let fns = seeds.iter().map(|&m| seed_function(m as usize)).collect();
    let chain = build_chain(ChainKind::StateAdding, seeds.to_vec(), fns)?;
    if seeds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSeeds(seeds.to_vec(), "seeds must be strictly increasing"));
    }
    Ok(chain)
}

/// Krein–Adler chain deleting the oscillator levels `k` and `k + 1`.
pub fn build_deleting_chain(k: i64) -> Result<ChainData> {
    if k < 0 {
        return Err(Error::InvalidSeeds(vec![k, k + 1], "negative level"));
    }
    let fns = vec![oscillator_state(k as usize), oscillator_state(k as usize + 1)];
    build_chain(ChainKind::StateDeleting, vec![k, k + 1], fns)
}

impl ChainData {
    pub fn len(&self) -> usize {
        self.supercharges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supercharges.is_empty()
    }

    /// Full Wronskian of every seed.
    pub fn full_wronskian(&self) -> &GaussRational {
        self.wronskians.last().expect("non-empty chain")
    }

    /// Composite operator `A = A^(n) ... A^(1)`, written left to right.
    pub fn composite(&self) -> Vec<FirstOrderOperator> {
        self.supercharges.iter().rev().cloned().collect()
    }

    /// `A† = A^(1)† ... A^(n)†`, written left to right.
    pub fn composite_adjoint(&self) -> Vec<FirstOrderOperator> {
        self.supercharges.iter().map(FirstOrderOperator::adjoint).collect()
    }
}
