use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::chain::ChainData;
use crate::error::{Error, Result};
use crate::exactfn::{
    oscillator_state, q, wronskian, GaussRational, Polynomial, RationalFunction,
};

/// Partner Hamiltonian `H = -d²/dx² + x² + potential_extension`.
#[derive(Clone, Debug)]
pub struct PartnerSystem {
    /// `V - x²` as an exact rational function (includes the constant shift).
    pub potential_extension: RationalFunction,
    pub energy_shift: BigRational,
    /// Primitive integer polynomial part of the full seed Wronskian.
    pub denominator_poly: Polynomial,
}

/// `V = x² - 2 (ln 𝒲)''` with `𝒲 = P e^{s x²/2}`, i.e.
/// `V - x² = -2 (P'' P - P'²) / P² - 2s`.
pub fn partner_potential(chain: &ChainData) -> PartnerSystem {
    if chain.is_empty() {
        return PartnerSystem {
            potential_extension: RationalFunction::zero(),
            energy_shift: BigRational::zero(),
            denominator_poly: Polynomial::one(),
        };
    }
    let w = chain.full_wronskian();
    debug_assert!(w.rat.is_polynomial());
    let p = w.rat.numer().primitive();
    let p1 = p.derivative();
    let p2 = p1.derivative();
    let num = &(&p2 * &p) - &(&p1 * &p1);
    let log2 = RationalFunction::new(num, &p * &p).expect("non-zero Wronskian");
    let ext = &log2.scale(&q(-2)) + &RationalFunction::constant(chain.energy_shift.clone());
    PartnerSystem {
        potential_extension: ext,
        energy_shift: chain.energy_shift.clone(),
        denominator_poly: p,
    }
}

impl PartnerSystem {
    /// Full potential `V` as a rational function.
    pub fn potential(&self) -> RationalFunction {
        &RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1])) + &self.potential_extension
    }

    /// `H f = -f'' + V f`.
    pub fn apply_hamiltonian(&self, f: &GaussRational) -> GaussRational {
        let d2 = f.differentiate().differentiate();
        (-&d2).try_add(&f.mul_rat(&self.potential())).expect("equal weights")
    }

    /// Exact residual `H f - E f`.
    pub fn eigen_residual(&self, f: &GaussRational, energy: &BigRational) -> GaussRational {
        self.apply_hamiltonian(f).try_sub(&f.scale(energy)).expect("equal weights")
    }

    /// Real roots of the Wronskian polynomial on `x >= 0` (Sturm count).
    pub fn nonnegative_real_roots(&self) -> usize {
        let zero = BigRational::zero();
        let at_zero = usize::from(self.denominator_poly.eval(&zero).is_zero());
        at_zero + self.denominator_poly.count_real_roots(Some(&zero), None)
    }

    pub fn real_roots(&self) -> usize {
        self.denominator_poly.count_real_roots(None, None)
    }

    /// Sign check of the Wronskian polynomial on the rational grid `i / steps`, `i = 0..=steps*span`.
    pub fn positive_on_grid(&self, span: i64, steps: i64) -> bool {
        let lead_pos = self.denominator_poly.leading().is_positive();
        (0..=span * steps).all(|i| {
            let v = self.denominator_poly.eval(&BigRational::new(i.into(), steps.into()));
            if lead_pos {
                v.is_positive()
            } else {
                v.is_negative()
            }
        })
    }
}

/// Exact eigenfunction of the partner Hamiltonian.
#[derive(Clone, Debug)]
pub struct EigenState {
    pub nu: i64,
    pub energy: BigRational,
    pub wavefunction: GaussRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct StateSummary {
    pub nu: i64,
    pub energy: i64,
    pub vanishes_at_origin: bool,
}

impl EigenState {
    /// Physical for the truncated (half-line) problem: vanishes at `x = 0`.
    pub fn vanishes_at_origin(&self) -> bool {
        self.wavefunction
            .rat_at_zero()
            .is_some_and(|v| v.is_zero())
    }

    pub fn summary(&self) -> StateSummary {
        StateSummary {
            nu: self.nu,
            energy: 2 * self.nu + 1,
            vanishes_at_origin: self.vanishes_at_origin(),
        }
    }
}

/// Partner eigenstate with index `ν` and energy `2ν + 1`.
///
/// `ν >= 0`: `𝒲(φ_{m_1}..φ_{m_k}, ψ_ν) / 𝒲(φ_{m_1}..φ_{m_k})`.
/// `ν = -m_i - 1`: `𝒲(φ_{m_1}..φ̌_{m_i}..φ_{m_k}) / 𝒲(φ_{m_1}..φ_{m_k})`.
/// Every state is rescaled so its highest-degree numerator coefficient is positive.
pub fn partner_state(chain: &ChainData, nu: i64) -> Result<EigenState> {
    let base = chain.full_wronskian();
    let numerator = if nu >= 0 {
        let mut fs = chain.seed_functions.clone();
        fs.push(oscillator_state(nu as usize));
        wronskian(&fs)
    } else {
        let m = -nu - 1;
        let idx = chain
            .seeds
            .iter()
            .position(|&s| s == m)
            .ok_or(Error::NoSuchLevel(nu))?;
        let rest: Vec<GaussRational> = chain
            .seed_functions
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, f)| f.clone())
            .collect();
        if rest.is_empty() {
            GaussRational::from_poly(Polynomial::one(), 0)
        } else {
            wronskian(&rest)
        }
    };
    let mut wavefunction = numerator.try_div(base)?;
    if wavefunction.leading_sign() < 0 {
        wavefunction = -&wavefunction;
    }
    Ok(EigenState {
        nu,
        energy: q(2 * nu + 1),
        wavefunction,
    })
}
