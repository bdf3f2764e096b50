//! Coefficient sums in working precision, independent of the log-polar path.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::state::denominator_squared;
use crate::exactfn::highprec::{self, HighPrec};

/// `|z|²` as an exact rational.
pub fn abs_sq_exact(z: Complex64) -> BigRational {
    let re = BigRational::from_float(z.re).unwrap_or_else(BigRational::zero);
    let im = BigRational::from_float(z.im).unwrap_or_else(BigRational::zero);
    &re * &re + &im * &im
}

/// Exact `|z|^{2k} / D_k²` for `k = 0..k_terms`.
pub fn exact_weights(abs_sq: &BigRational, k_terms: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(k_terms);
    let mut pow = BigRational::one();
    for k in 0..k_terms {
        out.push(&pow / denominator_squared(k));
        pow = &pow * abs_sq;
    }
    out
}

/// Normalized moments of the weight distribution at a fixed precision.
#[derive(Clone, Debug)]
pub struct PrecisionSums {
    pub bits: usize,
    pub f: HighPrec,
    pub mean_n: HighPrec,
    pub mean_n2: HighPrec,
    pub distinguishability: HighPrec,
    /// `|α_k|²`.
    pub weights: Vec<HighPrec>,
}

impl PrecisionSums {
    pub fn new(z: Complex64, k_terms: usize, bits: usize) -> Self {
        let exact = exact_weights(&abs_sq_exact(z), k_terms);
        let w: Vec<HighPrec> = exact.iter().map(|r| highprec::from_rational(r, bits)).collect();
        let zero = highprec::from_rational(&BigRational::zero(), bits);
        let f = w.iter().fold(zero.clone(), |acc, x| acc + x);
        let weights: Vec<HighPrec> = w.iter().map(|x| x.clone() / f.clone()).collect();
        let mut mean_n = zero.clone();
        let mut mean_n2 = zero.clone();
        let mut dist = zero;
        for (k, p) in weights.iter().enumerate() {
            let kk = highprec::from_rational(&BigRational::from_integer(BigInt::from(k)), bits);
            mean_n = mean_n + kk.clone() * p;
            mean_n2 = mean_n2 + kk.clone() * kk * p;
            dist = if k % 2 == 0 { dist + p } else { dist - p };
        }
        PrecisionSums {
            bits,
            f,
            mean_n,
            mean_n2,
            distinguishability: dist,
            weights,
        }
    }

    pub fn mean_number(&self) -> f64 {
        highprec::to_f64(&self.mean_n)
    }

    pub fn energy(&self) -> f64 {
        11.0 + 12.0 * self.mean_number()
    }

    pub fn distinguishability(&self) -> f64 {
        highprec::to_f64(&self.distinguishability)
    }

    pub fn mandel_q(&self) -> f64 {
        let n = self.mean_number();
        if n == 0.0 {
            return 0.0;
        }
        let excess = self.mean_n2.clone() - self.mean_n.clone() * self.mean_n.clone() - self.mean_n.clone();
        highprec::to_f64(&(excess / self.mean_n.clone()))
    }

    pub fn normalization(&self) -> f64 {
        highprec::to_f64(&self.f)
    }
}
