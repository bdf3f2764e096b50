//! Exact arithmetic layer: rational polynomials and functions, Gaussian-weighted
//! rational functions, first-order differential operators and Wronskians.

pub mod gauss;
pub mod hermite;
pub mod highprec;
pub mod poly;
pub mod rational;
pub mod wronskian;

pub use gauss::{apply_product, FirstOrderOperator, GaussRational};
pub use hermite::{hermite, modified_hermite, oscillator_state, seed_function};
pub use highprec::{evaluate, HighPrec};
pub use poly::Polynomial;
pub use rational::RationalFunction;
pub use wronskian::wronskian;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer as an exact rational.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as an exact rational.
pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Apply a first-order operator (`d/dx`-linear plumbing used throughout).
pub fn apply(op: &FirstOrderOperator, f: &GaussRational) -> GaussRational {
    op.apply(f)
}

/// `d/dx` of a Gaussian-weighted rational function.
pub fn differentiate(f: &GaussRational) -> GaussRational {
    f.differentiate()
}
