//! Exact-plus-numeric engine for the four-step rational extension of the
//! (truncated) harmonic oscillator built from seeds `{2, 3, 4, 5}`, its ladder
//! operator algebras, and the Barut–Girardello coherent states of the `C̃`
//! tower together with their observables.
//!
//! Layers, bottom up:
//! * [`exactfn`]: exact rational polynomials, Gaussian-weighted rational functions, Wronskians.
//! * [`susy`]: Darboux–Crum / Krein–Adler chains, partner potential and states, ladder operators
//!   and exact verification of zero modes and polynomial Heisenberg algebras.
//! * [`hilbert`]: half-line quadrature, normalized states, matrix elements, Wigner kernel.
//! * [`coherent`]: coherent states and every observable derived from them.

pub mod coherent;
pub mod error;
pub mod exactfn;
pub mod hilbert;
pub mod par;
pub mod susy;

pub use error::{Error, Result};
