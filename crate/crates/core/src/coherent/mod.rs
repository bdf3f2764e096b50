//! Barut–Girardello coherent states of the `C̃` tower `ψ_{5+6k}` and their
//! observables.

pub mod observables;
pub mod oracle;
pub mod spatial;
pub mod state;

pub use observables::{
    beamsplitter_pmf, distinguishability, energy_expectation, linear_entropy, linear_entropy_convergence,
    linear_entropy_with, mandel_q, mean_number, uncertainties, BeamsplitterPmf, Uncertainties,
};
pub use spatial::{cat_coefficients, cat_norm, Parity, SpatialBasis};
pub use state::{denominator_squared, make_coherent, CoherentState, LogPolar};
