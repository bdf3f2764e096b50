//! Half-line numerics over the truncated-sector tower `ψ_{5+6k}`:
//! quadrature, normalization, matrix elements and the Wigner kernel.

pub mod basis;
pub mod checks;
pub mod moments;
pub mod quadrature;
pub mod state;
pub mod wigner;

pub use checks::verify_numerics;
pub use moments::{
    ladder_coefficient_closed, ladder_coefficient_quadrature, ladder_coefficient_squared, moment_tables,
    MomentTables,
};
pub use quadrature::{integrate_halfline, QuadratureRule};
pub use state::{normalize, tower_level, NormalizedState, TowerBasis};
pub use wigner::{marginal_tail, wigner_kernel, WignerSlice};
