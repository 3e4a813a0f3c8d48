//! The •-product: ruled join, Stückrad–Vogel runs along the join diagonal,
//! pullback to ℙⁿ, fixed/moving classification and local intersection numbers.

mod bullet;
mod join;
mod polar;
mod sv;

pub use bullet::{
    bullet, bullet_direct_linear, bullet_epsilon, classify_fixed_moving, epsilon, fulton_degree, BulletReport, Component,
    ComponentKind, EpsilonTable, InputSummary, RunParts,
};
pub use join::{diagonal_pullback, diagonal_system, ruled_join, LinearSystem};
pub use polar::{polar_self_intersection_oracle, PolarOracle};
pub use sv::{sv, sv_mass_check, MassAudit, SvOutput};
