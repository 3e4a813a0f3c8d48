//! Exact scalars, sparse multivariate polynomials, monomial orders,
//! projective points, linear substitutions and seeded randomness.

mod linear;
mod monomial;
mod order;
mod parse;
mod point;
mod poly;
mod random;
mod scalar;

pub use linear::{ring_map, LinearChange};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::{parse_point, parse_poly};
pub use point::ProjPoint;
pub use poly::{Poly, PolyRing, VarNaming};
pub use random::{random_coordinate_change, random_linear_combination, Seed, Stream, COEFF_BOUND};
pub use scalar::{scalar_from_ratio, Scalar};
