//! Cycles with integer coefficients, carried by unmixed homogeneous ideals.

mod chunk;
mod multiplicity;

pub use chunk::{
    coefficient_along, cut_with_divisor, cycle_degree, make_full_space, make_hypersurface, make_linear_space, make_point,
    point_on_support, split_by, support_contained, supports_equal, Chunk, Cycle, DegreeTable,
};
pub use multiplicity::{ideal_multiplicity_at, multiplicity_at, order_of_vanishing, MAX_SAMPLES};
