//! Gröbner bases and the ideal operations needed for cycle arithmetic.

mod basis;
mod groebner;
mod hilbert;
mod ops;

pub use basis::{GroebnerBasis, Ideal};
pub use hilbert::{hilbert_function, hilbert_numerator, summary_from_monomials, HilbertSummary};
pub use ops::{
    equidim_hull, eliminate, groebner, hilbert, intersect_ideals, is_nzd, normal_form, projective_closure,
    quotient, quotient_by, radical_contains, saturate, saturate_by,
};
