//! Exact polynomial arithmetic and coefficient-sequence analysis.

mod poly;
mod sequence;
mod series;
mod sturm;
mod ylinear;

pub use poly::IntPoly;
pub use sequence::{
    has_no_internal_zeros, is_log_concave, is_unimodal, satisfies_newton, LogConcavity, Newton,
    SequenceReport, Unimodality,
};
pub use series::series_coefficients;
pub use sturm::{count_distinct_real_roots, is_real_rooted, sturm_chain};
pub use ylinear::{logconcave_for_all_y, LinYPoly, YVerdict, YWitness};
