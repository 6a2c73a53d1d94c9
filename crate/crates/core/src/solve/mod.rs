//! Minimum saturated graphs: greedy upper bounds, an exact search, and the
//! `m(r, s)` search behind the `K_r` bounds.

mod exact;
mod greedy;
mod mvalue;
mod symmetry;

pub use exact::{
    degree_lower_bound, min_exsat_exact, min_sat_exact, solve_exact, Objective, SolveOptions, SolveResult,
};
pub use greedy::{greedy_extra_saturate, greedy_saturate};
pub use mvalue::{is_m_witness, kr_sat_bounds, m_value, KrBounds, MResult, MSearchOptions, MWitness};
pub use symmetry::DEFAULT_GROUP_LIMIT;
