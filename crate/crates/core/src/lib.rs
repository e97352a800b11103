//! Strongly stable (Borel-fixed) monomial ideals and the dimension of the
//! tangent space to the Hilbert scheme of points at them.
//!
//! The crate is `no_std` and only needs `alloc`. IO, parallel scans, caching
//! and the command line live in the companion `borel-cli` crate.
//!
//! Variable convention: `x_1` is Borel-dominant, so a strongly stable ideal
//! is closed under `x_t -> x_s` for `s < t` and its pure powers satisfy
//! `m_1 <= m_2 <= ... <= m_N`.
#![no_std]
extern crate alloc;

pub mod bareiss;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod region;
pub mod scan;
pub mod tangent;

pub use enumerate::{count_strongly_stable, enumerate_strongly_stable, EnumFilter};
pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, PurePowerProfile, StandardSet};
pub use monomial::{divides, lcm_exp, ExponentVector};
pub use parse::{format_ideal, parse_ideal};
pub use tangent::{
    alpha_support_box, constraint_rank, graded_dimension, tangent_dimension, tangent_dimension_oracle,
    GradedTangentReport,
};
