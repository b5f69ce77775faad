//! Exact arithmetic on monomial ideals of `K[x, y]`.
//!
//! Every ideal is kept in canonical staircase form: the unique minimal
//! monomial generating set, sorted with strictly increasing x-exponents and
//! strictly decreasing y-exponents. All operations are pure functions over
//! exponent pairs; no field coefficients are ever represented, so results
//! are valid over any coefficient field.
//!
//! The crate is `no_std` (with `alloc`). IO, file formats, and the command
//! line live in the companion `staircase-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod equigenerated;
mod error;
pub mod family;
mod grading;
mod ideal;
mod monomial;
pub mod oracle;
mod socle;

pub use equigenerated::EquigeneratedSpec;
pub use error::{Error, ParamsError};
pub use family::{
    choose_parameters, verify_headline, Family, FamilyParams, Headline, MuReport, Sign,
};
pub use grading::GradedSlice;
pub use ideal::StaircaseIdeal;
pub use monomial::{Monomial, MAX_EXPONENT};
