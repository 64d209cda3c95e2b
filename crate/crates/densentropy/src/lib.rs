//! File formats, dissociation sweeps and reporting on top of
//! `densentropy-core`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod plot;
pub mod report;
pub mod run;
pub mod wfn;

pub use error::AppError;
