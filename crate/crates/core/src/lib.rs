//! Shannon and Rényi entropies of molecular electron densities.
//!
//! The density is expanded over atom-centered Cartesian Gaussian primitives
//! and split into atom-pair contributions `ρ^{AB}` (a Mulliken-like
//! partition). Entropies are integrated on a Becke multicenter grid and
//! decomposed into atomic net, interatomic overlap and nonadditive terms.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! output serialization live in the `densentropy` companion crate.
//!
//! ```
//! use densentropy_core::{models, quadrature::GridParams, shannon};
//!
//! let basis = models::sto6g_hydrogen();
//! let field = models::hf_density(1.4, &basis).unwrap();
//! let params = GridParams { n_radial: 120, lebedev_order: 110, ..GridParams::default() };
//! let grid = params.build(field.molecule()).unwrap();
//! let dec = shannon::shannon_decompose(&field, &grid).unwrap();
//! assert!((dec.density.add - dec.density.nadd - dec.density.total).abs() < 1e-8);
//! ```

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod basis;
pub mod density;
mod error;
pub mod integrals;
pub mod math;
pub mod models;
pub mod molecule;
pub mod quadrature;
pub mod renyi;
pub mod shannon;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Bohr radius in ångström.
pub const BOHR_IN_ANGSTROM: f64 = 0.529_177_210_903;
