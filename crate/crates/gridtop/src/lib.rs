//! Computational topology of cut and total cut complexes of grid graphs.
//!
//! The crate provides:
//!
//! - [`graph`]: simple graphs on ≤ 64 labelled vertices and the grid-graph
//!   families under study;
//! - [`complex`]: simplicial complexes stored by facets, with the usual
//!   operations (link, deletion, star, join, skeleton, …) and a text format;
//! - [`cutgen`]: generators for cut complexes and total cut complexes;
//! - [`homology`]: reduced simplicial homology over small prime fields,
//!   Betti numbers, Euler characteristics, and wedge-of-spheres profiles;
//! - [`shelling`]: shelling-order checking, certified constructions for the
//!   cut complexes of 2×n grids, and an exhaustive search fallback;
//! - [`morse`]: discrete Morse matchings built from vertex sequences, with
//!   acyclicity certification and critical-cell censuses;
//! - [`verify`]: a registry of checks that replay the closed-form results
//!   against the generators, with JSON/CSV reporting.

pub mod bits;
pub mod complex;
pub mod cutgen;
pub mod error;
pub mod graph;
pub mod homology;
pub mod morse;
pub mod shelling;
pub mod verify;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
