//! Completely regular codes in Johnson graphs.
//!
//! A code in the Johnson graph `J(n, w)` is completely regular when its
//! distance partition is equitable: the number of neighbors a vertex has in
//! the adjacent cells depends only on the vertex's cell. This crate verifies
//! that property with exact arithmetic, projects codes with minimum eigenvalue
//! to the clique graph `J(n, w-1)` and reconstructs them back, generates the
//! named families of strength-1 codes, enumerates feasible intersection
//! arrays, and runs isomorph-pruned exhaustive searches for codes with a
//! prescribed array.
//!
//! Start with [`johnson::JohnsonParams`] and [`code::Code`], then
//! [`analysis::check_crc`]. The `examples/` directory has one runnable
//! walkthrough per capability; the thin `jcrc` binary exposes the same
//! operations as subcommands.

pub mod analysis;
pub mod code;
pub mod johnson;

pub use analysis::{check_crc, CrcReport, IntersectionMatrix};
pub use code::Code;
pub use johnson::{JohnsonGraph, JohnsonParams, Subset};
pub mod cli;
