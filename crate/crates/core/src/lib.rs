//! Paperfolding sequences, folding curves, and plane coverings.
//!
//! This library implements the combinatorics of finite and two-sided infinite
//! paperfolding sequences (`seq`), the lattice curves they encode together
//! with derivation/antiderivation (`curve`), coverings of rectangular windows
//! of the square lattice by such curves (`covering`), explicit covering
//! constructions (`constructions`), a registry of self-check oracles
//! (`verify`), and a deterministic SVG renderer (`render`).

pub mod constructions;
pub mod covering;
pub mod curve;
pub mod render;
pub mod seq;
pub mod verify;
