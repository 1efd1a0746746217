//! Exact spectral classification of edge-signed graphs with smallest
//! eigenvalue at least -2: canonical forms under switching, integral
//! representations in root systems, enumeration of exceptional switching
//! classes, and exhaustive verification of the structure theorems.

pub mod classify;
pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod hoffman;
pub mod lines;
pub mod matrix;
pub mod multigraph;
pub mod output;
pub mod poly;
pub mod spectra;
pub mod sweep;
pub mod verify;
