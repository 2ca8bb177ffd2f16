//! Exact spectral toolkit for equilateral quantum graphs.

pub mod cospectral;
pub mod exactpoly;
pub mod graph;
pub mod inverse;
pub mod secular;
pub mod spectra;
