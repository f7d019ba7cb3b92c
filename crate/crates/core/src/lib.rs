//! Exact-arithmetic construction and analysis of Euclidean lattices.
//!
//! The crate builds lattices two ways: as integer-point images of rational
//! eigenprojections of graph adjacency matrices, and as integer spans of
//! rational tight frames. It then certifies their geometry (minimal vectors,
//! eutaxy, perfection, coherence) and identifies them against a catalog of
//! classical lattices. All certifying computations run over arbitrary
//! precision rationals; floating point appears only in the compressed-sensing
//! experiment module and in presentation-layer rendering.
//!
//! Module map:
//!
//! * [`exactq`] — rational matrices, Hermite normal form, characteristic
//!   polynomials, LDL^T factorization.
//! * [`graphs`] — graph constructors (named families and products) and
//!   structural checks (regularity, distance-regularity, transitivity).
//! * [`spectral`] — exact rational spectra and eigenspace projectors.
//! * [`lattices`] — lattice construction, shortest-vector enumeration,
//!   eutaxy and perfection certificates, coherence, duality.
//! * [`identify`] — catalog of classical lattices and similarity testing.
//! * [`frames`] — tight-frame analysis, group-orbit frames, frame lattices.
//! * [`steinercs`] — Steiner equiangular tight frames and sparse-recovery
//!   experiments (floating point by design).

pub mod exactq;
pub mod frames;
pub mod graphs;
pub mod identify;
pub mod lattices;
pub mod spectral;
pub mod steinercs;

pub use exactq::{Int, QMatrix, Rat};
pub use graphs::Graph;
pub use lattices::Lattice;
