//! Genus-one ("toric") multisections of smooth 4-manifolds, encoded as loops
//! in the Farey graph.
//!
//! A loop of torus slopes with unimodular consecutive pairings is a
//! multisection diagram of a closed 4-manifold; paths encode manifolds with
//! boundary.  This crate provides the combinatorial calculus on such
//! diagrams: validation, oriented lifts to the extended Farey graph,
//! conjugacy and canonical forms, numerical invariants (Euler characteristic,
//! signature by three independent routes, spin, almost-complex existence),
//! connected-sum classification, surgeries (blow-ups, `S2 x S2` sums,
//! central-surface covers), linear plumbings with lens-space boundaries,
//! enumeration of definite diagrams, and exact shadow diagrams for the
//! bidegree-`(p,q)` complex curves in `CP1 x CP1` together with their
//! branched-cover parameters.
//!
//! All computations are exact (integer or rational); floating point appears
//! only in SVG coordinate emission.

pub mod boundary;
pub mod classify;
pub mod curves;
pub mod diagram;
pub mod enumerate;
pub mod invariants;
pub mod lattice;
pub mod render;

mod error;

pub use error::{Error, Result};

pub use diagram::{OrientedLift, ToricLoop, ToricPath};
pub use lattice::{pairing, PrimitiveVector, Slope, UnimodularMatrix};
