//! Exact computations on circular planar electrical networks.
//!
//! Starting from a weighted planar graph in a disk with `n` boundary
//! vertices, the crate builds the response matrix, grove measurements, the
//! bipartite dimer network and its boundary measurements, and the point of
//! the Lagrangian Grassmannian `LG(n-1, V)` carried by the network, together
//! with the symplectic-group data acting on it. Every identity tying these
//! objects together is checked in exact rational arithmetic.
//!
//! Module map:
//!
//! * [`exactla`]: rationals, dense matrices, subset indexing, Plücker vectors.
//! * [`netmodel`]: the network data model, its file format, faces, surgeries
//!   and corpus generators.
//! * [`response`]: Laplacian, response matrix, effective resistance.
//! * [`partitions`]: non-crossing partitions, Kreweras duals, concordance.
//! * [`groves`]: grove enumeration and grove measurements.
//! * [`lamdimer`]: the bipartite dimer network and matching measurements.
//! * [`sympl`]: the `Ω_n` parametrization, structure matrices, group
//!   generators and the representation-theoretic checks.
//! * [`report`]: check outcomes, witnesses and verification reports.
//! * [`suite`]: named check suites shared by the CLI and the Python module.

pub mod error;
pub mod exactla;
pub mod groves;
pub mod lamdimer;
pub mod netmodel;
pub mod partitions;
pub mod report;
pub mod response;
pub mod suite;
pub mod sympl;

pub use error::{Error, Result};
pub use exactla::{PlueckerVector, RatMatrix, Rational, SubsetIndex};
pub use groves::GroveTable;
pub use lamdimer::BipartiteNetwork;
pub use netmodel::{ElectricalNetwork, Move};
pub use partitions::NonCrossingPartition;
pub use report::{CheckResult, Witness};
pub use response::ResponseMatrix;
pub use sympl::OmegaPoint;
