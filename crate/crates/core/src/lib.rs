//! Exact locating-domination and locating-dominating coalition computations
//! for small simple graphs.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`], [`vertex_set`], [`generators`], [`format`], [`canon`] and
//!   [`enumerate`] provide bitmask graphs, named families, graph6/edge-list
//!   I/O and isomorphism-free enumeration.
//! - [`ld`] decides locating-domination and computes the locating-domination
//!   number, minimal LD-sets and the location-domatic number.
//! - [`partition`] and [`solver`] verify and search for coalition partitions
//!   (both the locating-dominating and the plain domination variant).
//! - [`builders`] implements the constructive existence results.
//! - [`lab`] holds the cycle/path machinery: gap configurations, closed forms,
//!   type tables, exhaustive lemma checks and small-graph censuses.

pub mod builders;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod lab;
pub mod ld;
pub mod partition;
pub mod solver;
pub mod vertex_set;

/// Largest supported graph order.
pub const MAX_ORDER: usize = 128;

pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::{CoalitionGraph, LdcCertificate, Partition};
pub use vertex_set::VertexSet;
