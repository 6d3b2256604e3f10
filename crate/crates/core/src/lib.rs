//! Exact Tutte polynomial computation for small multigraphs, together with
//! the divisibility partial order the polynomial induces on fixed
//! vertex/edge classes of connected graphs.
//!
//! The crate is organized around a few pieces:
//!
//! - [`bipoly`]: sparse bivariate polynomials over big integers, including
//!   division by the connector `x + y - xy`.
//! - [`multigraph`]: labeled multigraphs with deletion, contraction, block
//!   decomposition, ear detection, and canonical labeling.
//! - [`tutte`]: the deletion-contraction engine with closed forms, ear
//!   reduction, and an isomorphism-aware memo cache, plus an independent
//!   corank-nullity oracle.
//! - [`families`]: constructors and a small textual DSL for cycles,
//!   multiedges, theta/delta/box/cylinder graphs, and block joins.
//! - [`enumerate`]: isomorph-free enumeration of connected simple graphs.
//! - [`poset`]: the comparison relation, full poset construction with Hasse
//!   edges, maximal elements, and instance-based verification suites.
//! - [`invariants`]: parameter tables and the reliability, chromatic, and
//!   flow specializations, with a monotonicity audit along cover edges.

pub mod bipoly;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod invariants;
pub mod multigraph;
pub mod poset;
pub mod tutte;

pub use bipoly::{BiPoly, Rational, SignPattern};
pub use error::{Error, Result};
pub use multigraph::{canonical_key, CanonKey, Ear, Edge, EdgeClass, Multigraph};
pub use tutte::{tutte_oracle, EngineConfig, TutteEngine};
