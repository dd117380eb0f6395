//! Exact computation of the additively weighted Harary index
//!
//! ```text
//! H_A(G) = sum over unordered pairs u != v of (deg(u) + deg(v)) / dist(u, v)
//! ```
//!
//! together with everything needed to find and verify its extremal values
//! over unicyclic graphs:
//!
//! * arbitrary-precision rational arithmetic ([`rational`]), so every
//!   comparison is exact;
//! * a small graph core with BFS distances and a canonical unicyclic
//!   decomposition ([`graph`], [`unicyclic`], [`family`]);
//! * the index itself plus closed forms for the extremal families
//!   ([`indices`]);
//! * six index-monotone rewrites and greedy chains that drive any unicyclic
//!   graph to `CS_{3,n-3}` (maximum) or `CP_{3,n-3}` (minimum), with exact
//!   per-pair delta ledgers ([`transform`]);
//! * isomorphism-free enumeration of all unicyclic graphs for small `n` and
//!   exhaustive verification of the extremal bounds ([`enumerate`],
//!   [`verify`], [`canon`]);
//! * graph6 and edge-list serialization plus deterministic report
//!   renderings ([`format`], [`report`]).
//!
//! Graphs and index values are immutable after construction, so everything
//! here can be shared across threads freely; enumeration parallelizes
//! internally.

pub mod canon;
pub mod enumerate;
pub mod family;
pub mod format;
pub mod graph;
pub mod indices;
pub mod rational;
pub mod report;
pub mod transform;
pub mod unicyclic;
pub mod verify;

pub use canon::{canonical_certificate, CanonicalCertificate};
pub use graph::{classify, Graph, GraphClass};
pub use indices::{additively_weighted_harary, classical_indices};
pub use rational::Rational;
pub use transform::{maximize_chain, minimize_chain};
pub use verify::{extremal_scan, verify_extremal};
