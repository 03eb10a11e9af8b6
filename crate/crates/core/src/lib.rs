//! Layered lattice-hull graph families in which many vertex pairs have
//! unique, edge-disjoint shortest paths, plus the transforms that turn them
//! into hard instances for diameter-reducing shortcut sets, additive spanners
//! and additive emulators, and the exact oracles that audit every finite
//! property these instances are supposed to have.
//!
//! The crate is organized around six concerns:
//!
//! * [`lattice`] — exact integer geometry: lattice balls and the corner
//!   (extreme-point) sets of their convex hulls;
//! * [`graphs`] — the layered base graphs and the alternation product;
//! * [`transforms`] — edge subdivision, bipartite clique replacement, and
//!   the inner/outer substitution product;
//! * [`oracles`] — shortest-path counting, disjointness audits, stretch
//!   measurement, and the emulator-to-spanner conversion;
//! * [`evaluate`] — baseline candidates, budgeted experiments, and the
//!   per-subset deletion family used for incompressibility checks;
//! * [`instance`] — bundled construction entry points and instance-level
//!   verification.

pub mod error;
pub mod evaluate;
pub mod graphs;
pub mod instance;
pub mod lattice;
pub mod limits;
pub mod oracles;
pub mod report;
pub mod transforms;

pub use error::{Error, Result};
pub use limits::Limits;
