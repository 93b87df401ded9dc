//! Induced nonseparating cycles, the graph characteristic, and Hadwiger
//! numbers of small 3-connected graphs.
//!
//! For a simple 3-connected graph `G`, write `C(G)` for the set of induced
//! cycles whose vertex deletion leaves `G` connected, and define the graph
//! characteristic `Λ(G) = |C(G)| − |E(G)| + |V(G)|`. This crate computes all
//! of it exactly, searches for complete-minor models to get the Hadwiger
//! number `h(G)`, and mechanically checks the inequality
//! `Λ(K_{h(G)}) ≤ Λ(G)` over exhaustive small-graph catalogs and seeded
//! random families — emitting machine-checkable reduction certificates and
//! counterexample artifacts should any check ever fail.
//!
//! The pieces:
//!
//! - [`graph`]: immutable bitset-backed graphs (≤ 64 vertices), contraction,
//!   deletion, provenance labels; [`graph6`] for the line format.
//! - [`connectivity`]: components and the deletion-based 3-connectivity
//!   test with cut witnesses.
//! - [`cycles`]: chordless-cycle enumeration, the nonseparating filter,
//!   `Λ`, and the GF(2) cycle-space span check.
//! - [`minors`]: exact Hadwiger numbers with validated branch-set models.
//! - [`structure`]: separating-triangle decomposition, clique sums, the
//!   contractible-edge search, and the cycle lift through a contraction.
//! - [`theorem`]: the main-inequality checker, reduction certificates, and
//!   the over-dominating-colouring corollary.
//! - [`generators`]: named families, exhaustive labeled catalogs, seeded
//!   random 3-connected graphs.
//! - [`report`]: sweep orchestration and byte-stable JSON/CSV reports.
//!
//! Every major capability has a runnable demo under `examples/`; start with
//! `cargo run --example analyze_basics`. The `lambda-lab` binary wraps the
//! same entry points as subcommands (`analyze`, `sweep`, `certify`, `psi`,
//! `decompose`, `hadwiger`).

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod cycles;
pub mod error;
pub mod generators;
mod gf2;
pub mod graph;
pub mod graph6;
pub mod minors;
pub mod report;
pub mod structure;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{ContractionMap, EdgeRef, Graph, VertexId, MAX_VERTICES};

pub use connectivity::{is_connected, is_three_connected, CutWitness};
pub use cycles::{characteristic, nonseparating_induced_cycles, Characteristic, Cycle, CycleSet};
pub use minors::{hadwiger_number, HadwigerResult, MinorModel};
pub use structure::{cycle_lift, decompose_at_triangle, find_contractible_edge, Decomposition};
pub use theorem::{certify, check_main_inequality, verify_certificate, Certificate};
