//! Recognition of simple-triangle (PI) graphs and linear-interval orders.
//!
//! The central engine solves the restricted 2-chain subgraph cover problem:
//! given a bipartite graph `G` and an edge set `F`, find chain subgraphs
//! `(G1, G2)` with `E(G1) ∪ E(G2) = E(G)` and `E(G1) ∩ F = ∅`. Recognition
//! of simple-triangle graphs reduces to this via transitive orientation of
//! the complement and the domination bipartite graph construction.
//!
//! Layout:
//! - [`bigraph`]: bipartite graphs, 2K2 conflicts, chain-graph tests
//! - [`twosat`]: linear-time 2CNF satisfiability
//! - [`chaincover`]: the cover pipeline (partition, swap, completion)
//! - [`orders`]: partial orders, transitive orientation, domination bigraph
//! - [`recognizer`]: end-to-end simple-triangle recognition
//! - [`oracles`]: brute-force references used by tests and `audit`
//! - [`genio`]: seeded instance generators
//! - [`instance`], [`cert`], [`audit`], [`cli`]: file formats and frontend

pub mod audit;
pub mod bigraph;
pub mod cert;
pub mod chaincover;
pub mod cli;
pub mod genio;
pub mod instance;
pub mod oracles;
pub mod orders;
pub mod recognizer;
pub mod twosat;

mod error;

pub use error::Error;

/// A bipartite edge as (left index, right index).
pub type Edge = (usize, usize);
