//! Exact and parameterized solver for Feedback Vertex Set in Tournaments.
//!
//! The pipeline runs a greedy 3-approximation, streams a family of
//! `(M, P)` set pairs (an undeletable evenly spread set and a forced
//! deletion set), reduces every pair to a block-partitioned mixed
//! multigraph instance of d-Feedback Vertex Cover, and solves that by
//! golden-ratio branching on vertices with two or more undirected
//! neighbours. Leaves where the undirected edges form a matching are
//! handled by a divide and conquer over balanced edge partitions.
//!
//! Every stage has a brute-force counterpart in [`oracle`].

pub mod approx;
pub mod bounds;
pub mod dfvc;
pub mod error;
pub mod family;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod solver;
mod subsets;

pub use error::{Error, Result};
pub use graph::{
    BlockDecomposition, Digraph, MixedMultigraph, SubTournament, Tournament, UndirectedMultigraph,
};
pub use solver::{tfvs_solve, Answer, SolveOptions, SolveReport};
