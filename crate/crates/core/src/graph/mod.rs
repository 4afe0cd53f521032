//! Graph representations and the structural primitives built on them.

mod blocks;
mod digraph;
mod mixed;
mod tournament;
mod undirected;

pub use blocks::{
    compute_blocks, inconsistent_set, is_consistent, large_blocks_union, BlockDecomposition, MSlots,
};
pub use digraph::{is_acyclic, topological_sort, Digraph};
pub use mixed::MixedMultigraph;
pub use tournament::{SubTournament, Tournament};
pub use undirected::UndirectedMultigraph;
