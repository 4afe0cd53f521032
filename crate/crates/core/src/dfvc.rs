//! Reduction from tournaments to d-Feedback Vertex Cover and the branching
//! solver for it.
//!
//! Given an acyclic `M`, the M-blocks of `T` become the parts of a mixed
//! multigraph on `V(T) \ M`. Arcs inside a block are kept; every arc that
//! points from a later block to an earlier one becomes an undirected edge
//! (one of its endpoints must go), and forward inter-block arcs are
//! dropped. `T` has a feedback vertex set of size at most `k` avoiding `M`
//! iff the multigraph has a feedback vertex cover of size at most `k`.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{MSlots, MixedMultigraph, Tournament};
use crate::partition;

/// Recursion-tree counters of one branching run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: usize,
    /// Leaves handed to the matching solver.
    pub matching_calls: u64,
}

#[derive(Clone, Debug)]
pub struct DfvcInstance {
    pub graph: MixedMultigraph,
    pub k: usize,
    /// Vertices already committed to the solution; disjoint from the graph.
    pub chosen: Vec<usize>,
    pub stats: BranchStats,
}

impl DfvcInstance {
    pub fn new(graph: MixedMultigraph, k: usize) -> Self {
        DfvcInstance {
            graph,
            k,
            chosen: Vec::new(),
            stats: BranchStats::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Reduction {
    /// `T[M]` is cyclic, so no solution avoids `M`.
    TrivialNo,
    Instance(DfvcInstance),
}

/// Builds the d-FVC instance of `(T, M, k)`.
///
/// Every vertex outside `M` must be consistent with `M`.
pub fn reduce_to_dfvc(t: &Tournament, m: &[usize], k: usize) -> Result<Reduction> {
    let members = t.vertex_set(m)?;
    let Some(slots) = MSlots::from_set(t, members) else {
        return Ok(Reduction::TrivialNo);
    };
    let (buckets, inconsistent) = slots.bucket(t, &FixedBitSet::with_capacity(t.len()));
    if let Some(&v) = inconsistent.first() {
        return Err(Error::InconsistentVertex(v));
    }
    let mut slot_of = vec![usize::MAX; t.len()];
    for (s, bucket) in buckets.iter().enumerate() {
        for &v in bucket {
            slot_of[v] = s;
        }
    }
    let d = buckets.iter().map(Vec::len).max().unwrap_or(0);
    let mut graph = MixedMultigraph::new(buckets, d)?;
    for u in 0..t.len() {
        if slots.contains(u) {
            continue;
        }
        for v in t.out_set(u).ones() {
            if slots.contains(v) {
                continue;
            }
            match slot_of[u].cmp(&slot_of[v]) {
                std::cmp::Ordering::Equal => graph.add_arc(u, v, 1)?,
                std::cmp::Ordering::Greater => graph.add_edge(u, v)?,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Ok(Reduction::Instance(DfvcInstance::new(graph, k)))
}

/// `G / v`; see [`MixedMultigraph::contract`].
pub fn contract(g: &MixedMultigraph, v: usize) -> Result<MixedMultigraph> {
    g.contract(v)
}

/// Minimum feedback vertex cover of size at most `inst.k`, if one exists.
///
/// While some vertex `v` has two or more undirected neighbours and budget
/// remains, branch on deleting `v` or on deleting `N_E(v)` and contracting
/// `v`. Once the undirected edges form a matching the instance goes to the
/// matching solver. Each solution found tightens the budget, so the first
/// complete search returns an optimum. The returned set includes
/// `inst.chosen`.
pub fn solve_branching(inst: &mut DfvcInstance) -> Result<Option<Vec<usize>>> {
    let mut search = Search {
        cap: (inst.k + inst.chosen.len()) as i64,
        best: None,
        stats: BranchStats::default(),
    };
    let mut chosen = inst.chosen.clone();
    search.run(&inst.graph, &mut chosen, 0)?;
    inst.stats = search.stats;
    Ok(search.best.map(|mut s| {
        s.sort_unstable();
        s
    }))
}

struct Search {
    /// Largest total solution size still worth finding; negative once the
    /// empty set has been found.
    cap: i64,
    best: Option<Vec<usize>>,
    stats: BranchStats,
}

impl Search {
    fn run(&mut self, g: &MixedMultigraph, chosen: &mut Vec<usize>, depth: usize) -> Result<()> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let budget = self.cap - chosen.len() as i64;
        if budget < 0 {
            self.stats.leaves += 1;
            return Ok(());
        }
        let budget = budget as usize;

        if budget > 0 {
            let pivot = g
                .undirected_adjacency()
                .into_iter()
                .filter(|(_, nbrs)| nbrs.len() >= 2)
                .max_by(|(v, a), (w, b)| a.len().cmp(&b.len()).then(w.cmp(v)));
            if let Some((v, nbrs)) = pivot {
                // v in the solution.
                chosen.push(v);
                self.run(&g.remove_vertices(&[v]), chosen, depth + 1)?;
                chosen.pop();

                // v kept: its undirected neighbours go, then v is contracted.
                if g.has_self_loop(v) {
                    self.stats.nodes += 1;
                    self.stats.leaves += 1;
                    return Ok(());
                }
                let rest = g.remove_vertices(&nbrs).contract(v)?;
                if rest.vertex_count() + nbrs.len() + 1 != g.vertex_count() {
                    return Err(Error::Internal(format!(
                        "contraction branch removed {} vertices, expected {}",
                        g.vertex_count() - rest.vertex_count(),
                        nbrs.len() + 1
                    )));
                }
                let mark = chosen.len();
                chosen.extend_from_slice(&nbrs);
                self.run(&rest, chosen, depth + 1)?;
                chosen.truncate(mark);
                return Ok(());
            }
        }

        self.stats.leaves += 1;
        if g.edge_pair_count() > budget {
            return Ok(());
        }
        self.stats.matching_calls += 1;
        if let Some(cover) = partition::min_cover_within(g, budget)? {
            let mut solution = chosen.clone();
            solution.extend(cover);
            self.cap = solution.len() as i64 - 1;
            self.best = Some(solution);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_edge_set_acyclic_blocks() {
        let mut g = MixedMultigraph::new(vec![vec![0, 1], vec![2]], 2).unwrap();
        g.add_arc(0, 1, 1).unwrap();
        let mut inst = DfvcInstance::new(g, 0);
        assert_eq!(solve_branching(&mut inst).unwrap(), Some(vec![]));
    }

    #[test]
    fn budget_one_forces_hub_deletion() {
        // v=0 joined to w1=1 and w2=2.
        let mut g = MixedMultigraph::new(vec![vec![0], vec![1], vec![2]], 1).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        let mut inst = DfvcInstance::new(g, 1);
        assert_eq!(solve_branching(&mut inst).unwrap(), Some(vec![0]));
        assert!(inst.stats.leaves >= 2);
        let mut inst0 = DfvcInstance::new(inst.graph.clone(), 0);
        assert_eq!(solve_branching(&mut inst0).unwrap(), None);
    }

    #[test]
    fn backward_arc_becomes_edge() {
        // Order m1, a, m2, b with the single backward arc b -> a.
        let (m1, a, m2, b) = (0, 1, 2, 3);
        let t = Tournament::from_fn(4, |i, j| !(i == a && j == b));
        assert!(t.has_arc(b, a) && t.has_arc(m1, a) && t.has_arc(a, m2) && t.has_arc(m2, b));
        let Reduction::Instance(inst) = reduce_to_dfvc(&t, &[m1, m2], 1).unwrap() else {
            panic!("T[M] is acyclic");
        };
        assert_eq!(inst.graph.edges().collect::<Vec<_>>(), vec![(a, b, 1)]);
        assert_eq!(inst.graph.arcs().count(), 0);
        assert_eq!(inst.graph.parts(), &[vec![a], vec![b]]);
    }

    #[test]
    fn cyclic_m_is_trivially_no() {
        let t = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
        assert!(matches!(
            reduce_to_dfvc(&t, &[0, 1, 2], 3).unwrap(),
            Reduction::TrivialNo
        ));
    }

    #[test]
    fn inconsistent_vertex_is_a_contract_violation() {
        let t = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
        assert!(matches!(
            reduce_to_dfvc(&t, &[0, 1], 1),
            Err(Error::InconsistentVertex(2))
        ));
    }

    #[test]
    fn transitive_with_maximal_m() {
        let t = Tournament::transitive(6);
        let Reduction::Instance(mut inst) = reduce_to_dfvc(&t, &[0, 2, 4], 0).unwrap() else {
            panic!("acyclic");
        };
        assert_eq!(inst.graph.edge_count(), 0);
        assert_eq!(solve_branching(&mut inst).unwrap(), Some(vec![]));
    }
}
