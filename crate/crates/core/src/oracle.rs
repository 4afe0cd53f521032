//! Brute-force ground truth.
//!
//! Nothing here shares code with the solving pipeline beyond reading
//! adjacency: tournaments and mixed multigraphs are copied into `u32`
//! masks, acyclicity is decided by peeling sources, and subsets are
//! enumerated by increasing size, lexicographically within a size.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{MixedMultigraph, Tournament};

/// Largest instance the subset enumerations accept.
pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub opt_size: usize,
    pub witness: Vec<usize>,
    /// Subsets examined before the first feasible one.
    pub explored: u64,
}

/// Arc masks over local indices `0..n`; `inn[v]` has bit `u` for `u -> v`.
struct Masks {
    n: usize,
    inn: Vec<u32>,
}

impl Masks {
    fn acyclic(&self, mut alive: u32) -> bool {
        // Repeatedly peel vertices with no in-arc from a live vertex.
        loop {
            if alive == 0 {
                return true;
            }
            let sources = (0..self.n)
                .filter(|&v| alive >> v & 1 == 1 && self.inn[v] & alive == 0)
                .fold(0u32, |acc, v| acc | 1 << v);
            if sources == 0 {
                return false;
            }
            alive &= !sources;
        }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }
}

fn guard(size: usize) -> Result<()> {
    if size > BRUTE_FORCE_LIMIT {
        Err(Error::TooLarge {
            size,
            limit: BRUTE_FORCE_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn tournament_masks(t: &Tournament) -> Masks {
    let n = t.len();
    let mut inn = vec![0u32; n];
    for u in 0..n {
        for (v, slot) in inn.iter_mut().enumerate() {
            if u != v && t.has_arc(u, v) {
                *slot |= 1 << u;
            }
        }
    }
    Masks { n, inn }
}

fn to_mask(set: &[usize]) -> u32 {
    set.iter().fold(0, |acc, &v| acc | 1 << v)
}

/// First subset (by size, then lexicographically) of `pool` accepted by `ok`.
fn first_feasible(
    pool: &[usize],
    max: usize,
    mut ok: impl FnMut(u32) -> bool,
) -> Option<(Vec<usize>, u64)> {
    let mut explored = 0;
    for r in 0..=max.min(pool.len()) {
        for subset in pool.iter().copied().combinations(r) {
            explored += 1;
            if ok(to_mask(&subset)) {
                return Some((subset, explored));
            }
        }
    }
    None
}

/// Minimum feedback vertex set of a tournament with at most 20 vertices.
pub fn brute_min_fvs(t: &Tournament) -> Result<OracleResult> {
    brute_min_fvs_avoiding(t, &[])?
        .ok_or_else(|| Error::Internal("deleting every vertex must be feasible".into()))
}

/// Minimum feedback vertex set disjoint from `forbidden`, if any exists.
pub fn brute_min_fvs_avoiding(t: &Tournament, forbidden: &[usize]) -> Result<Option<OracleResult>> {
    guard(t.len())?;
    let masks = tournament_masks(t);
    let full = masks.full();
    let pool: Vec<usize> = (0..t.len()).filter(|v| !forbidden.contains(v)).collect();
    Ok(
        first_feasible(&pool, pool.len(), |s| masks.acyclic(full & !s)).map(
            |(witness, explored)| OracleResult {
                opt_size: witness.len(),
                witness,
                explored,
            },
        ),
    )
}

/// Every feedback vertex set with at most `k` vertices (not only minimal ones).
pub fn all_fvs_up_to(t: &Tournament, k: usize) -> Result<Vec<Vec<usize>>> {
    guard(t.len())?;
    let masks = tournament_masks(t);
    let full = masks.full();
    let mut found = Vec::new();
    for r in 0..=k.min(t.len()) {
        for subset in (0..t.len()).combinations(r) {
            if masks.acyclic(full & !to_mask(&subset)) {
                found.push(subset);
            }
        }
    }
    Ok(found)
}

/// Minimum feedback vertex cover: `G - S` acyclic and free of undirected edges.
pub fn brute_min_fvc(g: &MixedMultigraph) -> Result<OracleResult> {
    brute_min_fvc_avoiding(g, &[])?
        .ok_or_else(|| Error::Internal("deleting every vertex must be feasible".into()))
}

/// Minimum feedback vertex cover containing none of `forbidden`.
pub fn brute_min_fvc_avoiding(
    g: &MixedMultigraph,
    forbidden: &[usize],
) -> Result<Option<OracleResult>> {
    guard(g.vertex_count())?;
    let labels: Vec<usize> = g.vertices().collect();
    let local = |v: usize| labels.binary_search(&v).expect("label of this graph");
    let mut inn = vec![0u32; labels.len()];
    for (u, v, _) in g.arcs() {
        inn[local(v)] |= 1 << local(u);
    }
    let edges: Vec<u32> = g
        .edges()
        .map(|(u, v, _)| 1 << local(u) | 1 << local(v))
        .collect();
    let masks = Masks {
        n: labels.len(),
        inn,
    };
    let full = masks.full();
    let pool: Vec<usize> = (0..labels.len())
        .filter(|&i| !forbidden.contains(&labels[i]))
        .collect();
    let found = first_feasible(&pool, pool.len(), |s| {
        edges.iter().all(|&e| e & s != 0) && masks.acyclic(full & !s)
    });
    Ok(found.map(|(subset, explored)| OracleResult {
        opt_size: subset.len(),
        witness: subset.into_iter().map(|i| labels[i]).collect(),
        explored,
    }))
}

/// Three-way branching on a triangle, depth at most `k`.
///
/// Returns some feedback vertex set of size at most `k`, or `None`.
pub fn triangle_branch_fvs(t: &Tournament, k: usize) -> Option<Vec<usize>> {
    fn go(
        t: &Tournament,
        alive: &mut fixedbitset::FixedBitSet,
        k: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let Some(tri) = t.find_triangle_within(alive) else {
            return true;
        };
        if k == 0 {
            return false;
        }
        for v in tri {
            alive.set(v, false);
            chosen.push(v);
            if go(t, alive, k - 1, chosen) {
                return true;
            }
            chosen.pop();
            alive.set(v, true);
        }
        false
    }

    let mut alive = t.full_set();
    let mut chosen = Vec::new();
    go(t, &mut alive, k, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}
