//! Random instances and definition-level checks shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfvs_core::{MixedMultigraph, Tournament};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tournament(rng: &mut ChaCha8Rng, n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| rng.random_bool(0.5))
}

/// A transitive tournament under a random relabelling; returns it with its
/// topological order.
pub fn random_acyclic(rng: &mut ChaCha8Rng, n: usize) -> (Tournament, Vec<usize>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rank = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        rank[v] = pos;
    }
    (Tournament::from_fn(n, |i, j| rank[i] < rank[j]), order)
}

/// Transitive order plus `h` vertices with random arcs; optimum is at most `h`.
pub fn planted(rng: &mut ChaCha8Rng, n: usize, h: usize) -> Tournament {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rank = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        rank[v] = pos;
    }
    let noisy = &perm[..h];
    Tournament::from_fn(n, |i, j| {
        if noisy.contains(&i) || noisy.contains(&j) {
            rng.random_bool(0.5)
        } else {
            rank[i] < rank[j]
        }
    })
}

/// Parts of size at most `d`, random intra-part arcs (2-cycles allowed) and
/// `edges` random undirected edges between parts.
pub fn random_mixed(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    d: usize,
    edges: usize,
) -> MixedMultigraph {
    let mut parts = Vec::new();
    let mut next = 0;
    while next < max_vertices {
        let size = rng.random_range(1..=d).min(max_vertices - next);
        parts.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let mut g = MixedMultigraph::new(parts.clone(), d).unwrap();
    for part in &parts {
        for &u in part {
            for &v in part {
                if u != v && rng.random_bool(0.4) {
                    g.add_arc(u, v, 1).unwrap();
                }
            }
        }
    }
    for _ in 0..edges {
        let (a, b) = (rng.random_range(0..next), rng.random_range(0..next));
        if g.part_of(a) != g.part_of(b) {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

/// Random matching instance: at most `s` undirected edges with distinct endpoints.
pub fn random_matching(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    d: usize,
    s: usize,
) -> MixedMultigraph {
    let mut g = random_mixed(rng, max_vertices, d, 0);
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut placed = 0;
    for _ in 0..20 * s {
        if placed == s {
            break;
        }
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        if !used[a] && !used[b] && g.part_of(a) != g.part_of(b) {
            g.add_edge(a, b).unwrap();
            used[a] = true;
            used[b] = true;
            placed += 1;
        }
    }
    g
}

/// Acyclicity of `T[set]` by peeling sources.
pub fn acyclic_on(t: &Tournament, set: &[usize]) -> bool {
    let mut alive = set.to_vec();
    loop {
        if alive.is_empty() {
            return true;
        }
        let before = alive.len();
        let snapshot = alive.clone();
        alive.retain(|&v| snapshot.iter().any(|&u| u != v && t.has_arc(u, v)));
        if alive.len() == before {
            return false;
        }
    }
}

pub fn is_fvs(t: &Tournament, s: &[usize]) -> bool {
    let rest: Vec<usize> = (0..t.len()).filter(|v| !s.contains(v)).collect();
    acyclic_on(t, &rest)
}

/// `G - s` has no undirected edge and no directed cycle.
pub fn is_fvc(g: &MixedMultigraph, s: &[usize]) -> bool {
    if g.edges()
        .any(|(u, v, _)| !s.contains(&u) && !s.contains(&v))
    {
        return false;
    }
    let arcs: Vec<(usize, usize)> = g
        .arcs()
        .filter(|(u, v, _)| !s.contains(u) && !s.contains(v))
        .map(|(u, v, _)| (u, v))
        .collect();
    let mut alive: Vec<usize> = g.vertices().filter(|v| !s.contains(v)).collect();
    loop {
        if alive.is_empty() {
            return true;
        }
        let before = alive.len();
        let snapshot = alive.clone();
        alive.retain(|&v| arcs.iter().any(|&(u, w)| w == v && snapshot.contains(&u)));
        if alive.len() == before {
            return false;
        }
    }
}

/// Whether `cycle` is a directed cycle of `t`.
pub fn is_cycle(t: &Tournament, cycle: &[usize]) -> bool {
    cycle.len() >= 3 && (0..cycle.len()).all(|i| t.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// Tournament from the bits of `code`, one per pair in row-major order.
pub fn from_code(n: usize, code: u32) -> Tournament {
    let mut idx = 0;
    Tournament::from_fn(n, |_, _| {
        let b = code >> idx & 1 == 1;
        idx += 1;
        b
    })
}

/// Every tournament on `n` vertices.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
    (0u32..1 << (n * n.saturating_sub(1) / 2)).map(move |c| from_code(n, c))
}
