use std::collections::{BTreeMap, BTreeSet};

use super::digraph::{self, Digraph};
use crate::error::{Error, Result};

/// Block-partitioned mixed multigraph, the working object of d-FVC.
///
/// Vertices carry arbitrary `usize` labels. Directed arcs stay inside a
/// part and are stored with multiplicities; undirected edges join distinct
/// parts. Contraction may create 2-cycles and, when it closes a 2-cycle,
/// self-loops; a self-loop marks a vertex that every solution must delete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedMultigraph {
    parts: Vec<Vec<usize>>,
    part_of: BTreeMap<usize, usize>,
    arcs: BTreeMap<(usize, usize), u64>,
    edges: BTreeMap<(usize, usize), u64>,
    d: usize,
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl MixedMultigraph {
    /// Empty parts are dropped; every part must have at most `d` vertices.
    pub fn new(parts: Vec<Vec<usize>>, d: usize) -> Result<Self> {
        let mut part_of = BTreeMap::new();
        let mut kept = Vec::with_capacity(parts.len());
        for mut part in parts.into_iter().filter(|p| !p.is_empty()) {
            part.sort_unstable();
            if part.len() > d {
                return Err(Error::InvalidInstance(format!(
                    "part of size {} exceeds d = {d}",
                    part.len()
                )));
            }
            for &v in &part {
                if part_of.insert(v, kept.len()).is_some() {
                    return Err(Error::InvalidInstance(format!(
                        "vertex {v} appears in two parts"
                    )));
                }
            }
            kept.push(part);
        }
        Ok(MixedMultigraph {
            parts: kept,
            part_of,
            arcs: BTreeMap::new(),
            edges: BTreeMap::new(),
            d,
        })
    }

    /// Adds `multiplicity` parallel arcs `u -> v` inside one part.
    pub fn add_arc(&mut self, u: usize, v: usize, multiplicity: u64) -> Result<()> {
        let (pu, pv) = (self.require(u)?, self.require(v)?);
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if pu != pv {
            return Err(Error::InvalidInstance(format!(
                "arc {u}->{v} crosses parts"
            )));
        }
        if multiplicity > 0 {
            let m = self.arcs.entry((u, v)).or_insert(0);
            *m = m.saturating_add(multiplicity);
        }
        Ok(())
    }

    /// Adds one undirected edge between different parts.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (pu, pv) = (self.require(u)?, self.require(v)?);
        if pu == pv {
            return Err(Error::InvalidInstance(format!(
                "undirected edge {{{u}, {v}}} inside one part"
            )));
        }
        *self.edges.entry(edge_key(u, v)).or_insert(0) += 1;
        Ok(())
    }

    fn require(&self, v: usize) -> Result<usize> {
        self.part_of.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.part_of.get(&v).copied()
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.part_of.contains_key(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.part_of.keys().copied()
    }

    /// `(tail, head, multiplicity)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.arcs.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// `(min, max, multiplicity)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Undirected edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }

    /// Number of distinct vertex pairs joined by undirected edges.
    pub fn edge_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_self_loop(&self, v: usize) -> bool {
        self.arcs.contains_key(&(v, v))
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<(usize, u64)> {
        self.arcs
            .range((v, 0)..=(v, usize::MAX))
            .map(|(&(_, w), &m)| (w, m))
            .collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<(usize, u64)> {
        self.arcs
            .iter()
            .filter(|(&(_, w), _)| w == v)
            .map(|(&(u, _), &m)| (u, m))
            .collect()
    }

    /// `N_E(v)`: distinct undirected neighbours.
    pub fn undirected_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Distinct undirected neighbours of every vertex that has any.
    pub fn undirected_adjacency(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in self.edges.keys() {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// Sub-instance on `keep`, with parts restricted accordingly.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Self {
        let parts: Vec<Vec<usize>> = self
            .parts
            .iter()
            .map(|p| p.iter().copied().filter(|v| keep.contains(v)).collect())
            .filter(|p: &Vec<usize>| !p.is_empty())
            .collect();
        let mut part_of = BTreeMap::new();
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                part_of.insert(v, i);
            }
        }
        let alive = |&(u, v): &(usize, usize)| keep.contains(&u) && keep.contains(&v);
        MixedMultigraph {
            parts,
            part_of,
            arcs: self
                .arcs
                .iter()
                .filter(|(k, _)| alive(k))
                .map(|(&k, &m)| (k, m))
                .collect(),
            edges: self
                .edges
                .iter()
                .filter(|(k, _)| alive(k))
                .map(|(&k, &m)| (k, m))
                .collect(),
            d: self.d,
        }
    }

    /// `G - removed`; unknown labels are ignored.
    pub fn remove_vertices(&self, removed: &[usize]) -> Self {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let keep = self.vertices().filter(|v| !gone.contains(v)).collect();
        self.induced(&keep)
    }

    /// `G / v`: deletes `v` and adds an arc `u -> w` for every in-neighbour
    /// `u` and out-neighbour `w` of `v`; multiplicities multiply.
    ///
    /// Requires `N_E(v) = ∅`. A self-loop on `v` is also rejected since no
    /// solution can avoid such a vertex.
    pub fn contract(&self, v: usize) -> Result<Self> {
        self.require(v)?;
        if !self.undirected_neighbors(v).is_empty() {
            return Err(Error::HasUndirectedEdges(v));
        }
        if self.has_self_loop(v) {
            return Err(Error::SelfLoop(v));
        }
        let ins = self.in_neighbors(v);
        let outs = self.out_neighbors(v);
        let mut g = self.remove_vertices(&[v]);
        for &(u, a) in &ins {
            for &(w, b) in &outs {
                let m = g.arcs.entry((u, w)).or_insert(0);
                *m = m.saturating_add(a.saturating_mul(b));
            }
        }
        Ok(g)
    }

    /// Connected components of the underlying undirected graph (arcs and
    /// undirected edges both connect), ordered by smallest vertex.
    pub fn components(&self) -> Vec<Self> {
        let ids: Vec<usize> = self.vertices().collect();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in self.arcs.keys().chain(self.edges.keys()) {
            let (a, b) = (find(&mut parent, index[&u]), find(&mut parent, index[&v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for (i, &v) in ids.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().insert(v);
        }
        groups.values().map(|keep| self.induced(keep)).collect()
    }

    /// Whether no vertex has two distinct undirected neighbours.
    pub fn check_matching(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(a, b) in self.edges.keys() {
            for v in [a, b] {
                if !seen.insert(v) {
                    return Err(Error::NotAMatching(v));
                }
            }
        }
        Ok(())
    }

    pub fn is_acyclic(&self) -> bool {
        digraph::is_acyclic(self)
    }

    pub fn topological_sort(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        digraph::topological_sort(self)
    }

    /// Whether `G - s` is acyclic and has no undirected edge.
    pub fn is_cover(&self, s: &[usize]) -> bool {
        let hit: BTreeSet<usize> = s.iter().copied().collect();
        self.edges
            .keys()
            .all(|(a, b)| hit.contains(a) || hit.contains(b))
            && self.remove_vertices(s).is_acyclic()
    }
}

impl Digraph for MixedMultigraph {
    fn vertex_ids(&self) -> Vec<usize> {
        self.vertices().collect()
    }

    fn successors(&self, v: usize) -> Vec<usize> {
        self.out_neighbors(v).into_iter().map(|(w, _)| w).collect()
    }
}
