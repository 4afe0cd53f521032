use fixedbitset::FixedBitSet;

use super::digraph::Digraph;
use crate::error::{Error, Result};

/// A complete orientation of `K_n` on vertices `0..n`.
///
/// Rows are kept in both directions so that in- and out-neighbourhood
/// queries are plain bitset reads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament {
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
}

/// A tournament obtained by deleting vertices, with `ids[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubTournament {
    pub tournament: Tournament,
    pub ids: Vec<usize>,
}

impl SubTournament {
    pub fn lift(&self, local: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = local.iter().map(|&x| self.ids[x]).collect();
        v.sort_unstable();
        v
    }

    /// Local id of an original vertex, if it survived.
    pub fn local(&self, original: usize) -> Option<usize> {
        self.ids.binary_search(&original).ok()
    }
}

impl Tournament {
    /// Builds a tournament where `forward(i, j)` for `i < j` says whether the
    /// arc goes `i -> j`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inn = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                let (u, v) = if forward(i, j) { (i, j) } else { (j, i) };
                out[u].insert(v);
                inn[v].insert(u);
            }
        }
        Tournament { out, inn }
    }

    /// Validates an adjacency matrix: zero diagonal and exactly one arc per pair.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if row[i] {
                return Err(Error::SelfLoop(i));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, other) in rows.iter().enumerate().skip(i + 1) {
                if row[j] == other[i] {
                    return Err(Error::InvalidInstance(format!(
                        "pair ({i}, {j}) must carry exactly one arc"
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    /// The transitive tournament `0 -> 1 -> ... -> n-1`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// The rotational tournament: `i` beats `i+1, ..., i+(n-1)/2` (mod n).
    /// For even `n` the antipodal pair is oriented from the smaller id.
    pub fn rotational(n: usize) -> Self {
        Self::from_fn(n, |i, j| 2 * (j - i) <= n)
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_set(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    pub fn in_set(&self, v: usize) -> &FixedBitSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones(..)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones(..)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.len(),
            })
        }
    }

    /// Bitset over `0..n` holding `vertices`.
    pub fn vertex_set(&self, vertices: &[usize]) -> Result<FixedBitSet> {
        let mut s = FixedBitSet::with_capacity(self.len());
        for &v in vertices {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert_range(..);
        s
    }

    /// Topological order of `T[set]`, or `None` when it is cyclic.
    ///
    /// A sub-tournament is acyclic iff its in-degree sequence is `0, 1, ...`,
    /// and the vertex with in-degree `i` then sits at position `i`.
    pub fn order_of(&self, set: &FixedBitSet) -> Option<Vec<usize>> {
        let size = set.count_ones(..);
        let mut order = vec![usize::MAX; size];
        for v in set.ones() {
            let pos = self.inn[v].intersection_count(set);
            if order[pos] != usize::MAX {
                return None;
            }
            order[pos] = v;
        }
        Some(order)
    }

    pub fn is_acyclic_on(&self, set: &FixedBitSet) -> bool {
        self.order_of(set).is_some()
    }

    pub fn is_acyclic(&self) -> bool {
        self.order_of(&self.full_set()).is_some()
    }

    /// The unique topological order, or a directed triangle as witness.
    pub fn topological_sort(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        match self.order_of(&self.full_set()) {
            Some(order) => Ok(order),
            None => Err(self
                .find_triangle()
                .expect("cyclic tournaments contain a triangle")
                .to_vec()),
        }
    }

    /// Lexicographically smallest directed triangle `(a, b, c)`, `a -> b -> c -> a`.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        self.find_triangle_within(&self.full_set())
    }

    /// As [`Tournament::find_triangle`], restricted to `T[alive]`.
    pub fn find_triangle_within(&self, alive: &FixedBitSet) -> Option<[usize; 3]> {
        for a in alive.ones() {
            for b in self.out[a].intersection(alive) {
                if let Some(c) = first_common(&self.out[b], &self.inn[a], alive) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// Whether `v` lies on a directed triangle of `T[alive]`.
    pub fn on_triangle_within(&self, v: usize, alive: &FixedBitSet) -> bool {
        self.out[v]
            .intersection(alive)
            .any(|b| first_common(&self.out[b], &self.inn[v], alive).is_some())
    }

    /// `N+(u) ∩ N-(v) \ {u, v}`.
    pub fn between(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.out[u]
            .intersection(&self.inn[v])
            .filter(|&w| w != u && w != v)
            .collect())
    }

    /// `T[keep]`, relabelled `0..keep.len()` in ascending original order.
    pub fn induced(&self, keep: &[usize]) -> Result<SubTournament> {
        let mut ids = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &v in &ids {
            self.check_vertex(v)?;
        }
        let tournament = Tournament::from_fn(ids.len(), |i, j| self.has_arc(ids[i], ids[j]));
        Ok(SubTournament { tournament, ids })
    }

    /// `T - removed`.
    pub fn delete(&self, removed: &[usize]) -> Result<SubTournament> {
        let gone = self.vertex_set(removed)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&v| !gone.contains(v)).collect();
        self.induced(&keep)
    }

    /// Row-wise adjacency matrix.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.has_arc(i, j)).collect())
            .collect()
    }
}

impl Digraph for Tournament {
    fn vertex_ids(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn successors(&self, v: usize) -> Vec<usize> {
        self.out[v].ones().collect()
    }
}

/// Smallest element of `a ∩ b ∩ c`.
fn first_common(a: &FixedBitSet, b: &FixedBitSet, c: &FixedBitSet) -> Option<usize> {
    let bits = usize::BITS as usize;
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .zip(c.as_slice())
        .enumerate()
        .find_map(|(i, ((x, y), z))| {
            let w = x & y & z;
            (w != 0).then(|| i * bits + w.trailing_zeros() as usize)
        })
}
