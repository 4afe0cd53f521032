//! Balanced edge partitions and the divide and conquer solver for
//! d-FVC instances whose undirected edges form a matching.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{MixedMultigraph, UndirectedMultigraph};

/// A two-colouring `(A, B)` with its edge counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Edges inside `A`.
    pub m_a: usize,
    /// Edges inside `B`.
    pub m_b: usize,
    /// Edges between `A` and `B`.
    pub m_c: usize,
    /// Improving moves the local search applied.
    pub moves: usize,
}

impl EdgePartition {
    pub fn edge_count(&self) -> usize {
        self.m_a + self.m_b + self.m_c
    }

    /// `|m_A - m/4| <= d/2`, `|m_B - m/4| <= d/2` and `|m_C - m/2| <= d`.
    pub fn within_bounds(&self, d: usize) -> bool {
        let m = self.edge_count() as i64;
        let d = d as i64;
        (4 * self.m_a as i64 - m).abs() <= 2 * d
            && (4 * self.m_b as i64 - m).abs() <= 2 * d
            && (2 * self.m_c as i64 - m).abs() <= 2 * d
    }
}

/// Local search on `|m_A - m/4| + |m_B - m/4|`.
///
/// Starts with even ids in `A` and odd ids in `B`; isolated vertices stay
/// in `A`. Each round scans `A` then `B` by ascending id and applies the
/// first single-vertex move that strictly lowers the measure.
pub fn balanced_partition(g: &UndirectedMultigraph) -> EdgePartition {
    let n = g.vertex_count();
    let m = g.edge_count() as i64;
    let adj = g.adjacency();
    let mut in_a: Vec<bool> = (0..n).map(|v| adj[v].is_empty() || v % 2 == 0).collect();
    // Edges from v to A-vertices / B-vertices.
    let mut to_a = vec![0i64; n];
    let mut to_b = vec![0i64; n];
    for v in 0..n {
        for &w in &adj[v] {
            if in_a[w] {
                to_a[v] += 1;
            } else {
                to_b[v] += 1;
            }
        }
    }
    let (mut m_a, mut m_b) = (0i64, 0i64);
    for &(u, v) in g.edges() {
        match (in_a[u], in_a[v]) {
            (true, true) => m_a += 1,
            (false, false) => m_b += 1,
            _ => {}
        }
    }
    // Four times the measure, to stay in integers.
    let measure = |ma: i64, mb: i64| (4 * ma - m).abs() + (4 * mb - m).abs();

    let mut moves = 0;
    loop {
        let current = measure(m_a, m_b);
        let a_side = (0..n).filter(|&v| in_a[v]);
        let b_side = (0..n).filter(|&v| !in_a[v]);
        let candidate = a_side.chain(b_side).find(|&v| {
            let (ma, mb) = if in_a[v] {
                (m_a - to_a[v], m_b + to_b[v])
            } else {
                (m_a + to_a[v], m_b - to_b[v])
            };
            measure(ma, mb) < current
        });
        let Some(v) = candidate else { break };
        if in_a[v] {
            m_a -= to_a[v];
            m_b += to_b[v];
            for &w in &adj[v] {
                to_a[w] -= 1;
                to_b[w] += 1;
            }
        } else {
            m_a += to_a[v];
            m_b -= to_b[v];
            for &w in &adj[v] {
                to_a[w] += 1;
                to_b[w] -= 1;
            }
        }
        in_a[v] = !in_a[v];
        moves += 1;
    }

    EdgePartition {
        a: (0..n).filter(|&v| in_a[v]).collect(),
        b: (0..n).filter(|&v| !in_a[v]).collect(),
        m_a: m_a as usize,
        m_b: m_b as usize,
        m_c: (m - m_a - m_b) as usize,
        moves,
    }
}

/// A partition `(X, Y)` of a matching instance along whole parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftedPartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Undirected edges across, as `(x endpoint, y endpoint)`.
    pub cross: Vec<(usize, usize)>,
    pub inside_x: usize,
    pub inside_y: usize,
    /// `|E|`, distinct pairs.
    pub s: usize,
    /// Maximum degree of the quotient multigraph; at most the largest part.
    pub d: usize,
}

impl LiftedPartition {
    /// The three count bounds of the balanced partition, transferred to `E`.
    pub fn within_bounds(&self) -> bool {
        let s = self.s as i64;
        let d = self.d as i64;
        (4 * self.inside_x as i64 - s).abs() <= 2 * d
            && (4 * self.inside_y as i64 - s).abs() <= 2 * d
            && (2 * self.cross.len() as i64 - s).abs() <= 2 * d
    }
}

/// Partitions the parts of `g` through a balanced partition of the quotient
/// multigraph with one vertex per part and one edge per undirected edge.
/// No arc crosses `(X, Y)` because arcs stay inside parts.
pub fn lift_partition(g: &MixedMultigraph) -> Result<LiftedPartition> {
    g.check_matching()?;
    let part = |v: usize| g.part_of(v).expect("edge endpoint is a vertex");
    let pairs: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let z = UndirectedMultigraph::new(
        g.parts().len(),
        pairs.iter().map(|&(u, v)| (part(u), part(v))).collect(),
    )?;
    let split = balanced_partition(&z);
    let mut on_x = vec![false; g.parts().len()];
    for &i in &split.a {
        on_x[i] = true;
    }
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for (i, p) in g.parts().iter().enumerate() {
        if on_x[i] { &mut x } else { &mut y }.extend_from_slice(p);
    }
    x.sort_unstable();
    y.sort_unstable();
    let (mut inside_x, mut inside_y, mut cross) = (0, 0, Vec::new());
    for &(u, v) in &pairs {
        match (on_x[part(u)], on_x[part(v)]) {
            (true, true) => inside_x += 1,
            (false, false) => inside_y += 1,
            (true, false) => cross.push((u, v)),
            (false, true) => cross.push((v, u)),
        }
    }
    Ok(LiftedPartition {
        x,
        y,
        cross,
        inside_x,
        inside_y,
        s: pairs.len(),
        d: z.max_degree(),
    })
}

/// Minimum feedback vertex cover of a matching instance.
pub fn solve_matching(g: &MixedMultigraph) -> Result<Vec<usize>> {
    min_cover_within(g, usize::MAX)?
        .ok_or_else(|| Error::Internal("deleting every vertex is always a cover".into()))
}

/// Minimum feedback vertex cover of a matching instance if it has at most
/// `limit` vertices, else `None`.
///
/// Components are solved independently. A component with `s <= 2d`
/// undirected edges is brute forced. Otherwise it is split by
/// [`lift_partition`]; for every choice of which endpoint of each crossing
/// edge is deleted, the remainder is solved recursively.
pub fn min_cover_within(g: &MixedMultigraph, limit: usize) -> Result<Option<Vec<usize>>> {
    g.check_matching()?;
    let mut cover = Vec::new();
    for component in g.components() {
        let left = limit - cover.len();
        match component_cover(&component, left)? {
            Some(part) => cover.extend(part),
            None => return Ok(None),
        }
    }
    cover.sort_unstable();
    Ok(Some(cover))
}

fn component_cover(g: &MixedMultigraph, limit: usize) -> Result<Option<Vec<usize>>> {
    let s = g.edge_pair_count();
    let d = g.max_part_size();
    if s <= 2 * d {
        return Ok(brute_force_cover(g, limit));
    }
    let split = lift_partition(g)?;
    if split.cross.is_empty() {
        return Err(Error::Internal(format!(
            "empty cross set with s = {s} > 2d = {}",
            2 * d
        )));
    }
    if !split.within_bounds() {
        return Err(Error::Internal(format!(
            "lifted partition violates its bounds: {split:?}"
        )));
    }
    let side_cap = s + 2 * split.d;
    if 4 * split.inside_x > side_cap || 4 * split.inside_y > side_cap {
        return Err(Error::Internal(
            "side carries more than s/4 + d/2 edges".into(),
        ));
    }
    let c = split.cross.len();
    if c >= 64 {
        return Err(Error::TooLarge { size: c, limit: 63 });
    }
    // Every candidate deletes exactly c endpoints plus a recursive cover.
    let mut cap = limit;
    let mut best: Option<Vec<usize>> = None;
    for choice in 0u64..1 << c {
        if cap < c {
            break;
        }
        let deleted: Vec<usize> = split
            .cross
            .iter()
            .enumerate()
            .map(|(i, &(xv, yv))| if choice >> i & 1 == 1 { xv } else { yv })
            .collect();
        if deleted.iter().unique().count() != c {
            return Err(Error::Internal("crossing edges share an endpoint".into()));
        }
        let rest = g.remove_vertices(&deleted);
        if let Some(sub) = min_cover_within(&rest, cap - c)? {
            let mut candidate = deleted;
            candidate.extend(sub);
            cap = candidate.len().saturating_sub(1);
            let done = candidate.len() == c;
            best = Some(candidate);
            if done {
                break;
            }
        }
    }
    Ok(best)
}

/// Smallest cover of size at most `limit`, trying subsets by increasing
/// size and lexicographically within a size.
fn brute_force_cover(g: &MixedMultigraph, limit: usize) -> Option<Vec<usize>> {
    let labels: Vec<usize> = g.vertices().collect();
    let index = |v: usize| labels.binary_search(&v).expect("vertex of g");
    let n = labels.len();
    let mut succ = vec![Vec::new(); n];
    let mut indeg_all = vec![0usize; n];
    for (u, v, _) in g.arcs() {
        let (a, b) = (index(u), index(v));
        succ[a].push(b);
        indeg_all[b] += 1;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (index(u), index(v))).collect();

    let mut removed = vec![false; n];
    let mut indeg = vec![0usize; n];
    let mut stack = Vec::with_capacity(n);
    let mut is_cover = |subset: &[usize]| -> bool {
        removed.iter_mut().for_each(|r| *r = false);
        for &v in subset {
            removed[v] = true;
        }
        if edges.iter().any(|&(a, b)| !removed[a] && !removed[b]) {
            return false;
        }
        // Kahn on the surviving vertices.
        indeg.iter_mut().for_each(|x| *x = 0);
        for a in (0..n).filter(|&a| !removed[a]) {
            for &b in &succ[a] {
                indeg[b] += 1;
            }
        }
        stack.clear();
        stack.extend((0..n).filter(|&v| !removed[v] && indeg[v] == 0));
        let mut seen = 0;
        while let Some(a) = stack.pop() {
            seen += 1;
            for &b in &succ[a] {
                if !removed[b] {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        seen + subset.len() == n
    };

    for r in 0..=limit.min(n) {
        for subset in (0..n).combinations(r) {
            if is_cover(&subset) {
                return Some(subset.into_iter().map(|i| labels[i]).collect());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UndirectedMultigraph {
        UndirectedMultigraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn single_edge() {
        let p = balanced_partition(&graph(2, &[(0, 1)]));
        assert!(p.within_bounds(1));
        assert_eq!((p.m_a, p.m_b), (0, 0));
    }

    #[test]
    fn four_cycle() {
        let p = balanced_partition(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert!(p.within_bounds(2));
        assert_eq!(p.edge_count(), 4);
    }

    #[test]
    fn star_moves_off_the_bad_start() {
        // K_{1,4} with centre 0: the even/odd start puts {0, 2, 4} in A.
        let g = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p = balanced_partition(&g);
        assert!(p.within_bounds(4));
        assert!(p.moves <= 4);
    }

    #[test]
    fn isolated_vertices_stay_in_a() {
        let p = balanced_partition(&graph(4, &[(1, 3)]));
        assert!(p.a.contains(&0) && p.a.contains(&2));
    }

    #[test]
    fn single_part_lifts_to_x() {
        let mut g = MixedMultigraph::new(vec![vec![0, 1, 2]], 3).unwrap();
        g.add_arc(0, 1, 1).unwrap();
        let l = lift_partition(&g).unwrap();
        assert_eq!(l.x, vec![0, 1, 2]);
        assert!(l.y.is_empty() && l.cross.is_empty());
    }

    #[test]
    fn one_edge_needs_one_vertex() {
        let mut g = MixedMultigraph::new(vec![vec![0], vec![1]], 1).unwrap();
        g.add_edge(0, 1).unwrap();
        assert_eq!(solve_matching(&g).unwrap(), vec![0]);
        assert_eq!(min_cover_within(&g, 0).unwrap(), None);
    }

    #[test]
    fn triangle_needs_one_vertex() {
        let mut g = MixedMultigraph::new(vec![vec![0, 1, 2]], 3).unwrap();
        g.add_arc(0, 1, 1).unwrap();
        g.add_arc(1, 2, 1).unwrap();
        g.add_arc(2, 0, 1).unwrap();
        assert_eq!(solve_matching(&g).unwrap().len(), 1);
    }

    #[test]
    fn rejects_non_matching() {
        let mut g = MixedMultigraph::new(vec![vec![0], vec![1], vec![2]], 1).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        assert!(matches!(solve_matching(&g), Err(Error::NotAMatching(0))));
    }

    #[test]
    fn long_matching_chain_recurses() {
        // Parts of size 1 joined in a path-shaped quotient: s = 6 > 2d = 2.
        let parts: Vec<Vec<usize>> = (0..12).map(|v| vec![v]).collect();
        let mut g = MixedMultigraph::new(parts, 1).unwrap();
        for i in 0..6 {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        assert_eq!(solve_matching(&g).unwrap().len(), 6);
    }
}
