use crate::error::{Error, Result};

/// Undirected multigraph on `0..n` without self-loops. Isolated vertices are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
}

impl UndirectedMultigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut degree = vec![0; n];
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        Ok(UndirectedMultigraph { n, edges, degree })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// Adjacency lists with one entry per parallel edge.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}
