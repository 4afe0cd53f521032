use std::collections::HashMap;

/// Minimal directed view used by the generic acyclicity routines.
///
/// Vertex identifiers are arbitrary labels; parallel arcs may be reported
/// once or several times.
pub trait Digraph {
    fn vertex_ids(&self) -> Vec<usize>;
    fn successors(&self, v: usize) -> Vec<usize>;
}

/// Depth-first topological sort.
///
/// Returns an order in which every arc points left to right, or a directed
/// cycle (listed in arc order, first vertex not repeated) if none exists.
/// A self-loop is reported as a cycle of length one.
pub fn topological_sort<G: Digraph + ?Sized>(g: &G) -> Result<Vec<usize>, Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Fresh,
        Open,
        Done,
    }

    let ids = g.vertex_ids();
    let index: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let succ: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.successors(v).into_iter().map(|w| index[&w]).collect())
        .collect();

    let mut mark = vec![Mark::Fresh; ids.len()];
    let mut post = Vec::with_capacity(ids.len());
    // (vertex, next successor slot)
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..ids.len() {
        if mark[root] != Mark::Fresh {
            continue;
        }
        mark[root] = Mark::Open;
        stack.push((root, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = succ[v].get(*next) {
                *next += 1;
                match mark[w] {
                    Mark::Fresh => {
                        mark[w] = Mark::Open;
                        stack.push((w, 0));
                    }
                    Mark::Open => {
                        let start = stack.iter().position(|&(u, _)| u == w).unwrap();
                        return Err(stack[start..].iter().map(|&(u, _)| ids[u]).collect());
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                post.push(ids[v]);
                stack.pop();
            }
        }
    }
    post.reverse();
    Ok(post)
}

pub fn is_acyclic<G: Digraph + ?Sized>(g: &G) -> bool {
    topological_sort(g).is_ok()
}
