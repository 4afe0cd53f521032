//! Fixture loading and definition-level checks that do not go through the
//! solver's own graph code.

#![allow(dead_code)]

use std::path::PathBuf;

use tfvs_core::{MixedMultigraph, Tournament};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Records of a corpus (blank-line separated) zipped with their expected lines.
pub fn corpus(name: &str) -> Vec<(String, String)> {
    let dir = fixture_dir();
    let records = std::fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap();
    let expected = std::fs::read_to_string(dir.join(format!("{name}_expected.txt"))).unwrap();
    let records: Vec<String> = records
        .split("\n\n")
        .filter(|r| !r.trim().is_empty())
        .map(|r| format!("{}\n", r.trim_end()))
        .collect();
    let expected: Vec<String> = expected.lines().map(str::to_owned).collect();
    assert_eq!(
        records.len(),
        expected.len(),
        "corpus {name} is out of sync"
    );
    records.into_iter().zip(expected).collect()
}

/// Splits off a trailing `keyword ids...` line.
pub fn split_tail<'a>(record: &'a str, keyword: &str) -> (&'a str, Vec<usize>) {
    let trimmed = record.trim_end();
    let cut = trimmed.rfind('\n').unwrap();
    let (body, tail) = (&trimmed[..=cut], &trimmed[cut + 1..]);
    let rest = tail.strip_prefix(keyword).unwrap();
    let ids = rest
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    (body, ids)
}

/// Acyclicity of `T[set]` by repeatedly removing vertices with no in-arc.
pub fn acyclic_on(t: &Tournament, set: &[usize]) -> bool {
    let mut alive = set.to_vec();
    while !alive.is_empty() {
        let before = alive.len();
        let sources: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| !alive.iter().any(|&u| u != v && t.has_arc(u, v)))
            .collect();
        alive.retain(|v| !sources.contains(v));
        if alive.len() == before {
            return false;
        }
    }
    true
}

pub fn is_fvs(t: &Tournament, s: &[usize]) -> bool {
    let rest: Vec<usize> = (0..t.len()).filter(|v| !s.contains(v)).collect();
    acyclic_on(t, &rest)
}

/// `G - s` has no undirected edge and no directed cycle (self-loops included).
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
    while !alive.is_empty() {
        let before = alive.len();
        let keep: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| arcs.iter().any(|&(u, w)| w == v && alive.contains(&u)))
            .collect();
        alive = keep;
        if alive.len() == before {
            return false;
        }
    }
    true
}

/// Vertices of `set` in topological order, if `T[set]` is acyclic.
pub fn order_by_peeling(t: &Tournament, set: &[usize]) -> Option<Vec<usize>> {
    let mut alive = set.to_vec();
    let mut order = Vec::new();
    while !alive.is_empty() {
        let source = alive
            .iter()
            .copied()
            .find(|&v| !alive.iter().any(|&u| u != v && t.has_arc(u, v)))?;
        order.push(source);
        alive.retain(|&v| v != source);
    }
    Some(order)
}

/// Sizes of the M-blocks of `T - p`, straight from the definition: a vertex
/// lies before the first M-vertex, between two consecutive ones, or after
/// the last. `None` if `T[M]` is cyclic or some vertex outside `p` is
/// inconsistent with `M`.
pub fn block_sizes(t: &Tournament, m: &[usize], p: &[usize]) -> Option<Vec<usize>> {
    let order = order_by_peeling(t, m)?;
    let mut sizes = vec![0; order.len() + 1];
    for v in (0..t.len()).filter(|v| !m.contains(v) && !p.contains(v)) {
        let mut with_v = m.to_vec();
        with_v.push(v);
        if !acyclic_on(t, &with_v) {
            return None;
        }
        let slot = if order.is_empty() || t.has_arc(v, order[0]) {
            Some(0)
        } else if t.has_arc(order[order.len() - 1], v) {
            Some(order.len())
        } else {
            (0..order.len() - 1)
                .find(|&i| t.has_arc(order[i], v) && t.has_arc(v, order[i + 1]))
                .map(|i| i + 1)
        };
        sizes[slot?] += 1;
    }
    Some(sizes)
}
