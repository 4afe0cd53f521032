//! Greedy triangle-deletion 3-approximation, the kernel plug-in point and
//! witness verification.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{SubTournament, Tournament};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// More than `k` vertex-disjoint triangles exist, so every FVS exceeds `k`.
    NoSolutionWithinBudget,
    Found,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxResult {
    pub verdict: Verdict,
    /// Union of the deleted triangles when `verdict == Found`, else empty.
    pub fvs: Vec<usize>,
    /// The deleted triangles, in deletion order. Pairwise vertex-disjoint.
    pub triangles: Vec<[usize; 3]>,
}

impl ApproxResult {
    pub fn triangles_removed(&self) -> usize {
        self.triangles.len()
    }
}

/// Deletes the lexicographically smallest triangle until none is left, or
/// until `k + 1` disjoint triangles have been found.
pub fn greedy_3_approx(t: &Tournament, k: usize) -> ApproxResult {
    let mut alive = t.full_set();
    let mut triangles = Vec::new();
    while let Some(tri) = t.find_triangle_within(&alive) {
        triangles.push(tri);
        if triangles.len() > k {
            return ApproxResult {
                verdict: Verdict::NoSolutionWithinBudget,
                fvs: Vec::new(),
                triangles,
            };
        }
        for v in tri {
            alive.set(v, false);
        }
    }
    let mut fvs: Vec<usize> = triangles.iter().flatten().copied().collect();
    fvs.sort_unstable();
    ApproxResult {
        verdict: Verdict::Found,
        fvs,
        triangles,
    }
}

/// Output of a kernelization: an equivalent, no larger instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOutput {
    pub reduced: Tournament,
    pub k_reduced: usize,
    /// `ids[reduced vertex] = input vertex`.
    pub ids: Vec<usize>,
}

impl KernelOutput {
    /// Maps a solution of the reduced instance back to input ids.
    pub fn lift(&self, solution: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = solution.iter().map(|&x| self.ids[x]).collect();
        v.sort_unstable();
        v
    }
}

/// Polynomial-time preprocessing that preserves the yes/no answer.
pub trait Kernel {
    fn kernelize(&self, t: &Tournament, k: usize) -> KernelOutput;
}

/// Deletes vertices lying on no triangle until none is left.
///
/// In a tournament a vertex on a directed cycle also lies on a directed
/// triangle, so such vertices are on no cycle at all and never need to be
/// deleted. The budget is unchanged.
#[derive(Clone, Copy, Debug, Default)]
pub struct TriangleFreeVertexRule;

impl Kernel for TriangleFreeVertexRule {
    fn kernelize(&self, t: &Tournament, k: usize) -> KernelOutput {
        let mut alive = t.full_set();
        loop {
            let dead: Vec<usize> = alive
                .ones()
                .filter(|&v| !t.on_triangle_within(v, &alive))
                .collect();
            if dead.is_empty() {
                break;
            }
            for v in dead {
                alive.set(v, false);
            }
        }
        let keep: Vec<usize> = alive.ones().collect();
        let SubTournament { tournament, ids } =
            t.induced(&keep).expect("alive vertices are in range");
        KernelOutput {
            reduced: tournament,
            k_reduced: k,
            ids,
        }
    }
}

/// Default kernel used by the solver.
pub fn kernelize(t: &Tournament, k: usize) -> KernelOutput {
    TriangleFreeVertexRule.kernelize(t, k)
}

/// Whether `T - s` is acyclic.
pub fn verify_fvs(t: &Tournament, s: &[usize]) -> Result<bool> {
    let removed = t.vertex_set(s)?;
    let mut rest = t.full_set();
    rest.difference_with(&removed);
    Ok(t.is_acyclic_on(&rest))
}
