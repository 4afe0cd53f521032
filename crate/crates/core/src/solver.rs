//! End-to-end decision procedure for Feedback Vertex Set in Tournaments.

use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::approx::{greedy_3_approx, kernelize, verify_fvs, Verdict};
use crate::dfvc::{reduce_to_dfvc, solve_branching, Reduction};
use crate::error::{Error, Result};
use crate::family::{enumerate_set_pairs, SetPair};
use crate::graph::Tournament;
use crate::oracle::triangle_branch_fvs;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Use three-way triangle branching when `k <= bypass_threshold`.
    pub bypass: bool,
    pub bypass_threshold: usize,
    /// Worker threads for the pair stream; 1 means sequential.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            bypass: true,
            bypass_threshold: 4,
            threads: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

/// Which stage settled the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Acyclic,
    Bypass,
    Approximation,
    Pairs,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    pub answer: Answer,
    /// Input ids, ascending; present iff the answer is YES.
    pub witness: Option<Vec<usize>>,
    pub route: Route,
    pub pairs_examined: u64,
    pub branch_leaves: u64,
    pub max_depth: usize,
    #[serde(serialize_with = "seconds")]
    pub wall_time: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SolveReport {
    /// `YES`/`NO`, then on YES the witness line if requested.
    pub fn render(&self, with_witness: bool) -> String {
        let mut out = format!("{}\n", self.answer);
        if let (true, Some(w)) = (with_witness, &self.witness) {
            let ids: Vec<String> = w.iter().map(usize::to_string).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Counters of one `(M, P)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairMetrics {
    /// Position in the pair stream, from 0.
    pub index: u64,
    pub m_size: usize,
    pub p_size: usize,
    pub d_instance: usize,
    /// Budget left for the d-FVC instance.
    pub budget: usize,
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: usize,
    pub matching_calls: u64,
    pub found: bool,
}

/// Decides whether `t` has a feedback vertex set of size at most `k`.
pub fn tfvs_solve(t: &Tournament, k: usize, opts: &SolveOptions) -> Result<SolveReport> {
    tfvs_solve_observed(t, k, opts, &|_| {})
}

/// [`tfvs_solve`] that reports every processed pair to `observer`.
///
/// In sequential mode the observer sees pairs in stream order and the
/// witness comes from the first successful pair.
pub fn tfvs_solve_observed(
    t: &Tournament,
    k: usize,
    opts: &SolveOptions,
    observer: &(dyn Fn(&PairMetrics) + Sync),
) -> Result<SolveReport> {
    let start = Instant::now();
    let finish = |answer, witness, route, stats: (u64, u64, usize)| SolveReport {
        answer,
        witness,
        route,
        pairs_examined: stats.0,
        branch_leaves: stats.1,
        max_depth: stats.2,
        wall_time: start.elapsed(),
    };

    if t.is_acyclic() {
        return Ok(finish(
            Answer::Yes,
            Some(Vec::new()),
            Route::Acyclic,
            (0, 0, 0),
        ));
    }
    if opts.bypass && k <= opts.bypass_threshold {
        let found = triangle_branch_fvs(t, k);
        let answer = if found.is_some() {
            Answer::Yes
        } else {
            Answer::No
        };
        let report = finish(answer, found, Route::Bypass, (0, 0, 0));
        return checked(t, k, report);
    }

    let kernel = kernelize(t, k);
    let (tk, kk) = (&kernel.reduced, kernel.k_reduced);
    if greedy_3_approx(tk, kk).verdict == Verdict::NoSolutionWithinBudget {
        return Ok(finish(Answer::No, None, Route::Approximation, (0, 0, 0)));
    }
    let pairs = enumerate_set_pairs(tk, kk)
        .ok_or_else(|| Error::Internal("approximation disagreed with itself".into()))?;

    let examined = AtomicU64::new(0);
    let leaves = AtomicU64::new(0);
    let depth = AtomicUsize::new(0);
    let process = |(index, pair): (usize, SetPair)| -> Result<Option<Vec<usize>>> {
        examined.fetch_add(1, Ordering::Relaxed);
        let (found, metrics) = solve_pair(tk, kk, &pair, index as u64)?;
        leaves.fetch_add(metrics.leaves, Ordering::Relaxed);
        depth.fetch_max(metrics.max_depth, Ordering::Relaxed);
        observer(&metrics);
        Ok(found)
    };

    let found = if opts.threads <= 1 {
        let mut found = None;
        for item in pairs.enumerate() {
            if let Some(w) = process(item)? {
                found = Some(w);
                break;
            }
        }
        found
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            pairs
                .enumerate()
                .par_bridge()
                .find_map_any(|item| process(item).transpose())
                .transpose()
        })?
    };

    let stats = (
        examined.into_inner(),
        leaves.into_inner(),
        depth.into_inner(),
    );
    let report = match found {
        Some(w) => finish(Answer::Yes, Some(kernel.lift(&w)), Route::Pairs, stats),
        None => finish(Answer::No, None, Route::Pairs, stats),
    };
    checked(t, k, report)
}

/// Solves the d-FVC instance of one pair on `T - P`; the solution is in
/// ids of `t`.
pub fn solve_pair(
    t: &Tournament,
    k: usize,
    pair: &SetPair,
    index: u64,
) -> Result<(Option<Vec<usize>>, PairMetrics)> {
    let mut metrics = PairMetrics {
        index,
        m_size: pair.m.len(),
        p_size: pair.p.len(),
        d_instance: pair.d_instance,
        budget: k.saturating_sub(pair.p.len()),
        nodes: 0,
        leaves: 0,
        max_depth: 0,
        matching_calls: 0,
        found: false,
    };
    if pair.p.len() > k {
        return Ok((None, metrics));
    }
    let sub = t.delete(&pair.p)?;
    let m_local: Vec<usize> = pair
        .m
        .iter()
        .map(|&v| sub.local(v).ok_or(Error::VertexInSet(v)))
        .collect::<Result<_>>()?;
    let mut inst = match reduce_to_dfvc(&sub.tournament, &m_local, metrics.budget)? {
        Reduction::TrivialNo => return Ok((None, metrics)),
        Reduction::Instance(inst) => inst,
    };
    let solution = solve_branching(&mut inst)?;
    metrics.nodes = inst.stats.nodes;
    metrics.leaves = inst.stats.leaves;
    metrics.max_depth = inst.stats.max_depth;
    metrics.matching_calls = inst.stats.matching_calls;
    metrics.found = solution.is_some();
    let lifted = solution.map(|s| {
        let mut w = pair.p.clone();
        w.extend(sub.lift(&s));
        w.sort_unstable();
        w
    });
    Ok((lifted, metrics))
}

fn checked(t: &Tournament, k: usize, report: SolveReport) -> Result<SolveReport> {
    if let Some(w) = &report.witness {
        if w.len() > k || !verify_fvs(t, w)? {
            return Err(Error::Internal(format!(
                "witness {w:?} does not verify with budget {k}"
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_pipeline() -> SolveOptions {
        SolveOptions {
            bypass: false,
            ..SolveOptions::default()
        }
    }

    #[test]
    fn acyclic_is_yes_with_empty_witness() {
        let r = tfvs_solve(&Tournament::transitive(7), 0, &SolveOptions::default()).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.witness, Some(vec![]));
        assert_eq!(r.branch_leaves, 0);
    }

    #[test]
    fn triangle_budget_one() {
        let t = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
        for opts in [SolveOptions::default(), full_pipeline()] {
            let r = tfvs_solve(&t, 1, &opts).unwrap();
            assert_eq!(r.answer, Answer::Yes);
            assert_eq!(r.witness.unwrap().len(), 1);
            assert_eq!(tfvs_solve(&t, 0, &opts).unwrap().answer, Answer::No);
        }
    }

    #[test]
    fn rotational_seven() {
        let t = Tournament::rotational(7);
        let opt = crate::oracle::brute_min_fvs(&t).unwrap().opt_size;
        for k in 0..=opt + 1 {
            let r = tfvs_solve(&t, k, &full_pipeline()).unwrap();
            assert_eq!(r.answer == Answer::Yes, k >= opt, "k = {k}");
        }
    }

    #[test]
    fn render_format() {
        let r = SolveReport {
            answer: Answer::Yes,
            witness: Some(vec![1, 4]),
            route: Route::Pairs,
            pairs_examined: 1,
            branch_leaves: 1,
            max_depth: 0,
            wall_time: Duration::ZERO,
        };
        assert_eq!(r.render(true), "YES\n1 4\n");
        assert_eq!(r.render(false), "YES\n");
    }

    #[test]
    fn parallel_agrees() {
        let t = Tournament::rotational(9);
        let par = SolveOptions {
            threads: 2,
            ..full_pipeline()
        };
        for k in 3..6 {
            let a = tfvs_solve(&t, k, &full_pipeline()).unwrap();
            let b = tfvs_solve(&t, k, &par).unwrap();
            assert_eq!(a.answer, b.answer);
        }
    }
}
