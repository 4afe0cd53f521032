//! Streaming enumeration of undeletable sets `M` and of `(M, P)` set pairs.
//!
//! Let `X` be the approximate feedback vertex set and `Y = V \ X`, ordered
//! topologically. `Y` is coloured by position modulo `L(k)`. Each `M` is
//! described by a tuple `(c, Ĥ, R̂, X̂)` and equals `(Y_c \ Ĥ) ∪ R̂ ∪ X̂`.
//! For every feedback vertex set `H` with `|H| <= k` some tuple yields an
//! `M` disjoint from `H` whose blocks in `T - H` have at most `2 log^2 k`
//! vertices.
//!
//! For each such `M`, vertices inconsistent with `M` and all but a few
//! vertices of the large blocks are forced into `P`. All streams are lazy
//! iterators; nothing proportional to the family size is stored.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::approx::{greedy_3_approx, Verdict};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{MSlots, Tournament};
use crate::subsets::bounded_subsets;

/// `(c, Ĥ, R̂, X̂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MTuple {
    pub color: usize,
    pub h_hat: Vec<usize>,
    pub r_hat: Vec<usize>,
    pub x_hat: Vec<usize>,
}

/// A candidate `(M, P)`: `M` is kept, `P` is deleted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetPair {
    pub m: Vec<usize>,
    pub p: Vec<usize>,
    /// Largest M-block of `T - P`.
    pub d_instance: usize,
}

/// The colouring of `Y` that every tuple refers to.
#[derive(Clone, Debug)]
pub struct Spread {
    pub k: usize,
    /// The approximate solution, ascending.
    pub x: Vec<usize>,
    /// Topological order of `T[Y]`.
    pub y_order: Vec<usize>,
    /// `classes[c]` is `Y_c`, ascending by id.
    pub classes: Vec<Vec<usize>>,
    /// `Y \ Y_c`, ascending by id.
    rest: Vec<Vec<usize>>,
    bound_h: usize,
    bound_x: usize,
}

impl Spread {
    /// Colours `Y = V \ approx`. Fails if `T[Y]` is cyclic.
    pub fn new(t: &Tournament, k: usize, approx: &[usize]) -> Result<Self> {
        let mut x = approx.to_vec();
        x.sort_unstable();
        x.dedup();
        let mut y = t.full_set();
        y.difference_with(&t.vertex_set(&x)?);
        let y_order = t.order_of(&y).ok_or(Error::CyclicSet)?;
        let colors = bounds::color_count(k);
        let mut classes = vec![Vec::new(); colors];
        for (pos, &v) in y_order.iter().enumerate() {
            classes[pos % colors].push(v);
        }
        let mut y_sorted = y_order.clone();
        y_sorted.sort_unstable();
        for class in &mut classes {
            class.sort_unstable();
        }
        let rest = classes
            .iter()
            .map(|class| {
                y_sorted
                    .iter()
                    .copied()
                    .filter(|v| class.binary_search(v).is_err())
                    .collect()
            })
            .collect();
        Ok(Spread {
            k,
            x,
            y_order,
            classes,
            rest,
            bound_h: bounds::h_hat_bound(k),
            bound_x: bounds::x_hat_bound(k),
        })
    }

    /// Runs the greedy approximation; `None` when it proves the answer is NO.
    pub fn from_approximation(t: &Tournament, k: usize) -> Option<Self> {
        let approx = greedy_3_approx(t, k);
        match approx.verdict {
            Verdict::NoSolutionWithinBudget => None,
            Verdict::Found => {
                Some(Self::new(t, k, &approx.fvs).expect("approximation is a feedback vertex set"))
            }
        }
    }

    pub fn colors(&self) -> usize {
        self.classes.len()
    }

    /// `(Y_c \ Ĥ) ∪ R̂ ∪ X̂`, ascending.
    pub fn m_of(&self, tuple: &MTuple) -> Vec<usize> {
        let mut m: Vec<usize> = self.classes[tuple.color]
            .iter()
            .copied()
            .filter(|v| !tuple.h_hat.contains(v))
            .chain(tuple.r_hat.iter().copied())
            .chain(tuple.x_hat.iter().copied())
            .collect();
        m.sort_unstable();
        m
    }

    /// All tuples: colour ascending, then `Ĥ`, `R̂`, `X̂` by increasing size
    /// and lexicographically by id.
    pub fn tuples(self: &Arc<Self>) -> impl Iterator<Item = MTuple> + Send + 'static {
        let spread = Arc::clone(self);
        (0..spread.colors()).flat_map(move |c| {
            let s = Arc::clone(&spread);
            bounded_subsets(s.classes[c].clone(), s.bound_h).flat_map(move |h_hat| {
                let s = Arc::clone(&s);
                bounded_subsets(s.rest[c].clone(), h_hat.len()).flat_map(move |r_hat| {
                    let h_hat = h_hat.clone();
                    bounded_subsets(s.x.clone(), s.bound_x).map(move |x_hat| MTuple {
                        color: c,
                        h_hat: h_hat.clone(),
                        r_hat: r_hat.clone(),
                        x_hat,
                    })
                })
            })
        })
    }
}

/// Stream of candidate undeletable sets, or `None` if the approximation
/// already rules out a solution of size `k`.
pub fn enumerate_m(t: &Tournament, k: usize) -> Option<impl Iterator<Item = Vec<usize>> + Send> {
    let spread = Arc::new(Spread::from_approximation(t, k)?);
    let s = Arc::clone(&spread);
    Some(spread.tuples().map(move |tuple| s.m_of(&tuple)))
}

/// Set pairs derived from one `M`. Empty when `T[M]` is cyclic.
///
/// Pairs with `|P| > k`, or with an M-block of `T - P` larger than
/// `2 log^4 k`, are skipped: neither can be the pair that covers a
/// solution.
pub fn pairs_for_m<'a>(
    t: &'a Tournament,
    m: Vec<usize>,
    k: usize,
) -> Box<dyn Iterator<Item = SetPair> + Send + 'a> {
    let members = t.vertex_set(&m).expect("M is a vertex set of T");
    let Some(slots) = MSlots::from_set(t, members) else {
        return Box::new(std::iter::empty());
    };
    let (buckets, inconsistent) = slots.bucket(t, &FixedBitSet::with_capacity(t.len()));
    let large_flags: Vec<bool> = buckets
        .iter()
        .map(|b| bounds::is_large(b.len(), k))
        .collect();
    let mut large: Vec<usize> = buckets
        .iter()
        .zip(&large_flags)
        .filter(|(_, &is_large)| is_large)
        .flat_map(|(b, _)| b.iter().copied())
        .collect();
    large.sort_unstable();

    let keep_max = bounds::kept_bound(k);
    let forced = inconsistent.len() + large.len().saturating_sub(keep_max);
    if forced > k {
        return Box::new(std::iter::empty());
    }
    let theta = bounds::large_block_threshold(k);
    let small_max = buckets
        .iter()
        .zip(&large_flags)
        .filter(|(_, &is_large)| !is_large)
        .map(|(b, _)| b.len())
        .max()
        .unwrap_or(0);
    let large_buckets: Vec<Vec<usize>> = buckets
        .into_iter()
        .zip(large_flags)
        .filter(|(_, is_large)| *is_large)
        .map(|(b, _)| b)
        .collect();

    Box::new(
        bounded_subsets(large.clone(), keep_max).filter_map(move |kept| {
            let mut p: Vec<usize> = inconsistent
                .iter()
                .copied()
                .chain(
                    large
                        .iter()
                        .copied()
                        .filter(|v| kept.binary_search(v).is_err()),
                )
                .collect();
            if p.len() > k {
                return None;
            }
            p.sort_unstable();
            let d_instance = large_buckets
                .iter()
                .map(|b| b.iter().filter(|v| kept.binary_search(v).is_ok()).count())
                .max()
                .unwrap_or(0)
                .max(small_max);
            if d_instance as f64 > theta {
                return None;
            }
            let pair = SetPair {
                m: m.clone(),
                p,
                d_instance,
            };
            debug_assert!(pair_invariants_hold(t, &pair, k));
            Some(pair)
        }),
    )
}

/// Stream of set pairs, or `None` if the approximation already rules out a
/// solution of size `k`.
pub fn enumerate_set_pairs(
    t: &Tournament,
    k: usize,
) -> Option<impl Iterator<Item = SetPair> + Send + '_> {
    let ms = enumerate_m(t, k)?;
    Some(ms.flat_map(move |m| pairs_for_m(t, m, k)))
}

/// The type invariants of a [`SetPair`]: `M ∩ P = ∅`, `T[M]` acyclic, every
/// vertex outside `P` consistent with `M`, and every M-block of `T - P` of
/// size at most `2 log^4 k`, with `d_instance` the largest one.
pub fn pair_invariants_hold(t: &Tournament, pair: &SetPair, k: usize) -> bool {
    let Ok(members) = t.vertex_set(&pair.m) else {
        return false;
    };
    let Ok(deleted) = t.vertex_set(&pair.p) else {
        return false;
    };
    if !members.is_disjoint(&deleted) {
        return false;
    }
    let Some(slots) = MSlots::from_set(t, members) else {
        return false;
    };
    let (buckets, inconsistent) = slots.bucket(t, &deleted);
    let d = buckets.iter().map(Vec::len).max().unwrap_or(0);
    inconsistent.is_empty() && d == pair.d_instance && d as f64 <= bounds::large_block_threshold(k)
}
