//! Placement of vertices relative to an acyclic vertex set `M`.
//!
//! With `T[M]` acyclic and its vertices ordered `m_1 .. m_r`, a vertex `v`
//! outside `M` is consistent with `M` exactly when its in-neighbours in `M`
//! form a prefix `m_1 .. m_p` of that order. The number `p` is the slot of
//! `v`; slot `p` is the block between `m_p` and `m_{p+1}`, slot `0` the
//! block before `m_1` and slot `r` the block after `m_r`.

use fixedbitset::FixedBitSet;

use super::tournament::Tournament;
use crate::bounds;
use crate::error::{Error, Result};

/// The topological order of `T[M]` together with its prefix sets.
#[derive(Clone, Debug)]
pub struct MSlots {
    order: Vec<usize>,
    members: FixedBitSet,
    prefixes: Vec<FixedBitSet>,
}

impl MSlots {
    pub fn new(t: &Tournament, m: &[usize]) -> Result<Self> {
        let members = t.vertex_set(m)?;
        Self::from_set(t, members).ok_or(Error::CyclicSet)
    }

    /// `None` when `T[members]` is cyclic.
    pub fn from_set(t: &Tournament, members: FixedBitSet) -> Option<Self> {
        let order = t.order_of(&members)?;
        let mut prefixes = Vec::with_capacity(order.len() + 1);
        let mut acc = FixedBitSet::with_capacity(t.len());
        prefixes.push(acc.clone());
        for &v in &order {
            acc.insert(v);
            prefixes.push(acc.clone());
        }
        Some(MSlots {
            order,
            members,
            prefixes,
        })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn slot_count(&self) -> usize {
        self.order.len() + 1
    }

    /// Slot of a vertex outside `M`, or `None` if it is inconsistent with `M`.
    pub fn slot(&self, t: &Tournament, v: usize) -> Option<usize> {
        debug_assert!(!self.contains(v));
        let p = t.in_set(v).intersection_count(&self.members);
        (t.in_set(v).intersection_count(&self.prefixes[p]) == p).then_some(p)
    }

    /// Vertices outside `M` and `excluded`, bucketed by slot. The second
    /// component lists the inconsistent ones.
    pub fn bucket(&self, t: &Tournament, excluded: &FixedBitSet) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut slots = vec![Vec::new(); self.slot_count()];
        let mut inconsistent = Vec::new();
        for v in 0..t.len() {
            if self.contains(v) || excluded.contains(v) {
                continue;
            }
            match self.slot(t, v) {
                Some(p) => slots[p].push(v),
                None => inconsistent.push(v),
            }
        }
        (slots, inconsistent)
    }
}

/// The M-blocks of `T - I(T, M)`, in the topological order of `T[M]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub m_order: Vec<usize>,
    /// Non-empty blocks only.
    pub blocks: Vec<Vec<usize>>,
    /// Slot index (0..=|M|) of each entry of `blocks`.
    pub slots: Vec<usize>,
    assignment: Vec<Option<usize>>,
}

impl BlockDecomposition {
    fn from_buckets(n: usize, m_order: Vec<usize>, buckets: Vec<Vec<usize>>) -> Self {
        let mut assignment = vec![None; n];
        let mut blocks = Vec::new();
        let mut slots = Vec::new();
        for (slot, bucket) in buckets.into_iter().enumerate() {
            if bucket.is_empty() {
                continue;
            }
            for &v in &bucket {
                assignment[v] = Some(blocks.len());
            }
            blocks.push(bucket);
            slots.push(slot);
        }
        BlockDecomposition {
            m_order,
            blocks,
            slots,
            assignment,
        }
    }

    /// Index into `blocks` of the block holding `v`.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.assignment.get(v).copied().flatten()
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Whether `T[M ∪ {v}]` is acyclic.
pub fn is_consistent(t: &Tournament, m: &[usize], v: usize) -> Result<bool> {
    t.check_vertex(v)?;
    let slots = MSlots::new(t, m)?;
    if slots.contains(v) {
        return Err(Error::VertexInSet(v));
    }
    Ok(slots.slot(t, v).is_some())
}

/// `I(T, M)`: vertices outside `M` that are inconsistent with it.
pub fn inconsistent_set(t: &Tournament, m: &[usize]) -> Result<Vec<usize>> {
    let slots = MSlots::new(t, m)?;
    let none = FixedBitSet::with_capacity(t.len());
    Ok(slots.bucket(t, &none).1)
}

/// M-blocks of `T - I(T, M)`.
pub fn compute_blocks(t: &Tournament, m: &[usize]) -> Result<BlockDecomposition> {
    let slots = MSlots::new(t, m)?;
    let none = FixedBitSet::with_capacity(t.len());
    let (buckets, _) = slots.bucket(t, &none);
    Ok(BlockDecomposition::from_buckets(
        t.len(),
        slots.order().to_vec(),
        buckets,
    ))
}

/// `L(T, M, k)`: union of the M-blocks of `T - I(T, M)` with at least
/// `2 log^4 k` vertices.
pub fn large_blocks_union(t: &Tournament, m: &[usize], k: usize) -> Result<Vec<usize>> {
    let blocks = compute_blocks(t, m)?;
    let mut union: Vec<usize> = blocks
        .blocks
        .into_iter()
        .filter(|b| bounds::is_large(b.len(), k))
        .flatten()
        .collect();
    union.sort_unstable();
    Ok(union)
}
