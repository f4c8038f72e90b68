//! Partitions of node ids, the common currency of the equivalence checks.

use std::collections::HashMap;
use std::hash::Hash;

use crate::graph::NodeId;

/// A partition of `0..n` into disjoint blocks, stored in canonical form:
/// every block sorted ascending, blocks ordered by their smallest element.
/// Two partitions are equal iff they group nodes identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<NodeId>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Groups `0..keys.len()` by key equality.
    pub fn from_keys<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut by_key: HashMap<K, Vec<NodeId>> = HashMap::new();
        let mut order: Vec<NodeId> = Vec::new();
        for (v, key) in keys.into_iter().enumerate() {
            let block = by_key.entry(key).or_insert_with(|| {
                order.push(v);
                Vec::new()
            });
            block.push(v);
        }
        // `order` remembers each block's first (smallest) member in discovery
        // order, which for an enumeration of 0..n is ascending.
        let mut blocks: Vec<Vec<NodeId>> = by_key.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        let mut block_of = vec![0usize; blocks.iter().map(Vec::len).sum()];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                block_of[v] = i;
            }
        }
        Partition { blocks, block_of }
    }

    pub fn node_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<NodeId>] {
        &self.blocks
    }

    pub fn block_of(&self, v: NodeId) -> usize {
        self.block_of[v]
    }

    pub fn same_block(&self, u: NodeId, v: NodeId) -> bool {
        self.block_of[u] == self.block_of[v]
    }

    /// True iff every block of `self` is contained in a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.node_count() != coarser.node_count() {
            return false;
        }
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| coarser.block_of(v) == coarser.block_of(b[0])))
    }

    /// First node pair the two partitions classify differently, scanning
    /// pairs in lexicographic order. `None` iff the partitions are equal.
    pub fn first_disagreement(&self, other: &Partition) -> Option<(NodeId, NodeId)> {
        let n = self.node_count().min(other.node_count());
        for u in 0..n {
            for v in (u + 1)..n {
                if self.same_block(u, v) != other.same_block(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }
}
