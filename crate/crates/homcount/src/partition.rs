//! Set partitions of `{0..n}` and the partition-lattice Möbius function.

use crate::graph::Graph;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("element {0} is out of range or appears twice")]
    BadElement(usize),
    #[error("element {0} is not covered")]
    Uncovered(usize),
    #[error("empty block")]
    EmptyBlock,
}

/// Blocks are sorted internally and ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || seen[x] {
                    return Err(PartitionError::BadElement(x));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered(x));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a restricted-growth string `rgs[i] = block of i`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n: rgs.len(), blocks }
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = i;
            }
        }
        out
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        let owner = coarser.block_of();
        self.n == coarser.n && self.blocks.iter().all(|b| b.iter().all(|&x| owner[x] == owner[b[0]]))
    }

    /// Pulls a partition of this partition's blocks back to the ground set.
    pub fn compose(&self, of_blocks: &SetPartition) -> SetPartition {
        assert_eq!(of_blocks.ground_size(), self.block_count());
        let blocks = of_blocks
            .blocks
            .iter()
            .map(|group| group.iter().flat_map(|&b| self.blocks[b].iter().copied()).collect())
            .collect();
        SetPartition::from_blocks(self.n, blocks).expect("composition of partitions")
    }
}

/// All partitions of `{0..n}`, as restricted-growth strings in lexicographic order.
pub fn partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    rgs_walk(n, &mut |_, _| true, &mut |rgs| out.push(SetPartition::from_rgs(rgs)));
    out
}

/// Partitions whose blocks are independent sets of `g` (the loop-free quotients), in the
/// same lexicographic order as [`partitions`].
pub fn spasm_partitions(g: &Graph) -> Vec<SetPartition> {
    assert!(g.is_simple(), "spasm partitions need a loop-free graph");
    let mut out = Vec::new();
    rgs_walk(
        g.vertex_count(),
        &mut |rgs, v| {
            let b = rgs[v];
            g.neighbors(v).iter().all(|&w| w >= v || rgs[w] != b)
        },
        &mut |rgs| out.push(SetPartition::from_rgs(rgs)),
    );
    out
}

fn rgs_walk(n: usize, accept: &mut dyn FnMut(&[usize], usize) -> bool, emit: &mut dyn FnMut(&[usize])) {
    let mut rgs = vec![0usize; n];
    fn go(
        i: usize,
        max: usize,
        rgs: &mut Vec<usize>,
        accept: &mut dyn FnMut(&[usize], usize) -> bool,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if i == rgs.len() {
            emit(rgs);
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[i] = b;
            if accept(rgs, i) {
                go(i + 1, max.max(b), rgs, accept, emit);
            }
        }
    }
    go(0, 0, &mut rgs, accept, emit);
}

/// μ(⊥, ρ) = ∏_B (−1)^{|B|−1} (|B|−1)!.
pub fn partition_mobius(rho: &SetPartition) -> BigInt {
    let mut acc = BigInt::from(1);
    for b in rho.blocks() {
        let k = b.len() - 1;
        for f in 2..=k {
            acc *= f;
        }
        if k % 2 == 1 {
            acc = -acc;
        }
    }
    acc
}
