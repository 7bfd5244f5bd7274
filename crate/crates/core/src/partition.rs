//! Set partitions of `{0, .., n-1}` as lists of block masks.
//!
//! Partitions are generated as restricted growth strings in lexicographic
//! order; each is emitted with blocks ordered by their lowest element, which
//! is exactly the canonical atom order of [`crate::SigmaAlgebra`].

use crate::ground::SubsetMask;

/// Iterator over all set partitions of an `n`-element set.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    // max of rgs[..i], per position
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn blocks(&self) -> Vec<SubsetMask> {
        let count = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![SubsetMask::EMPTY; count];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b] = blocks[b] | SubsetMask::singleton(i);
        }
        blocks
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        // position 0 is pinned to block 0
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[j - 1].max(self.rgs[j - 1]);
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<SubsetMask>;

    fn next(&mut self) -> Option<Vec<SubsetMask>> {
        if self.done {
            return None;
        }
        let out = self.blocks();
        self.advance();
        Some(out)
    }
}

pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions::new(n)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}
