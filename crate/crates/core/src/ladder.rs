//! Ladders and regularization.
//!
//! The ladder through `(a, b)` is the line of positions
//! `(a - k(ell-1), b + k)`: it climbs `ell - 1` rows for every column it
//! moves right. Every position on it shares the index
//! `omega = a + (ell-1)(b-1)`, and the topmost position of a ladder is the
//! one with the largest column.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::partitions;
use crate::partition::{BoxCoord, Ell, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LadderIndex(pub usize);

impl LadderIndex {
    /// Residue shared by every position on this ladder: `(1 - omega) mod ell`.
    pub fn residue(self, ell: Ell) -> usize {
        let l = ell.get() as i64;
        (1 - self.0 as i64).rem_euclid(l) as usize
    }

    /// Positions of this ladder from the top down.
    pub fn positions(self, ell: Ell) -> impl Iterator<Item = BoxCoord> {
        let step = ell.get() - 1;
        let omega = self.0;
        let top_col = (omega - 1) / step + 1;
        (1..=top_col)
            .rev()
            .map(move |c| BoxCoord::new(omega - step * (c - 1), c))
    }
}

pub fn ladder_index(b: BoxCoord, ell: Ell) -> LadderIndex {
    LadderIndex(b.row + (ell.get() - 1) * (b.col - 1))
}

/// Number of boxes of `p` on each ladder.
pub fn ladder_occupancy(p: &Partition, ell: Ell) -> BTreeMap<LadderIndex, usize> {
    let mut counts = BTreeMap::new();
    for b in p.boxes() {
        *counts.entry(ladder_index(b, ell)).or_insert(0) += 1;
    }
    counts
}

/// Slides every box to the top of its ladder.
pub fn regularize(p: &Partition, ell: Ell) -> Partition {
    let mut rows = vec![0usize; p.len()];
    for (omega, count) in ladder_occupancy(p, ell) {
        for b in omega.positions(ell).take(count) {
            // Rows only move up, so the target row already exists.
            rows[b.row - 1] += 1;
        }
    }
    let out = Partition::from_rows(rows);
    debug_assert_eq!(out.rank(), p.rank());
    out
}

/// Every partition of the same rank with the same regularization, in
/// canonical enumeration order.
pub fn regularization_class(p: &Partition, ell: Ell) -> Vec<Partition> {
    let target = regularize(p, ell);
    partitions(p.rank())
        .filter(|q| regularize(q, ell) == target)
        .collect()
}
