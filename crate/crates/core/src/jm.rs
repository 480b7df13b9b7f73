//! (ell,0)-JM partitions, detected through hook-length triples, and weak
//! `ell`-partitions.
//!
//! A partition fails to be JM exactly when it has a pivot box whose hook
//! length is divisible by `ell`, together with a box in the pivot's row and
//! a box in the pivot's column whose hook lengths are not.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal;
use crate::enumerate::partitions;
use crate::error::{Error, Result};
use crate::ladder::regularize;
use crate::partition::{BoxCoord, Ell, HookTable, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JmWitness {
    pub pivot: BoxCoord,
    pub row_mate: BoxCoord,
    pub col_mate: BoxCoord,
    /// Both mates lie strictly after the pivot: right of it and below it.
    pub normalized: bool,
}

impl JmWitness {
    /// Re-checks the divisibility pattern against `p`.
    pub fn holds_in(&self, p: &Partition, ell: Ell) -> bool {
        let l = ell.get();
        let same_line = self.row_mate.row == self.pivot.row && self.col_mate.col == self.pivot.col;
        let hook = |b: BoxCoord| p.hook_length(b).ok();
        same_line
            && matches!(hook(self.pivot), Some(h) if h % l == 0)
            && matches!(hook(self.row_mate), Some(h) if h % l != 0)
            && matches!(hook(self.col_mate), Some(h) if h % l != 0)
    }
}

fn divisible_pivots(p: &Partition, table: &HookTable, l: usize) -> Vec<BoxCoord> {
    p.boxes()
        .filter(|b| table.get(b.row, b.col).is_multiple_of(l))
        .collect()
}

/// First witness in row-major pivot order, with the leftmost row mate and
/// topmost column mate.
pub fn jm_witness(p: &Partition, ell: Ell) -> Option<JmWitness> {
    let l = ell.get();
    let table = p.hook_table();
    divisible_pivots(p, &table, l)
        .into_iter()
        .find_map(|pivot| {
            let y =
                (1..=p.part(pivot.row)).find(|&c| !table.get(pivot.row, c).is_multiple_of(l))?;
            let x = (1..=p.column_height(pivot.col))
                .find(|&r| !table.get(r, pivot.col).is_multiple_of(l))?;
            Some(JmWitness {
                pivot,
                row_mate: BoxCoord::new(pivot.row, y),
                col_mate: BoxCoord::new(x, pivot.col),
                normalized: pivot.row < x && pivot.col < y,
            })
        })
}

/// A witness whose mates lie to the right of and below the pivot. Searches
/// for one directly, so a non-JM partition without such a witness would
/// come back as `None`.
pub fn normalize_witness(p: &Partition, ell: Ell) -> Option<JmWitness> {
    let l = ell.get();
    let table = p.hook_table();
    divisible_pivots(p, &table, l)
        .into_iter()
        .find_map(|pivot| {
            let y = (pivot.col + 1..=p.part(pivot.row))
                .find(|&c| !table.get(pivot.row, c).is_multiple_of(l))?;
            let x = (pivot.row + 1..=p.column_height(pivot.col))
                .find(|&r| !table.get(r, pivot.col).is_multiple_of(l))?;
            Some(JmWitness {
                pivot,
                row_mate: BoxCoord::new(pivot.row, y),
                col_mate: BoxCoord::new(x, pivot.col),
                normalized: true,
            })
        })
}

pub fn is_jm(p: &Partition, ell: Ell) -> bool {
    jm_witness(p, ell).is_none()
}

fn require_regular(p: &Partition, ell: Ell) -> Result<()> {
    if p.is_regular(ell) {
        Ok(())
    } else {
        Err(Error::NotRegular(p.to_string()))
    }
}

/// Weak detection by scanning every partition of the same rank for a JM
/// member of the regularization class of `p`.
pub fn is_weak_by_class_scan(p: &Partition, ell: Ell) -> Result<bool> {
    require_regular(p, ell)?;
    Ok(partitions(p.rank())
        .par_bridge()
        .any(|q| is_jm(&q, ell) && regularize(&q, ell) == *p))
}

/// Weak detection through the ladder crystal: the class of `p` holds exactly
/// one ladder node, and `p` is weak when that node is JM.
pub fn is_weak_by_ladder_node(p: &Partition, ell: Ell) -> Result<bool> {
    require_regular(p, ell)?;
    let node = crystal::ladder_node_of_class(p, ell)?;
    Ok(is_jm(&node, ell))
}

/// An `ell`-regular partition whose regularization class contains a JM
/// partition. Both detection routes run; disagreement is an error.
pub fn is_weak_l_partition(p: &Partition, ell: Ell) -> Result<bool> {
    let class_scan = is_weak_by_class_scan(p, ell)?;
    let ladder_node = is_weak_by_ladder_node(p, ell)?;
    if class_scan != ladder_node {
        return Err(Error::RouteDisagreement {
            partition: p.to_string(),
            class_scan,
            ladder_node,
        });
    }
    Ok(class_scan)
}

/// Regularizations of all JM partitions, rank by rank. These are exactly the
/// weak `ell`-partitions, so lookups here are the class-scan route done once
/// for a whole range of ranks.
#[derive(Debug, Clone)]
pub struct WeakIndex {
    ell: Ell,
    by_rank: Vec<HashSet<Partition>>,
}

impl WeakIndex {
    pub fn build(ell: Ell, max_rank: usize) -> Self {
        let by_rank = (0..=max_rank)
            .into_par_iter()
            .map(|n| {
                partitions(n)
                    .filter(|q| is_jm(q, ell))
                    .map(|q| regularize(&q, ell))
                    .collect()
            })
            .collect();
        WeakIndex { ell, by_rank }
    }

    pub fn ell(&self) -> Ell {
        self.ell
    }

    pub fn max_rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    /// `None` past the indexed ranks.
    pub fn is_weak(&self, p: &Partition) -> Option<bool> {
        self.by_rank.get(p.rank()).map(|set| set.contains(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn l3() -> Ell {
        Ell::new(3).unwrap()
    }

    fn b(r: usize, c: usize) -> BoxCoord {
        BoxCoord::new(r, c)
    }

    #[test]
    fn witness_examples() {
        let w = jm_witness(&p("2,1"), l3()).unwrap();
        assert_eq!(
            (w.pivot, w.row_mate, w.col_mate),
            (b(1, 1), b(1, 2), b(2, 1))
        );
        assert!(w.normalized);
        assert!(w.holds_in(&p("2,1"), l3()));
        assert_eq!(jm_witness(&p("10,8,3,2,2,1,1,1,1,1"), l3()), None);
        assert_eq!(jm_witness(&p("1,1,1"), l3()), None);
    }

    #[test]
    fn normalized_examples() {
        let w = normalize_witness(&p("3,1,1,1"), l3()).unwrap();
        assert_eq!(
            (w.pivot, w.row_mate, w.col_mate),
            (b(1, 1), b(1, 2), b(3, 1))
        );
        assert!(w.holds_in(&p("3,1,1,1"), l3()));
        let w = normalize_witness(&p("2,1"), l3()).unwrap();
        assert_eq!(
            (w.pivot, w.row_mate, w.col_mate),
            (b(1, 1), b(1, 2), b(2, 1))
        );
        assert_eq!(normalize_witness(&p("3"), l3()), None);
    }

    #[test]
    fn unnormalized_witness_is_flagged() {
        // (3,3) at ell = 3: pivot (1,2) has hook 3, its first row mate is
        // (1,1) to the left.
        let w = jm_witness(&p("3,3"), l3()).unwrap();
        assert_eq!(w.pivot, b(1, 2));
        assert_eq!(w.row_mate, b(1, 1));
        assert!(!w.normalized);
        let n = normalize_witness(&p("3,3"), l3()).unwrap();
        assert!(n.normalized && n.holds_in(&p("3,3"), l3()));
    }

    #[test]
    fn is_jm_examples() {
        assert!(is_jm(&p("1,1,1"), l3()));
        assert!(!is_jm(&p("3,1,1,1"), l3()));
        assert!(is_jm(&Partition::empty(), l3()));
    }

    #[test]
    fn weak_examples() {
        let l = l3();
        assert_eq!(is_weak_l_partition(&p("2,1"), l), Ok(true));
        assert_eq!(is_weak_l_partition(&p("2,2"), l), Ok(true));
        assert_eq!(is_weak_l_partition(&p("2,1,1"), l), Ok(true));
        assert!(matches!(
            is_weak_l_partition(&p("1,1,1"), l),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn weak_index_counts() {
        // Frozen from a brute-force hook-triple scan: number of distinct
        // regularizations of JM partitions of n = 0..=10 at ell = 3.
        let idx = WeakIndex::build(l3(), 10);
        let counts: Vec<usize> = idx.by_rank.iter().map(HashSet::len).collect();
        assert_eq!(counts, [1, 1, 2, 2, 4, 5, 4, 7, 11, 8, 14]);
        assert_eq!(idx.is_weak(&p("2,1")), Some(true));
        assert_eq!(idx.is_weak(&p("30")), None);
    }
}
