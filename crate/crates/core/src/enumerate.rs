//! Enumeration of all partitions of `n`.

use crate::partition::Partition;

/// Iterator over the partitions of `n` in lexicographically decreasing
/// order: `(n)` first and `(1^n)` last.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_parts_unchecked(current.clone());

        // Successor: decrement the last part > 1, then refill the tail
        // greedily with parts no larger than the decremented one.
        let mut parts = current;
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// All partitions of `n` in canonical (lexicographically decreasing) order.
pub fn partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// All partitions of every rank `0..=max_n`, rank by rank.
pub fn partitions_up_to(max_n: usize) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(partitions)
}
