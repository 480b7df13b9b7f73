//! Rim hooks of length `ell`, cores, and the two recursive partition classes
//! defined by which hooks can be peeled off.
//!
//! A removable `ell`-rim hook is identified with the box of the host
//! partition whose hook length is exactly `ell` (its head). The hook itself
//! is the strip of rim boxes running from the end of the head's row down to
//! the bottom of the head's column.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{BoxCoord, Ell, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
    #[serde(rename = "M")]
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RimHook {
    pub head: BoxCoord,
    /// Row-major order.
    pub boxes: Vec<BoxCoord>,
    pub orientation: Orientation,
}

impl RimHook {
    /// The rim strip of `p` hanging off `head`. Does not check that the hook
    /// length of `head` is `ell`.
    fn strip(p: &Partition, head: BoxCoord) -> RimHook {
        let bottom = p.column_height(head.col);
        let mut boxes = Vec::new();
        for r in head.row..=bottom {
            let from = if r == bottom { head.col } else { p.part(r + 1) };
            boxes.extend((from..=p.part(r)).map(|c| BoxCoord::new(r, c)));
        }
        let orientation = if bottom == head.row {
            Orientation::Horizontal
        } else if p.part(head.row) == head.col {
            Orientation::Vertical
        } else {
            Orientation::Mixed
        };
        RimHook {
            head,
            boxes,
            orientation,
        }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation == Orientation::Horizontal
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation == Orientation::Vertical
    }
}

/// One hook per box of hook length exactly `ell`, heads in row-major order.
pub fn removable_rim_hooks(p: &Partition, ell: Ell) -> Vec<RimHook> {
    hook_heads(p, ell)
        .into_iter()
        .map(|head| RimHook::strip(p, head))
        .collect()
}

fn hook_heads(p: &Partition, ell: Ell) -> Vec<BoxCoord> {
    let table = p.hook_table();
    p.boxes()
        .filter(|b| table.get(b.row, b.col) == ell.get())
        .collect()
}

/// Removes the strip headed at `head`. Rows `head.row..bottom` shrink to one less than the row below, and
/// the bottom row is cut back to `head.col - 1`.
fn remove_strip(p: &Partition, head: BoxCoord) -> Partition {
    let bottom = p.column_height(head.col);
    let mut rows = p.parts().to_vec();
    for r in head.row..bottom {
        rows[r - 1] = p.part(r + 1) - 1;
    }
    rows[bottom - 1] = head.col - 1;
    Partition::from_rows(rows)
}

pub fn remove_hook(p: &Partition, h: &RimHook) -> Result<Partition> {
    let valid = p.contains(h.head) && RimHook::strip(p, h.head) == *h;
    if !valid {
        return Err(Error::HookNotRemovable {
            row: h.head.row,
            col: h.head.col,
            partition: p.to_string(),
        });
    }
    Ok(remove_strip(p, h.head))
}

/// Lengthens row `row` by `ell` when the result is a partition. The added
/// boxes are then automatically a removable horizontal rim hook.
pub fn add_horizontal_hook(p: &Partition, row: usize, ell: Ell) -> Option<Partition> {
    if row == 0 || row > p.len() + 1 {
        return None;
    }
    let new_len = p.part(row) + ell.get();
    if row > 1 && p.part(row - 1) < new_len {
        return None;
    }
    let mut parts = p.parts().to_vec();
    if row > parts.len() {
        parts.push(new_len);
    } else {
        parts[row - 1] = new_len;
    }
    Some(Partition::from_parts_unchecked(parts))
}

/// Lengthens column `col` by `ell` when the result is a partition.
pub fn add_vertical_hook(p: &Partition, col: usize, ell: Ell) -> Option<Partition> {
    add_horizontal_hook(&p.conjugate(), col, ell).map(|q| q.conjugate())
}

fn one_step_removals(p: &Partition, ell: Ell) -> Vec<Partition> {
    hook_heads(p, ell)
        .into_iter()
        .map(|head| remove_strip(p, head))
        .collect()
}

/// The `ell`-core: strip hooks until none is left. Hooks are removed
/// topmost head first.
pub fn core(p: &Partition, ell: Ell) -> Partition {
    let mut current = p.clone();
    while let Some(head) = hook_heads(&current, ell).first().copied() {
        current = remove_strip(&current, head);
    }
    current
}

/// Every partition reachable as the end of a maximal hook-removal sequence.
/// A singleton for every input; exposed so that can be checked.
pub fn terminal_cores(p: &Partition, ell: Ell) -> BTreeSet<Partition> {
    fn visit(
        p: &Partition,
        ell: Ell,
        seen: &mut HashSet<Partition>,
        out: &mut BTreeSet<Partition>,
    ) {
        if !seen.insert(p.clone()) {
            return;
        }
        let next = one_step_removals(p, ell);
        if next.is_empty() {
            out.insert(p.clone());
        }
        for q in next {
            visit(&q, ell, seen, out);
        }
    }
    let mut seen = HashSet::new();
    let mut out = BTreeSet::new();
    visit(p, ell, &mut seen, &mut out);
    out
}

pub fn is_core(p: &Partition, ell: Ell) -> bool {
    hook_heads(p, ell).is_empty()
}

/// True when some box of `a` shares an edge with some box of `b`.
pub fn adjacent(a: &[BoxCoord], b: &[BoxCoord]) -> bool {
    a.iter().any(|x| b.iter().any(|y| x.shares_edge(*y)))
}

/// An `ell`-regular partition that, after removing any sequence of
/// horizontal hooks, still has no non-horizontal removable hook.
pub fn is_l_partition(p: &Partition, ell: Ell) -> bool {
    fn ok(p: &Partition, ell: Ell, memo: &mut HashMap<Partition, bool>) -> bool {
        if let Some(&v) = memo.get(p) {
            return v;
        }
        let hooks = removable_rim_hooks(p, ell);
        let v = hooks.iter().all(RimHook::is_horizontal)
            && hooks
                .iter()
                .all(|h| ok(&remove_strip(p, h.head), ell, memo));
        memo.insert(p.clone(), v);
        v
    }
    p.is_regular(ell) && ok(p, ell, &mut HashMap::new())
}

/// Checks the generalized `ell`-partition conditions at `q` alone: only
/// horizontal and vertical hooks, and no hook of one kind adjacent to a hook
/// of the other kind exposed by removing it.
fn locally_generalized(q: &Partition, hooks: &[RimHook], ell: Ell) -> bool {
    if hooks.iter().any(|h| h.orientation == Orientation::Mixed) {
        return false;
    }
    hooks.iter().all(|r| {
        let rest = remove_strip(q, r.head);
        removable_rim_hooks(&rest, ell).iter().all(|s| {
            let crosses = matches!(
                (r.orientation, s.orientation),
                (Orientation::Vertical, Orientation::Horizontal)
                    | (Orientation::Horizontal, Orientation::Vertical)
            );
            !crosses || !adjacent(&r.boxes, &s.boxes)
        })
    })
}

/// Generalized `ell`-partition: every partition reachable by peeling
/// horizontal and vertical hooks (including `p` itself) passes
/// [`locally_generalized`].
pub fn is_generalized_l_partition(p: &Partition, ell: Ell) -> bool {
    fn ok(p: &Partition, ell: Ell, memo: &mut HashMap<Partition, bool>) -> bool {
        if let Some(&v) = memo.get(p) {
            return v;
        }
        let hooks = removable_rim_hooks(p, ell);
        let v = locally_generalized(p, &hooks, ell)
            && hooks
                .iter()
                .all(|h| ok(&remove_strip(p, h.head), ell, memo));
        memo.insert(p.clone(), v);
        v
    }
    ok(p, ell, &mut HashMap::new())
}
