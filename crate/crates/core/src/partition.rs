//! Partitions and the geometry of their Young diagrams.
//!
//! Boxes use 1-based `(row, col)` coordinates in English convention: row 1
//! is at the top and rows get shorter going down.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The modulus `ell`. Always at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Ell(usize);

impl Ell {
    pub fn new(value: usize) -> Result<Self> {
        if value < 3 {
            return Err(Error::InvalidEll(value));
        }
        Ok(Ell(value))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Checks that `i` is a residue modulo `ell`.
    pub fn check_residue(self, i: usize) -> Result<()> {
        if i < self.0 {
            Ok(())
        } else {
            Err(Error::ResidueOutOfRange {
                residue: i,
                ell: self.0,
            })
        }
    }
}

impl TryFrom<usize> for Ell {
    type Error = Error;

    fn try_from(value: usize) -> Result<Self> {
        Ell::new(value)
    }
}

impl fmt::Display for Ell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A position `(row, col)` in a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// `(col - row) mod ell`.
    pub fn residue(self, ell: Ell) -> usize {
        residue(self, ell)
    }

    /// True when the two boxes share an edge.
    pub fn shares_edge(self, other: BoxCoord) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl From<BoxCoord> for [usize; 2] {
    fn from(b: BoxCoord) -> Self {
        [b.row, b.col]
    }
}

impl TryFrom<[usize; 2]> for BoxCoord {
    type Error = String;

    fn try_from([row, col]: [usize; 2]) -> std::result::Result<Self, String> {
        if row == 0 || col == 0 {
            return Err(format!("box coordinates are 1-based, got ({row},{col})"));
        }
        Ok(BoxCoord { row, col })
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue of a box: `(col - row) mod ell`.
pub fn residue(b: BoxCoord, ell: Ell) -> usize {
    let l = ell.get() as i64;
    (b.col as i64 - b.row as i64).rem_euclid(l) as usize
}

/// 1 when `ell` divides `k`, 0 otherwise.
pub fn m_ell(k: usize, ell: Ell) -> u8 {
    u8::from(k.is_multiple_of(ell.get()))
}

/// Selects addable or removable boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxKind {
    Addable,
    Removable,
}

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// The derived `Ord` is lexicographic on the parts; the canonical
/// enumeration order used throughout the crate is the reverse of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Parts must be weakly
    /// decreasing and no zero may precede a positive part.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    /// Builds a partition from row lengths that may carry trailing zeros.
    pub(crate) fn from_rows(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::from_parts_unchecked(rows)
    }

    #[inline]
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Length of row `row` (1-based); 0 past the last row.
    #[inline]
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, i.e. `n` for a partition of `n`.
    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Height of column `col` (1-based); 0 past the last column.
    pub fn column_height(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.partition_point(|&p| p >= col)
    }

    /// The transpose partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|c| self.column_height(c)).collect();
        Partition::from_parts_unchecked(parts)
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.part(b.row)
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| BoxCoord::new(r + 1, c)))
    }

    fn require_box(&self, b: BoxCoord) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::BoxNotInDiagram {
                row: b.row,
                col: b.col,
                partition: self.to_string(),
            })
        }
    }

    /// Number of boxes strictly to the right of `b` in its row.
    pub fn arm(&self, b: BoxCoord) -> Result<usize> {
        self.require_box(b)?;
        Ok(self.part(b.row) - b.col)
    }

    /// Number of boxes strictly below `b` in its column.
    pub fn leg(&self, b: BoxCoord) -> Result<usize> {
        self.require_box(b)?;
        Ok(self.column_height(b.col) - b.row)
    }

    pub fn hook_length(&self, b: BoxCoord) -> Result<usize> {
        Ok(self.arm(b)? + self.leg(b)? + 1)
    }

    /// Hook lengths of every box, one vector per row.
    pub fn hook_table(&self) -> HookTable {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (1..=len)
                    .map(|c| (len - c) + (conj.part(c) - (r + 1)) + 1)
                    .collect()
            })
            .collect();
        HookTable { rows }
    }

    pub fn is_addable(&self, b: BoxCoord) -> bool {
        b.row >= 1
            && b.col == self.part(b.row) + 1
            && (b.row == 1 || self.part(b.row - 1) > self.part(b.row))
    }

    pub fn is_removable(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && b.col == self.part(b.row) && self.part(b.row + 1) < b.col
    }

    /// Addable positions, top row first.
    pub fn addable_boxes(&self) -> Vec<BoxCoord> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| BoxCoord::new(r, self.part(r) + 1))
            .collect()
    }

    /// Removable boxes, top row first.
    pub fn removable_boxes(&self) -> Vec<BoxCoord> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| BoxCoord::new(r, self.part(r)))
            .collect()
    }

    pub fn add_box(&self, b: BoxCoord) -> Option<Partition> {
        if !self.is_addable(b) {
            return None;
        }
        let mut parts = self.parts.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    pub fn remove_box(&self, b: BoxCoord) -> Option<Partition> {
        if !self.is_removable(b) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        Some(Partition::from_rows(parts))
    }

    /// Addable or removable boxes of residue `i`, top row first. There is at
    /// most one such box per row and per column.
    pub fn boxes_of_residue(&self, i: usize, ell: Ell, kind: BoxKind) -> Vec<BoxCoord> {
        let candidates = match kind {
            BoxKind::Addable => self.addable_boxes(),
            BoxKind::Removable => self.removable_boxes(),
        };
        candidates
            .into_iter()
            .filter(|b| b.residue(ell) == i)
            .collect()
    }

    /// No part occurs `ell` or more times.
    pub fn is_regular(&self, ell: Ell) -> bool {
        self.parts
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < ell.get())
    }

    /// Every column has all of its hook lengths divisible by `ell`, or none.
    pub fn satisfies_star(&self, ell: Ell) -> bool {
        let table = self.hook_table();
        (1..=self.part(1)).all(|c| {
            let mut column = (1..=self.column_height(c)).map(|r| m_ell(table.get(r, c), ell));
            let first = column.next();
            column.all(|m| Some(m) == first)
        })
    }

    /// Residue `i` of the last box in the row of `b`, returned when the last
    /// box in the column of `b` has residue `i + 1`. That happens exactly
    /// when `ell` divides the hook length of `b`.
    pub fn hook_divisibility_witness(&self, b: BoxCoord, ell: Ell) -> Result<Option<usize>> {
        self.require_box(b)?;
        let row_end = BoxCoord::new(b.row, self.part(b.row));
        let col_end = BoxCoord::new(self.column_height(b.col), b.col);
        let i = row_end.residue(ell);
        Ok((col_end.residue(ell) == (i + 1) % ell.get()).then_some(i))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Canonical text form: `10,8,3,2`, with `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Hook lengths of a partition, indexed by 1-based box coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HookTable {
    rows: Vec<Vec<usize>>,
}

impl HookTable {
    /// Panics when `(row, col)` is outside the diagram.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows.get(row.wrapping_sub(1)).map_or(0, Vec::len)
    }
}
