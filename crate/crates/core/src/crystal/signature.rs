//! `i`-signatures and the crystal operators built from them.
//!
//! Every addable box of residue `i` contributes a `+` and every removable
//! box of residue `i` a `-`. The Misra-Miwa model reads them from the bottom
//! row up; the ladder model reads ladders left to right (increasing ladder
//! index) and each ladder top to bottom. Cancelling adjacent `-+` pairs
//! leaves a word `+...+-...-`: `e` removes the box of its leftmost `-` and
//! `f` adds the box of its rightmost `+`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ladder::ladder_index;
use crate::partition::{BoxCoord, BoxKind, Ell, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    /// Nodes are the `ell`-regular partitions.
    #[serde(rename = "reg")]
    MisraMiwa,
    #[serde(rename = "ladd")]
    Ladder,
}

impl Model {
    pub const ALL: [Model; 2] = [Model::MisraMiwa, Model::Ladder];

    pub fn short_name(self) -> &'static str {
        match self {
            Model::MisraMiwa => "reg",
            Model::Ladder => "ladd",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "reg" | "misra-miwa" => Ok(Model::MisraMiwa),
            "ladd" | "ladder" => Ok(Model::Ladder),
            other => Err(format!("unknown model {other:?} (expected reg or ladd)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub sign: Sign,
    #[serde(rename = "box")]
    pub cell: BoxCoord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Word {
    pub model: Model,
    pub residue: usize,
    pub reduced: bool,
    pub entries: Vec<SignatureEntry>,
}

impl Word {
    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|e| e.sign).collect()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.entries.iter().filter(|e| e.sign == sign).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let s = match e.sign {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            write!(f, "{s}{}", e.cell)?;
        }
        Ok(())
    }
}

/// The `i`-signature of `p` in reading order. Panics when `i >= ell`.
pub fn signature(p: &Partition, i: usize, ell: Ell, model: Model) -> Word {
    assert!(i < ell.get(), "residue {i} out of range for ell = {ell}");
    let mut entries: Vec<SignatureEntry> = p
        .boxes_of_residue(i, ell, BoxKind::Addable)
        .into_iter()
        .map(|cell| SignatureEntry {
            sign: Sign::Plus,
            cell,
        })
        .chain(
            p.boxes_of_residue(i, ell, BoxKind::Removable)
                .into_iter()
                .map(|cell| SignatureEntry {
                    sign: Sign::Minus,
                    cell,
                }),
        )
        .collect();
    match model {
        // At most one i-entry per row, so rows totally order the word.
        Model::MisraMiwa => entries.sort_by_key(|e| std::cmp::Reverse(e.cell.row)),
        Model::Ladder => entries.sort_by_key(|e| (ladder_index(e.cell, ell), e.cell.row)),
    }
    Word {
        model,
        residue: i,
        reduced: false,
        entries,
    }
}

/// Cancels adjacent `-+` pairs until none remain.
pub fn reduce(w: &Word) -> Word {
    let mut kept: Vec<SignatureEntry> = Vec::with_capacity(w.entries.len());
    for &e in &w.entries {
        if e.sign == Sign::Plus && kept.last().is_some_and(|t| t.sign == Sign::Minus) {
            kept.pop();
        } else {
            kept.push(e);
        }
    }
    Word {
        model: w.model,
        residue: w.residue,
        reduced: true,
        entries: kept,
    }
}

pub fn reduced_signature(p: &Partition, i: usize, ell: Ell, model: Model) -> Word {
    reduce(&signature(p, i, ell, model))
}

/// Removes the box of the leftmost `-` of the reduced word.
pub fn e_op(p: &Partition, i: usize, ell: Ell, model: Model) -> Option<Partition> {
    let w = reduced_signature(p, i, ell, model);
    let cell = w.entries.iter().find(|e| e.sign == Sign::Minus)?.cell;
    p.remove_box(cell)
}

/// Adds the box of the rightmost `+` of the reduced word.
pub fn f_op(p: &Partition, i: usize, ell: Ell, model: Model) -> Option<Partition> {
    let w = reduced_signature(p, i, ell, model);
    let cell = w.entries.iter().rev().find(|e| e.sign == Sign::Plus)?.cell;
    p.add_box(cell)
}

/// Number of `-` left after reduction: how often `e_op` applies in a row.
pub fn epsilon(p: &Partition, i: usize, ell: Ell, model: Model) -> usize {
    reduced_signature(p, i, ell, model).count(Sign::Minus)
}

/// Number of `+` left after reduction: how often `f_op` applies in a row.
pub fn phi(p: &Partition, i: usize, ell: Ell, model: Model) -> usize {
    reduced_signature(p, i, ell, model).count(Sign::Plus)
}

/// `e_op` applied `k` times.
pub fn e_pow(p: &Partition, i: usize, k: usize, ell: Ell, model: Model) -> Option<Partition> {
    (0..k).try_fold(p.clone(), |q, _| e_op(&q, i, ell, model))
}

/// `f_op` applied `k` times.
pub fn f_pow(p: &Partition, i: usize, k: usize, ell: Ell, model: Model) -> Option<Partition> {
    (0..k).try_fold(p.clone(), |q, _| f_op(&q, i, ell, model))
}

/// Boxes of a word, for callers that need the positions only.
pub fn cells(w: &Word, sign: Sign) -> Vec<BoxCoord> {
    w.entries
        .iter()
        .filter(|e| e.sign == sign)
        .map(|e| e.cell)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn l3() -> Ell {
        Ell::new(3).unwrap()
    }

    fn word(signs: &[Sign]) -> Word {
        Word {
            model: Model::MisraMiwa,
            residue: 0,
            reduced: false,
            entries: signs
                .iter()
                .enumerate()
                .map(|(k, &sign)| SignatureEntry {
                    sign,
                    cell: BoxCoord::new(k + 1, 1),
                })
                .collect(),
        }
    }

    #[test]
    fn signature_examples() {
        let l = l3();
        let w = signature(&p("2"), 2, l, Model::MisraMiwa);
        assert_eq!(
            cells(&w, Plus),
            vec![BoxCoord::new(2, 1), BoxCoord::new(1, 3)]
        );
        assert_eq!(w.count(Minus), 0);

        let mm = signature(&p("1,1"), 1, l, Model::MisraMiwa);
        assert_eq!(
            cells(&mm, Plus),
            vec![BoxCoord::new(3, 1), BoxCoord::new(1, 2)]
        );
        let ladd = signature(&p("1,1"), 1, l, Model::Ladder);
        assert_eq!(
            cells(&ladd, Plus),
            vec![BoxCoord::new(1, 2), BoxCoord::new(3, 1)]
        );

        for model in Model::ALL {
            let w = signature(&Partition::empty(), 0, l, model);
            assert_eq!(cells(&w, Plus), vec![BoxCoord::new(1, 1)]);
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&word(&[Minus, Plus])).signs(), vec![]);
        assert_eq!(
            reduce(&word(&[Plus, Minus, Plus, Minus])).signs(),
            vec![Plus, Minus]
        );
        assert_eq!(reduce(&word(&[Plus, Plus])).signs(), vec![Plus, Plus]);
        assert_eq!(
            reduce(&word(&[Minus, Minus, Plus, Plus, Plus])).signs(),
            vec![Plus]
        );
        assert!(reduce(&word(&[Plus])).reduced);
    }

    #[test]
    fn operator_examples() {
        let l = l3();
        for model in Model::ALL {
            assert_eq!(f_op(&Partition::empty(), 0, l, model), Some(p("1")));
            assert_eq!(phi(&Partition::empty(), 0, l, model), 1);
            for i in 0..3 {
                assert_eq!(epsilon(&Partition::empty(), i, l, model), 0);
                assert_eq!(e_op(&Partition::empty(), i, l, model), None);
            }
        }
        assert_eq!(f_op(&p("1,1"), 1, l, Model::MisraMiwa), Some(p("2,1")));
        assert_eq!(f_op(&p("1,1"), 1, l, Model::Ladder), Some(p("1,1,1")));
        assert_eq!(e_op(&p("1,1,1"), 1, l, Model::Ladder), Some(p("1,1")));
        assert_eq!(phi(&p("2"), 2, l, Model::MisraMiwa), 2);
        assert_eq!(epsilon(&p("1,1,1"), 1, l, Model::Ladder), 1);
    }

    #[test]
    fn powers() {
        let l = l3();
        assert_eq!(f_pow(&p("2"), 2, 2, l, Model::MisraMiwa), Some(p("3,1")));
        assert_eq!(f_pow(&p("2"), 2, 3, l, Model::MisraMiwa), None);
        assert_eq!(e_pow(&p("3,1"), 2, 0, l, Model::MisraMiwa), Some(p("3,1")));
    }

    #[test]
    fn model_names() {
        assert_eq!("reg".parse(), Ok(Model::MisraMiwa));
        assert_eq!("ladd".parse(), Ok(Model::Ladder));
        assert!("bogus".parse::<Model>().is_err());
        assert_eq!(serde_json::to_string(&Model::Ladder).unwrap(), "\"ladd\"");
    }
}
