//! Exhaustive checkers, one per statement, over every partition up to a
//! given rank.
//!
//! Each checker returns the number of instances satisfying its hypothesis
//! and a list of counterexamples, which is empty when the statement holds
//! in range. Work is spread over the current rayon pool; results are
//! collected in enumeration order so reports are deterministic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::graph::{build_crystal, check_isomorphism_of, is_node};
use super::signature::{e_pow, epsilon, f_pow, phi, reduce, signature, Model, Sign};
use crate::enumerate::{partitions, partitions_up_to};
use crate::error::{Error, Result};
use crate::jm::{
    is_jm, is_weak_by_class_scan, is_weak_by_ladder_node, jm_witness, normalize_witness, WeakIndex,
};
use crate::ladder::{ladder_index, ladder_occupancy, regularize};
use crate::partition::{BoxKind, Ell, Partition};
use crate::quintuple::{compose_quintuple, decompose, quintuple_sweep, SweepBounds};
use crate::rim_hook::{
    add_horizontal_hook, add_vertical_hook, core, is_core, is_generalized_l_partition,
    is_l_partition, removable_rim_hooks, terminal_cores,
};

/// Names accepted by [`verify_theorem`], in the order `all` runs them.
pub const THEOREMS: &[&str] = &[
    "reg_prop",
    "hook_length_divisible",
    "core_unique",
    "main_theorem_l_partitions",
    "main_theorem_JM",
    "rearrange",
    "adding",
    "JMAAR",
    "construct_JMs",
    "isomorphism",
    "cores",
    "nodes_JM",
    "cancelation",
    "irreducible_nodes",
    "top_and_bottom",
    "top_and_bottom_JM",
    "top_and_bottom_weak",
    "weak_routes",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub ell: Ell,
    pub max_n: usize,
    /// Instances satisfying the hypothesis.
    pub checked: usize,
    pub violations: Vec<String>,
    /// Informational tallies that are not pass/fail.
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Outcome {
    checked: usize,
    violations: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(checked: usize, violations: Vec<String>) -> Self {
        Outcome {
            checked,
            violations,
            notes: Vec::new(),
        }
    }
}

pub fn verify_theorem(name: &str, ell: Ell, max_n: usize) -> Result<TheoremReport> {
    log::info!("verifying {name} for ell = {ell} up to rank {max_n}");
    let outcome = match name {
        "reg_prop" => reg_prop(ell, max_n),
        "hook_length_divisible" => hook_length_divisible(ell, max_n),
        "core_unique" => core_unique(ell, max_n),
        "main_theorem_l_partitions" => main_theorem_l_partitions(ell, max_n),
        "main_theorem_JM" => main_theorem_jm(ell, max_n),
        "rearrange" => rearrange(ell, max_n),
        "adding" => adding(ell, max_n),
        "JMAAR" => jmaar(ell, max_n),
        "construct_JMs" => construct_jms(ell, max_n, SweepBounds::default()),
        "isomorphism" => isomorphism(ell, max_n),
        "cores" => cores(ell, max_n),
        "nodes_JM" => nodes_jm(ell, max_n),
        "cancelation" => cancelation(ell, max_n),
        "irreducible_nodes" => irreducible_nodes(ell, max_n),
        "top_and_bottom" => top_and_bottom(ell, max_n),
        "top_and_bottom_JM" => top_and_bottom_jm(ell, max_n),
        "top_and_bottom_weak" => top_and_bottom_weak(ell, max_n),
        "weak_routes" => weak_routes(ell, max_n),
        other => return Err(Error::UnknownTheorem(other.to_string())),
    };
    Ok(TheoremReport {
        name: name.to_string(),
        ell,
        max_n,
        checked: outcome.checked,
        violations: outcome.violations,
        notes: outcome.notes,
    })
}

fn all_up_to(max_n: usize) -> Vec<Partition> {
    partitions_up_to(max_n).collect()
}

/// Runs `check` on every partition accepted by `hyp`; returns how many were
/// accepted and the concatenated violations.
fn sweep<H, C>(items: &[Partition], hyp: H, check: C) -> Outcome
where
    H: Fn(&Partition) -> bool + Sync,
    C: Fn(&Partition) -> Vec<String> + Sync,
{
    let results: Vec<Option<Vec<String>>> =
        items.par_iter().map(|p| hyp(p).then(|| check(p))).collect();
    let checked = results.iter().filter(|r| r.is_some()).count();
    let violations = results.into_iter().flatten().flatten().collect();
    Outcome::new(checked, violations)
}

fn any(_: &Partition) -> bool {
    true
}

fn reg_prop(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    let mut out = sweep(&items, any, |p| {
        let mut v = Vec::new();
        let r = regularize(p, ell);
        if !r.is_regular(ell) {
            v.push(format!("R({p}) = {r} is not regular"));
        }
        if (r == *p) != p.is_regular(ell) {
            v.push(format!(
                "R({p}) = {r} but regular({p}) = {}",
                p.is_regular(ell)
            ));
        }
        if regularize(&r, ell) != r {
            v.push(format!("R is not idempotent at {p}"));
        }
        if r.rank() != p.rank() {
            v.push(format!("R({p}) = {r} changes the rank"));
        }
        if ladder_occupancy(&r, ell) != ladder_occupancy(p, ell) {
            v.push(format!("R({p}) = {r} changes ladder occupancy"));
        }
        v
    });
    // Each regularization class has exactly one regular member.
    for n in 0..=max_n {
        let mut classes: BTreeMap<Partition, usize> = BTreeMap::new();
        for p in partitions(n) {
            let regular = usize::from(p.is_regular(ell));
            *classes.entry(regularize(&p, ell)).or_default() += regular;
        }
        for (rep, count) in classes {
            if count != 1 {
                out.violations
                    .push(format!("class of {rep} has {count} regular members"));
            }
        }
    }
    out
}

fn hook_length_divisible(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(&items, any, |p| {
        let table = p.hook_table();
        let mut v = Vec::new();
        let mut divisible_somewhere = false;
        for b in p.boxes() {
            let divisible = table.get(b.row, b.col) % ell.get() == 0;
            divisible_somewhere |= divisible;
            let witness = p.hook_divisibility_witness(b, ell).ok().flatten();
            if witness.is_some() != divisible {
                v.push(format!(
                    "{p} at {b}: hook {} but witness {witness:?}",
                    table.get(b.row, b.col)
                ));
            }
        }
        if divisible_somewhere == is_core(p, ell) {
            v.push(format!("{p}: core status disagrees with hook divisibility"));
        }
        v
    })
}

fn core_unique(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(&items, any, |p| {
        let mut v = Vec::new();
        let c = core(p, ell);
        let ends = terminal_cores(p, ell);
        if ends.len() != 1 || !ends.contains(&c) {
            v.push(format!(
                "{p}: removal sequences end at {ends:?}, greedy core {c}"
            ));
        }
        if c.hook_table()
            .rows()
            .iter()
            .flatten()
            .any(|h| h % ell.get() == 0)
        {
            v.push(format!("core {c} of {p} has a hook divisible by {ell}"));
        }
        if (c == *p) != removable_rim_hooks(p, ell).is_empty() {
            v.push(format!(
                "{p}: fixed point of core disagrees with hook removability"
            ));
        }
        v
    })
}

fn main_theorem_l_partitions(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(&items, any, |p| {
        let lhs = is_l_partition(p, ell);
        let rhs = p.is_regular(ell) && p.satisfies_star(ell);
        if lhs == rhs {
            vec![]
        } else {
            vec![format!(
                "{p}: l-partition = {lhs}, regular and star = {rhs}"
            )]
        }
    })
}

fn main_theorem_jm(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(&items, any, |p| {
        let lhs = is_jm(p, ell);
        let rhs = is_generalized_l_partition(p, ell);
        if lhs == rhs {
            vec![]
        } else {
            vec![format!("{p}: JM = {lhs}, generalized = {rhs}")]
        }
    })
}

fn rearrange(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(
        &items,
        |p| !is_jm(p, ell),
        |p| {
            let mut v = Vec::new();
            match normalize_witness(p, ell) {
                Some(w) if w.normalized && w.holds_in(p, ell) => {
                    let after = w.pivot.row < w.col_mate.row && w.pivot.col < w.row_mate.col;
                    if !after {
                        v.push(format!(
                            "{p}: witness {w:?} is not right of and below its pivot"
                        ));
                    }
                }
                other => v.push(format!("{p}: no normalized witness ({other:?})")),
            }
            if let Some(w) = jm_witness(p, ell) {
                if !w.holds_in(p, ell) {
                    v.push(format!("{p}: witness {w:?} does not hold"));
                }
            }
            v
        },
    )
}

fn adding(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(
        &items,
        |p| !is_jm(p, ell),
        |p| {
            let horizontal = (1..=p.len() + 1).filter_map(|row| add_horizontal_hook(p, row, ell));
            let vertical = (1..=p.part(1) + 1).filter_map(|col| add_vertical_hook(p, col, ell));
            horizontal
                .chain(vertical)
                .filter(|q| is_jm(q, ell))
                .map(|q| format!("{p} is not JM but {q} is"))
                .collect()
        },
    )
}

fn jmaar(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(
        &items,
        |p| is_jm(p, ell),
        |p| {
            (0..ell.get())
                .filter(|&i| {
                    !p.boxes_of_residue(i, ell, BoxKind::Removable).is_empty()
                        && p.boxes_of_residue(i, ell, BoxKind::Addable).len() >= 2
                })
                .map(|i| format!("{p}: removable and two addable boxes of residue {i}"))
                .collect()
        },
    )
}

fn construct_jms(ell: Ell, max_n: usize, bounds: SweepBounds) -> Outcome {
    let items = all_up_to(max_n);
    let mut out = sweep(&items, any, |p| match (is_jm(p, ell), decompose(p, ell)) {
        (true, Ok(q)) => match compose_quintuple(&q, ell) {
            Ok(back) if back == *p => vec![],
            other => vec![format!("{p} decomposes to {q} which composes to {other:?}")],
        },
        (true, Err(e)) => vec![format!("{p} is JM but decompose failed: {e}")],
        (false, Err(Error::NotJm(_))) => vec![],
        (false, other) => vec![format!("{p} is not JM but decompose gave {other:?}")],
    });
    let quintuples = quintuple_sweep(ell, bounds);
    let swept: Vec<Vec<String>> = quintuples
        .par_iter()
        .map(|q| match compose_quintuple(q, ell) {
            Err(e) => vec![format!("{q} does not compose: {e}")],
            Ok(lam) if !is_jm(&lam, ell) => vec![format!("{q} composes to non-JM {lam}")],
            Ok(lam) => match decompose(&lam, ell) {
                Ok(back) if back == *q => vec![],
                other => vec![format!(
                    "{q} composes to {lam} which decomposes to {other:?}"
                )],
            },
        })
        .collect();
    out.checked += quintuples.len();
    out.violations.extend(swept.into_iter().flatten());
    out.notes.push(format!(
        "{} quintuples swept (|mu| <= {}, r, s <= {}, hook counts <= {})",
        quintuples.len(),
        bounds.max_mu_rank,
        bounds.max_rs,
        bounds.max_hook_count
    ));
    out
}

fn isomorphism(ell: Ell, max_n: usize) -> Outcome {
    let ladd = build_crystal(ell, max_n, Model::Ladder);
    let reg = build_crystal(ell, max_n, Model::MisraMiwa);
    let report = check_isomorphism_of(&ladd, &reg);
    let mut violations = report.violations;
    for n in 0..=max_n {
        let expected: Vec<Partition> = partitions(n).filter(|p| p.is_regular(ell)).collect();
        if reg.layer(n) != expected.as_slice() {
            violations.push(format!(
                "rank {n}: reg layer differs from the regular partitions"
            ));
        }
        if ladd.layer(n).len() != reg.layer(n).len() {
            violations.push(format!(
                "rank {n}: {} ladder nodes vs {} reg nodes",
                ladd.layer(n).len(),
                reg.layer(n).len()
            ));
        }
    }
    Outcome::new(ladd.node_count(), violations)
}

fn cores(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    let ladd = build_crystal(ell, max_n, Model::Ladder);
    sweep(
        &items,
        |p| is_core(p, ell),
        |p| {
            let mut v = Vec::new();
            if !ladd.contains(p) || !is_node(p, ell, Model::Ladder) {
                v.push(format!("core {p} is not a ladder node"));
            }
            for i in 0..ell.get() {
                let phi_l = phi(p, i, ell, Model::Ladder);
                let phi_r = phi(p, i, ell, Model::MisraMiwa);
                if phi_l != phi_r {
                    v.push(format!(
                        "core {p}, residue {i}: ladder phi {phi_l}, reg phi {phi_r}"
                    ));
                }
                let top_l = f_pow(p, i, phi_l, ell, Model::Ladder);
                let top_r = f_pow(p, i, phi_r, ell, Model::MisraMiwa);
                if top_l != top_r {
                    v.push(format!(
                        "core {p}, residue {i}: tops {top_l:?} and {top_r:?} differ"
                    ));
                }
            }
            v
        },
    )
}

fn nodes_jm(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(
        &items,
        |p| is_jm(p, ell),
        |p| {
            let mut v = Vec::new();
            for i in 0..ell.get() {
                let w = signature(p, i, ell, Model::Ladder);
                for minus in w.entries.iter().filter(|e| e.sign == Sign::Minus) {
                    for plus in w.entries.iter().filter(|e| e.sign == Sign::Plus) {
                        let same = ladder_index(minus.cell, ell) == ladder_index(plus.cell, ell);
                        if same && minus.cell.row < plus.cell.row {
                            v.push(format!(
                                "{p}, residue {i}: - at {} above + at {}",
                                minus.cell, plus.cell
                            ));
                        }
                    }
                }
            }
            v
        },
    )
}

fn cancelation(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    sweep(
        &items,
        |p| is_jm(p, ell),
        |p| {
            (0..ell.get())
                .filter_map(|i| {
                    let w = signature(p, i, ell, Model::Ladder);
                    let r = reduce(&w);
                    (r.entries != w.entries)
                        .then(|| format!("{p}, residue {i}: {w} reduces to {r}"))
                })
                .collect()
        },
    )
}

fn irreducible_nodes(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    let ladd = build_crystal(ell, max_n, Model::Ladder);
    let mut out = sweep(
        &items,
        |p| is_jm(p, ell),
        |p| {
            if ladd.contains(p) {
                vec![]
            } else {
                vec![format!("JM partition {p} is not a ladder node")]
            }
        },
    );
    let mut per_class: BTreeMap<Partition, Vec<&Partition>> = BTreeMap::new();
    for p in ladd.nodes() {
        per_class.entry(regularize(p, ell)).or_default().push(p);
    }
    for (rep, members) in per_class {
        if members.len() > 1 {
            out.violations
                .push(format!("class of {rep} holds ladder nodes {members:?}"));
        }
    }
    out
}

/// Boundary powers the statements leave open, tallied but never failed.
#[derive(Default)]
struct Boundary {
    f_holds: usize,
    f_fails: usize,
    e_holds: usize,
    e_fails: usize,
}

impl Boundary {
    fn merge(mut self, o: Boundary) -> Boundary {
        self.f_holds += o.f_holds;
        self.f_fails += o.f_fails;
        self.e_holds += o.e_holds;
        self.e_fails += o.e_fails;
        self
    }

    fn notes(&self, what: &str) -> Vec<String> {
        vec![
            format!(
                "k = phi - 1 (unclaimed): {} {what}, {} not",
                self.f_holds, self.f_fails
            ),
            format!(
                "k = 1 on the e side (unclaimed): {} {what}, {} not",
                self.e_holds, self.e_fails
            ),
        ]
    }
}

/// The four clauses for partitions satisfying `hyp`, using the operators of
/// `model` and the class predicate `member`:
///   1. `f^phi` and 2. `e^eps` stay in the class;
///   3. `f^k` leaves it for `0 < k < phi - 1`;
///   4. `e^k` leaves it for `1 < k < eps`.
fn top_and_bottom_clauses<H, M>(
    items: &[Partition],
    ell: Ell,
    model: Model,
    what: &str,
    hyp: H,
    member: M,
) -> Outcome
where
    H: Fn(&Partition) -> bool + Sync,
    M: Fn(&Partition) -> bool + Sync,
{
    let results: Vec<Option<(Vec<String>, Boundary)>> = items
        .par_iter()
        .map(|p| {
            if !hyp(p) {
                return None;
            }
            let mut v = Vec::new();
            let mut b = Boundary::default();
            for i in 0..ell.get() {
                let ph = phi(p, i, ell, model);
                let ep = epsilon(p, i, ell, model);
                let f = |k| f_pow(p, i, k, ell, model).expect("k <= phi");
                let e = |k| e_pow(p, i, k, ell, model).expect("k <= eps");

                let top = f(ph);
                if !member(&top) {
                    v.push(format!("{p}, i = {i}: f^{ph} = {top} is not {what}"));
                }
                let bottom = e(ep);
                if !member(&bottom) {
                    v.push(format!("{p}, i = {i}: e^{ep} = {bottom} is not {what}"));
                }
                for k in 1..ph.saturating_sub(1) {
                    let q = f(k);
                    if member(&q) {
                        v.push(format!("{p}, i = {i}: f^{k} = {q} is {what} (phi = {ph})"));
                    }
                }
                for k in 2..ep {
                    let q = e(k);
                    if member(&q) {
                        v.push(format!("{p}, i = {i}: e^{k} = {q} is {what} (eps = {ep})"));
                    }
                }
                if ph >= 2 {
                    if member(&f(ph - 1)) {
                        b.f_holds += 1;
                    } else {
                        b.f_fails += 1;
                    }
                }
                if ep >= 2 {
                    if member(&e(1)) {
                        b.e_holds += 1;
                    } else {
                        b.e_fails += 1;
                    }
                }
            }
            Some((v, b))
        })
        .collect();
    let checked = results.iter().filter(|r| r.is_some()).count();
    let mut violations = Vec::new();
    let mut boundary = Boundary::default();
    for (v, b) in results.into_iter().flatten() {
        violations.extend(v);
        boundary = boundary.merge(b);
    }
    Outcome {
        checked,
        violations,
        notes: boundary.notes(what),
    }
}

fn top_and_bottom(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    top_and_bottom_clauses(
        &items,
        ell,
        Model::MisraMiwa,
        "an l-partition",
        |p| is_l_partition(p, ell),
        |q| is_l_partition(q, ell),
    )
}

fn top_and_bottom_jm(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    top_and_bottom_clauses(
        &items,
        ell,
        Model::Ladder,
        "JM",
        |p| is_jm(p, ell),
        |q| is_jm(q, ell),
    )
}

fn top_and_bottom_weak(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    // f^phi can climb above max_n; index far enough for every top.
    let reach = items
        .iter()
        .filter(|p| p.is_regular(ell))
        .flat_map(|p| (0..ell.get()).map(move |i| p.rank() + phi(p, i, ell, Model::MisraMiwa)))
        .max()
        .unwrap_or(0);
    let weak = WeakIndex::build(ell, reach.max(max_n));
    let is_weak = |q: &Partition| q.is_regular(ell) && weak.is_weak(q).expect("indexed rank");
    top_and_bottom_clauses(&items, ell, Model::MisraMiwa, "weak", is_weak, is_weak)
}

fn weak_routes(ell: Ell, max_n: usize) -> Outcome {
    let items = all_up_to(max_n);
    let index = WeakIndex::build(ell, max_n);
    sweep(
        &items,
        |p| p.is_regular(ell),
        |p| {
            let scan = is_weak_by_class_scan(p, ell);
            let ladder = is_weak_by_ladder_node(p, ell);
            let indexed = index.is_weak(p);
            match (&scan, &ladder) {
                (Ok(a), Ok(b)) if a == b && indexed == Some(*a) => vec![],
                _ => vec![format!(
                    "{p}: class scan {scan:?}, ladder node {ladder:?}, index {indexed:?}"
                )],
            }
        },
    )
}
