use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::signature::{e_op, epsilon, f_op, phi, Model};
use crate::error::{Error, Result};
use crate::ladder::regularize;
use crate::partition::{Ell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: Partition,
    pub residue: usize,
    pub to: Partition,
}

/// The part of a crystal reachable from the empty partition by `f_op`, up to
/// a maximum rank. Each layer lists its nodes in canonical order
/// (lexicographically decreasing) and edges are sorted by source layer
/// position, then residue.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub model: Model,
    pub ell: Ell,
    pub max_n: usize,
    layers: Vec<Vec<Partition>>,
    edges: Vec<Edge>,
    index: HashSet<Partition>,
}

impl CrystalGraph {
    /// Nodes of rank `n`, or an empty slice past `max_n`.
    pub fn layer(&self, n: usize) -> &[Partition] {
        self.layers.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn layers(&self) -> &[Vec<Partition>] {
        &self.layers
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Partition> {
        self.layers.iter().flatten()
    }

    pub fn node_count(&self) -> usize {
        self.index.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.index.contains(p)
    }
}

/// Breadth-first closure of `{∅}` under every `f_i`, up to rank `max_n`.
pub fn build_crystal(ell: Ell, max_n: usize, model: Model) -> CrystalGraph {
    let mut layers = vec![vec![Partition::empty()]];
    let mut edges = Vec::new();
    for _ in 0..max_n {
        let current = layers.last().expect("at least one layer");
        let layer_edges: Vec<Edge> = current
            .par_iter()
            .flat_map_iter(|p| {
                (0..ell.get()).filter_map(move |i| {
                    f_op(p, i, ell, model).map(|to| Edge {
                        from: p.clone(),
                        residue: i,
                        to,
                    })
                })
            })
            .collect();
        let mut next: Vec<Partition> = layer_edges.iter().map(|e| e.to.clone()).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        next.dedup();
        edges.extend(layer_edges);
        layers.push(next);
    }
    let index = layers.iter().flatten().cloned().collect();
    log::debug!(
        "built {model} crystal for ell = {ell} up to rank {max_n}: {} edges",
        edges.len()
    );
    CrystalGraph {
        model,
        ell,
        max_n,
        layers,
        edges,
        index,
    }
}

/// Membership in the crystal without building it: `p` is a node when it is
/// empty or some `e_i p` is a node, since `f_i e_i p = p` whenever `e_i p`
/// exists.
pub fn is_node(p: &Partition, ell: Ell, model: Model) -> bool {
    fn go(p: &Partition, ell: Ell, model: Model, memo: &mut HashMap<Partition, bool>) -> bool {
        if p.is_empty() {
            return true;
        }
        if let Some(&v) = memo.get(p) {
            return v;
        }
        let v = (0..ell.get()).any(|i| {
            e_op(p, i, ell, model).is_some_and(|q| {
                f_op(&q, i, ell, model).as_ref() == Some(p) && go(&q, ell, model, memo)
            })
        });
        memo.insert(p.clone(), v);
        v
    }
    go(p, ell, model, &mut HashMap::new())
}

/// The ladder-crystal node in the regularization class of the `ell`-regular
/// partition `p`: walk `p` down to `∅` in the Misra-Miwa crystal and replay
/// the path upwards with the ladder operators.
pub fn ladder_node_of_class(p: &Partition, ell: Ell) -> Result<Partition> {
    let mut path = Vec::new();
    let mut current = p.clone();
    while !current.is_empty() {
        let (i, below) = (0..ell.get())
            .find_map(|i| e_op(&current, i, ell, Model::MisraMiwa).map(|q| (i, q)))
            .ok_or_else(|| {
                Error::Crystal(format!(
                    "{p} does not reach the empty partition in reg_{ell}"
                ))
            })?;
        path.push(i);
        current = below;
    }
    let mut node = Partition::empty();
    for &i in path.iter().rev() {
        node = f_op(&node, i, ell, Model::Ladder).ok_or_else(|| {
            Error::Crystal(format!("ladder path for {p} stops at {node} (residue {i})"))
        })?;
    }
    if regularize(&node, ell) != *p {
        return Err(Error::Crystal(format!(
            "ladder node {node} regularizes to {}, not {p}",
            regularize(&node, ell)
        )));
    }
    Ok(node)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub ell: Ell,
    pub max_n: usize,
    pub ladder_nodes: usize,
    pub regular_nodes: usize,
    pub violations: Vec<String>,
}

impl IsomorphismReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that regularization maps the ladder crystal onto the Misra-Miwa
/// crystal: a rank-preserving bijection on nodes that commutes with every
/// `e_i` and `f_i` and preserves `epsilon_i` and `phi_i`.
pub fn check_isomorphism(ell: Ell, max_n: usize) -> IsomorphismReport {
    let ladd = build_crystal(ell, max_n, Model::Ladder);
    let reg = build_crystal(ell, max_n, Model::MisraMiwa);
    check_isomorphism_of(&ladd, &reg)
}

pub fn check_isomorphism_of(ladd: &CrystalGraph, reg: &CrystalGraph) -> IsomorphismReport {
    let ell = ladd.ell;
    let max_n = ladd.max_n.min(reg.max_n);
    let mut violations = Vec::new();

    for n in 0..=max_n {
        let mut images: BTreeMap<Partition, Vec<&Partition>> = BTreeMap::new();
        for p in ladd.layer(n) {
            images.entry(regularize(p, ell)).or_default().push(p);
        }
        for (image, sources) in &images {
            if sources.len() > 1 {
                violations.push(format!("rank {n}: {sources:?} all regularize to {image}"));
            }
            if !reg.contains(image) {
                violations.push(format!(
                    "rank {n}: {image} (from {:?}) is not a reg node",
                    sources
                ));
            }
        }
        for q in reg.layer(n) {
            if !images.contains_key(q) {
                violations.push(format!("rank {n}: reg node {q} has no ladder preimage"));
            }
        }
    }

    let per_node: Vec<String> = ladd
        .layers()
        .par_iter()
        .flatten()
        .flat_map_iter(|p| {
            let image = regularize(p, ell);
            let mut out = Vec::new();
            for i in 0..ell.get() {
                let up = f_op(p, i, ell, Model::Ladder).map(|q| regularize(&q, ell));
                let up_reg = f_op(&image, i, ell, Model::MisraMiwa);
                if up != up_reg {
                    out.push(format!("f_{i}: R(f {p}) = {up:?} but f R({p}) = {up_reg:?}"));
                }
                let down = e_op(p, i, ell, Model::Ladder).map(|q| regularize(&q, ell));
                let down_reg = e_op(&image, i, ell, Model::MisraMiwa);
                if down != down_reg {
                    out.push(format!("e_{i}: R(e {p}) = {down:?} but e R({p}) = {down_reg:?}"));
                }
                let stats = (epsilon(p, i, ell, Model::Ladder), phi(p, i, ell, Model::Ladder));
                let stats_reg = (
                    epsilon(&image, i, ell, Model::MisraMiwa),
                    phi(&image, i, ell, Model::MisraMiwa),
                );
                if stats != stats_reg {
                    out.push(format!(
                        "residue {i}: (eps, phi) of {p} is {stats:?} but of {image} is {stats_reg:?}"
                    ));
                }
            }
            out
        })
        .collect();
    violations.extend(per_node);

    IsomorphismReport {
        ell,
        max_n,
        ladder_nodes: ladd.node_count(),
        regular_nodes: reg.node_count(),
        violations,
    }
}
