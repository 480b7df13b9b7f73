//! The `(mu, r, s, rho, sigma)` coordinates of an (ell,0)-JM partition.
//!
//! Starting from an `ell`-core `mu`, stack `r` rows on top of it, each
//! `ell - 1` longer than the one below, and `s` columns to its left, each
//! `ell - 1` taller than the one to its right. Then attach `rho_i`
//! horizontal hooks to row `i` (for `i <= r + 1`) and `sigma_j` vertical
//! hooks to column `j` (for `j <= s + 1`).
//!
//! When `mu` is empty there is no row of bare length `s` between the stacked
//! rows and the stacked columns: row `r + 1` is the first row of the column
//! block, and column `s + 1` is `r` boxes tall.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::partitions_up_to;
use crate::error::{Error, Result};
use crate::jm::is_jm;
use crate::partition::{Ell, Partition};
use crate::rim_hook::{core, is_core, removable_rim_hooks, remove_hook, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JmQuintuple {
    pub mu: Partition,
    pub r: usize,
    pub s: usize,
    pub rho: Partition,
    pub sigma: Partition,
}

impl JmQuintuple {
    pub fn new(mu: Partition, r: usize, s: usize, rho: Partition, sigma: Partition) -> Self {
        JmQuintuple {
            mu,
            r,
            s,
            rho,
            sigma,
        }
    }

    pub fn validate(&self, ell: Ell) -> Result<()> {
        let l = ell.get();
        let fail = |msg: String| Err(Error::InvalidQuintuple(msg));
        if !is_core(&self.mu, ell) {
            return fail(format!("mu = {} is not a {l}-core", self.mu));
        }
        let mu_conj = self.mu.conjugate();
        if self.mu.part(1) - self.mu.part(2) >= l - 1 || mu_conj.part(1) - mu_conj.part(2) >= l - 1
        {
            return fail(format!(
                "mu = {} must have its first row and first column exceed the next by less than {}",
                self.mu,
                l - 1
            ));
        }
        if self.rho.len() > self.r + 1 {
            return fail(format!(
                "rho = {} has more than r + 1 = {} parts",
                self.rho,
                self.r + 1
            ));
        }
        if self.sigma.len() > self.s + 1 {
            return fail(format!(
                "sigma = {} has more than s + 1 = {} parts",
                self.sigma,
                self.s + 1
            ));
        }
        if self.mu.is_empty() && self.rho.part(self.r + 1) > 0 && self.sigma.part(self.s + 1) > 0 {
            return fail("with empty mu, rho_{r+1} or sigma_{s+1} must be zero".to_string());
        }
        Ok(())
    }
}

impl fmt::Display for JmQuintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mu={} r={} s={} rho={} sigma={}",
            self.mu, self.r, self.s, self.rho, self.sigma
        )
    }
}

/// Builds the partition with coordinates `q`.
pub fn compose_quintuple(q: &JmQuintuple, ell: Ell) -> Result<Partition> {
    q.validate(ell)?;
    let l = ell.get();
    let (r, s) = (q.r, q.s);
    let mu1 = q.mu.part(1);

    let mut rows = Vec::new();
    for i in 1..=r {
        rows.push(s + mu1 + (r + 1 - i) * (l - 1) + q.rho.part(i) * l);
    }
    if !q.mu.is_empty() {
        rows.push(s + mu1 + q.rho.part(r + 1) * l);
        rows.extend(q.mu.parts()[1..].iter().map(|m| s + m));
    }

    let block_start = rows.len();
    rows.extend(std::iter::repeat_n(s + 1, q.sigma.part(s + 1) * l));
    for j in (1..=s).rev() {
        let height = l - 1 + (q.sigma.part(j) - q.sigma.part(j + 1)) * l;
        rows.extend(std::iter::repeat_n(j, height));
    }

    if q.mu.is_empty() {
        let extra = q.rho.part(r + 1) * l;
        if extra > 0 {
            match rows.get_mut(block_start) {
                Some(first) => *first += extra,
                None => rows.push(extra),
            }
        }
    }

    Partition::new(rows)
        .map_err(|e| Error::InvalidQuintuple(format!("{q} does not build a partition: {e}")))
}

/// Recovers the coordinates of a JM partition: peel hooks to the core
/// counting them per row and per column, then read off the stacked rows and
/// columns of the core.
pub fn decompose(p: &Partition, ell: Ell) -> Result<JmQuintuple> {
    if !is_jm(p, ell) {
        return Err(Error::NotJm(p.to_string()));
    }
    let l = ell.get();
    let mut rho = vec![0usize; p.len()];
    let mut sigma = vec![0usize; p.part(1)];
    let mut current = p.clone();
    while let Some(h) = removable_rim_hooks(&current, ell).into_iter().next() {
        match h.orientation {
            Orientation::Horizontal => rho[h.head.row - 1] += 1,
            Orientation::Vertical => sigma[h.head.col - 1] += 1,
            Orientation::Mixed => {
                return Err(Error::InvalidQuintuple(format!(
                    "{p} reached {current}, which has a mixed {l}-rim hook"
                )))
            }
        }
        current = remove_hook(&current, &h)?;
    }
    let core = current;
    debug_assert_eq!(core, crate::rim_hook::core(p, ell));

    let stacked = |c: &Partition| {
        (1..)
            .take_while(|&i| c.part(i) == c.part(i + 1) + (l - 1))
            .count()
    };
    let r = stacked(&core);
    let s = stacked(&core.conjugate());
    let mu = Partition::from_rows(
        core.parts()[r..]
            .iter()
            .map(|x| x.saturating_sub(s))
            .collect(),
    );

    let as_partition = |counts: Vec<usize>, what: &str| {
        Partition::new(counts).map_err(|e| {
            Error::InvalidQuintuple(format!("{what} counts of {p} are not a partition: {e}"))
        })
    };
    let q = JmQuintuple {
        mu,
        r,
        s,
        rho: as_partition(rho, "rho")?,
        sigma: as_partition(sigma, "sigma")?,
    };
    q.validate(ell)?;
    let rebuilt = compose_quintuple(&q, ell)?;
    if rebuilt != *p {
        return Err(Error::InvalidQuintuple(format!(
            "{q} rebuilds {rebuilt}, not {p}"
        )));
    }
    Ok(q)
}

/// Ranges for [`quintuple_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_mu_rank: usize,
    pub max_rs: usize,
    pub max_hook_count: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_mu_rank: 6,
            max_rs: 3,
            max_hook_count: 3,
        }
    }
}

/// Partitions with at most `rows` parts, each at most `cols`.
fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn fill(rows: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_parts_unchecked(prefix.clone()));
        if prefix.len() == rows {
            return;
        }
        for v in (1..=cap).rev() {
            prefix.push(v);
            fill(rows, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Every valid quintuple inside `bounds`.
pub fn quintuple_sweep(ell: Ell, bounds: SweepBounds) -> Vec<JmQuintuple> {
    let l = ell.get();
    let mus: Vec<Partition> = partitions_up_to(bounds.max_mu_rank)
        .filter(|m| {
            let c = m.conjugate();
            core(m, ell) == *m && m.part(1) - m.part(2) < l - 1 && c.part(1) - c.part(2) < l - 1
        })
        .collect();
    let mut out = Vec::new();
    for mu in &mus {
        for r in 0..=bounds.max_rs {
            for s in 0..=bounds.max_rs {
                let rhos = partitions_in_box(r + 1, bounds.max_hook_count);
                let sigmas = partitions_in_box(s + 1, bounds.max_hook_count);
                for rho in &rhos {
                    for sigma in &sigmas {
                        let q = JmQuintuple::new(mu.clone(), r, s, rho.clone(), sigma.clone());
                        if q.validate(ell).is_ok() {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out
}
