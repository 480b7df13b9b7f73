//! Partition combinatorics around (ell,0)-JM partitions: hook lengths and
//! rim hooks, cores, regularization, the `(mu, r, s, rho, sigma)`
//! decomposition, and the Misra-Miwa and ladder crystals, together with
//! exhaustive checkers for the statements relating them.

pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod jm;
pub mod ladder;
pub mod partition;
pub mod quintuple;
pub mod rim_hook;

pub use enumerate::{partitions, partitions_up_to};
pub use error::{Error, Result};
pub use jm::{is_jm, is_weak_l_partition, jm_witness, normalize_witness, JmWitness};
pub use ladder::{ladder_index, regularization_class, regularize, LadderIndex};
pub use partition::{m_ell, residue, BoxCoord, BoxKind, Ell, HookTable, Partition};
pub use quintuple::{compose_quintuple, decompose, JmQuintuple};
pub use rim_hook::{
    adjacent, core, is_generalized_l_partition, is_l_partition, removable_rim_hooks, remove_hook,
    Orientation, RimHook,
};
