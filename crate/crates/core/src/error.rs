use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ell must be at least 3, got {0}")]
    InvalidEll(usize),

    #[error("parts must be weakly decreasing positive integers, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("cannot parse partition from {0:?}")]
    Parse(String),

    #[error("residue {residue} is out of range for ell = {ell}")]
    ResidueOutOfRange { residue: usize, ell: usize },

    #[error("box ({row},{col}) is not in the diagram of {partition}")]
    BoxNotInDiagram {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("rim hook headed at ({row},{col}) is not removable from {partition}")]
    HookNotRemovable {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("invalid quintuple: {0}")]
    InvalidQuintuple(String),

    #[error("{0} is not an (l,0)-JM partition")]
    NotJm(String),

    #[error("{0} is not l-regular")]
    NotRegular(String),

    /// The regularization-class scan and the ladder-crystal lookup gave
    /// different answers for the same partition.
    #[error("weak detection routes disagree on {partition}: class scan says {class_scan}, ladder node says {ladder_node}")]
    RouteDisagreement {
        partition: String,
        class_scan: bool,
        ladder_node: bool,
    },

    #[error("crystal inconsistency: {0}")]
    Crystal(String),

    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
