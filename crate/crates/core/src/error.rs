use thiserror::Error;

use crate::group::GroupSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(GroupSpec, GroupSpec),

    #[error("element is not a unit (its matrix is singular over GF(2))")]
    NotAUnit,

    #[error("matrix is not the image of a group ring element: {0}")]
    NotRgMatrix(String),

    #[error("degenerate selection: {selected} of {order} rows selected")]
    DegenerateSelection { selected: usize, order: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("rank deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("alist: {0}")]
    Alist(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
