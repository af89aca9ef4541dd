use thiserror::Error;

/// Why a table failed to define a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotAGroupReason {
    Empty,
    NotSquare { row: usize, len: usize },
    EntryOutOfRange { row: usize, col: usize },
    RowNotPermutation { row: usize, col: usize },
    ColumnNotPermutation { row: usize, col: usize },
    NoIdentity,
    MissingInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl std::fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotAGroupReason::Empty => write!(f, "empty table"),
            NotAGroupReason::NotSquare { row, len } => write!(f, "row {row} has length {len}"),
            NotAGroupReason::EntryOutOfRange { row, col } => {
                write!(f, "entry ({row}, {col}) out of range")
            }
            NotAGroupReason::RowNotPermutation { row, col } => {
                write!(f, "row {row} repeats a value at column {col}")
            }
            NotAGroupReason::ColumnNotPermutation { row, col } => {
                write!(f, "column {col} repeats a value at row {row}")
            }
            NotAGroupReason::NoIdentity => write!(f, "no identity element"),
            NotAGroupReason::MissingInverse { element } => {
                write!(f, "element {element} has no inverse")
            }
            NotAGroupReason::NotAssociative { a, b, c } => {
                write!(f, "associativity fails for ({a}, {b}, {c})")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(NotAGroupReason),
    #[error("generator {index} is not a permutation of degree {degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order {order} exceeds cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup has index {index}, expected 2")]
    IndexNotTwo { index: usize },
    #[error("embedding failure: {0}")]
    EmbeddingFailure(String),
}
