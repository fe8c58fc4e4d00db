use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("letter {letter} is not valid for rank n={n}")]
    InvalidLetter { letter: i8, n: usize },

    #[error("rank mismatch: n={left} vs n={right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rows have different lengths: top {top}, bottom {bottom}")]
    RaggedRows { top: usize, bottom: usize },

    #[error("rank n={0} is not supported (type D_n needs n >= 4)")]
    UnsupportedRank(usize),

    #[error("tableau is not classical-legal: {0}")]
    NotClassical(String),

    #[error("tableau is not in T(s): {0}")]
    NotInTSet(String),

    #[error("no two-row sliding relation applies: {0}")]
    NoRule(String),

    #[error("column word is admissible, nothing to reduce")]
    AlreadyAdmissible,

    #[error("vertex budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("tensor product is disconnected: {unreached} of {total} elements unreachable")]
    Disconnected { unreached: usize, total: usize },

    #[error("energy propagation assigns {first} and {second} to classical component {component}")]
    Inconsistent {
        component: usize,
        first: i64,
        second: i64,
    },

    #[error("bad weight: {0}")]
    BadWeight(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl CrystalError {
    /// Stable machine-readable code used in CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            CrystalError::InvalidLetter { .. } => "INVALID_LETTER",
            CrystalError::RankMismatch { .. } => "RANK_MISMATCH",
            CrystalError::RaggedRows { .. } => "RAGGED_ROWS",
            CrystalError::UnsupportedRank(_) => "UNSUPPORTED_RANK",
            CrystalError::NotClassical(_) => "NOT_CLASSICAL",
            CrystalError::NotInTSet(_) => "NOT_IN_T",
            CrystalError::NoRule(_) => "NO_RULE",
            CrystalError::AlreadyAdmissible => "ADMISSIBLE",
            CrystalError::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            CrystalError::Disconnected { .. } => "DISCONNECTED",
            CrystalError::Inconsistent { .. } => "INCONSISTENT",
            CrystalError::BadWeight(_) => "BAD_WEIGHT",
            CrystalError::InvalidConfig(_) => "INVALID_CONFIG",
        }
    }
}

pub type Result<T> = std::result::Result<T, CrystalError>;
