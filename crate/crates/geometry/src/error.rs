use symres_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("GROUP_TOO_LARGE: closure exceeded {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("NOT_MEMBER: element is not in the group")]
    NotMember,
    #[error("NOT_EIGENVECTOR: form {form} is not an eigenvector of generator {generator}")]
    NotEigenvector { form: usize, generator: usize },
    #[error("VALUATION_INFINITE: the zero polynomial has infinite valuation")]
    ValuationInfinite,
    #[error("NOT_FAITHFUL: gcd of weights and order {order} is not 1")]
    NotFaithful { order: i64 },
    #[error("MALFORMED: {0}")]
    Malformed(String),
    #[error("INCOMPLETE_TREE: {0}")]
    IncompleteTree(String),
    #[error("NO_WITNESS: {0}")]
    NoWitness(String),
    #[error("NOT_Q8_REP: {0}")]
    NotQ8Rep(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
