use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("substituted series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series constant term {0} is not a nonzero rational, cannot invert")]
    NotInvertible(String),

    #[error("operator of degree {degree} exceeds series order {order}")]
    OrderTooSmall { degree: usize, order: usize },

    #[error("custom seed has {got} entries but {required} are required")]
    SeedTooShort { required: usize, got: usize },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
