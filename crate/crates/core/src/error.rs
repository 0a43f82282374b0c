use thiserror::Error;

/// Errors raised by the algebra, sequence and CLI layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),

    #[error("prime {value} exceeds the configured limit {limit}")]
    PrimeTooLarge { value: u64, limit: u64 },

    #[error("operands live over different fields or variable counts")]
    DomainMismatch,

    #[error("shape error: {0}")]
    Shape(String),

    #[error("division by a non-unit")]
    DivisionByZero,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { position: usize, name: String },

    #[error("exponent at position {position} exceeds 2^31")]
    ExponentOverflow { position: usize },

    #[error("variable count {0} is outside 1..=4")]
    VariableCount(usize),

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("form is not homogeneous")]
    NotHomogeneous,

    #[error("the zero form cannot be used here")]
    ZeroForm,

    #[error("omega contracts F to zero, so the colon ideal is the unit ideal")]
    ZeroColon,

    #[error("monomial ideal is not Artinian: no pure power of variable {0}")]
    NotArtinian(usize),

    #[error("operation requires a {expected} presentation")]
    ModeMismatch { expected: &'static str },

    #[error("characteristic {characteristic} does not exceed socle degree {socle_degree}; divided-power evaluation is undefined")]
    UnsupportedCharacteristic {
        characteristic: u64,
        socle_degree: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPrime(_)
            | Error::PrimeTooLarge { .. }
            | Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::ExponentOverflow { .. }
            | Error::VariableCount(_) => 2,
            Error::Internal(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
