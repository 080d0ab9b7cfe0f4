use alloc::string::String;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    FieldMismatch,
    #[error("the 1-form is zero")]
    ZeroForm,
    #[error("the map is constant")]
    ConstantMap,
    #[error("map degree {0} is smaller than 2")]
    DegreeTooSmall(usize),
    #[error("the form is not of general type")]
    NotGeneralType,
    #[error("the initial value is a pole of the right-hand side")]
    PoleAtInitialValue,
    #[error("defining polynomial is not irreducible over Q")]
    Reducible,
    #[error("degenerate Moebius transformation")]
    DegenerateMobius,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn precondition(msg: &str) -> Error {
    Error::Precondition(String::from(msg))
}
