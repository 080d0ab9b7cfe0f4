use autoform_core::Error;
use serde_json::{json, Value};

/// Everything the command line can fail with. Each variant has a stable
/// machine-readable code and an exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("undeclared symbol '{name}' at {position}")]
    UndeclaredSymbol { name: String, position: usize },
    #[error("exponent at {position} is not an integer literal")]
    NonIntegerExponent { position: usize },
    #[error("{0}")]
    Core(Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn syntax(position: usize, message: String) -> Self {
        CliError::Syntax { position, message }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "syntax_error",
            CliError::UndeclaredSymbol { .. } => "undeclared_symbol",
            CliError::NonIntegerExponent { .. } => "non_integer_exponent",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                Error::DivisionByZero => "division_by_zero",
                Error::FieldMismatch => "field_mismatch",
                Error::ZeroForm => "zero_form",
                Error::ConstantMap => "constant_map",
                Error::DegreeTooSmall(_) => "degree_too_small",
                Error::NotGeneralType => "not_general_type",
                Error::PoleAtInitialValue => "pole_at_initial_value",
                Error::Reducible => "reducible",
                Error::DegenerateMobius => "degenerate_mobius",
                Error::Precondition(_) => "precondition",
            },
        }
    }

    /// 2 for parse errors, 3 for domain errors, 4 for violated preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } | CliError::UndeclaredSymbol { .. } | CliError::NonIntegerExponent { .. } => 2,
            CliError::Core(
                Error::DivisionByZero | Error::FieldMismatch | Error::ZeroForm | Error::ConstantMap | Error::DegenerateMobius,
            ) => 3,
            CliError::Core(_) | CliError::Usage(_) => 4,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "code": self.code(), "message": self.to_string() });
        match self {
            CliError::Syntax { position, .. }
            | CliError::UndeclaredSymbol { position, .. }
            | CliError::NonIntegerExponent { position } => {
                v["position"] = json!(position);
            }
            _ => {}
        }
        v
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
