use thiserror::Error;

/// A failed command. `internal` errors exit with 3, everything else with 2.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub field: Option<String>,
    pub internal: bool,
}

impl CliError {
    pub fn input(code: &str, message: impl Into<String>) -> Self {
        Self {
            code: code.into(),
            message: message.into(),
            field: None,
            internal: false,
        }
    }

    pub fn field(field: &str, message: impl Into<String>) -> Self {
        Self {
            code: "invalid_input".into(),
            message: message.into(),
            field: Some(field.into()),
            internal: false,
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self {
            code: "internal".into(),
            message: message.into(),
            field: None,
            internal: true,
        }
    }

    pub fn at(mut self, field: &str) -> Self {
        self.field.get_or_insert_with(|| field.into());
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.internal {
            3
        } else {
            2
        }
    }
}

impl From<tri_moduli::Error> for CliError {
    fn from(e: tri_moduli::Error) -> Self {
        Self {
            code: e.code().into(),
            message: e.to_string(),
            field: None,
            internal: e.is_internal(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
