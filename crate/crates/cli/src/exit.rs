use std::fmt;

use tdtc_core::Error;

pub const OK: u8 = 0;
pub const FAILED: u8 = 1;
pub const PARSE: u8 = 2;
pub const DOMAIN: u8 = 3;
pub const BUDGET: u8 = 4;

/// An error paired with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(PARSE, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => PARSE,
            Error::Domain(_) | Error::Coverage(_) => DOMAIN,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(PARSE, e.to_string())
    }
}

pub type CliResult<T = u8> = Result<T, CliError>;
