use std::fmt;

use planar_equilibria::Error as CoreError;
use serde_json::{json, Map, Value};

/// Failures surfaced by the command-line driver, each mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    /// Body file is not well-formed JSON.
    Parse { line: usize, column: usize, message: String },
    /// Body file violates the schema.
    Schema(String),
    /// Bad arguments or unreadable input.
    Usage(String),
    /// Output could not be written.
    Io(String),
    Core(CoreError),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID_BODY: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            CliError::Schema(m) | CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Schema(_) => EXIT_INVALID_BODY,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Core(e) => match e {
                CoreError::NotConvex { .. } | CoreError::CoefficientLength { .. } | CoreError::NonFinite => {
                    EXIT_INVALID_BODY
                }
                CoreError::OutOfRange { .. }
                | CoreError::TooFewSamples { .. }
                | CoreError::InvalidIncline { .. }
                | CoreError::InvalidGrid(_) => EXIT_USAGE,
                _ => EXIT_NUMERICAL,
            },
        }
    }

    /// Short machine-readable name of the error family.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Schema(_) => "SchemaError",
            CliError::Usage(_) => "UsageError",
            CliError::Io(_) => "IOError",
            CliError::Core(e) => match e {
                CoreError::NotConvex { .. } => "NotConvex",
                CoreError::OutOfRange { .. } => "OutOfRange",
                CoreError::QuadratureDiverged { .. } => "QuadratureDiverged",
                CoreError::DegenerateCircle => "DegenerateCircle",
                CoreError::DegeneratePointEvolute => "DegeneratePointEvolute",
                CoreError::NotConverged { .. } => "NotConverged",
                CoreError::Mismatch { .. } => "Mismatch",
                CoreError::PositiveWinding { .. } => "PositiveWinding",
                CoreError::VertexAtCenter { .. } => "VertexAtCenter",
                CoreError::TooFewSamples { .. } => "TooFewSamples",
                CoreError::InvalidIncline { .. } => "InvalidIncline",
                CoreError::NonPeriodic { .. } => "NonPeriodic",
                CoreError::NotRegularEvolutePoint { .. } => "NotRegularEvolutePoint",
                CoreError::CoefficientLength { .. } => "SchemaError",
                CoreError::NonFinite => "SchemaError",
                CoreError::InvalidGrid(_) => "InvalidGrid",
            },
        }
    }

    /// Single-line JSON written to standard error.
    pub fn to_json_line(&self) -> String {
        let mut obj = Map::new();
        obj.insert("error".into(), json!(self.kind()));
        obj.insert("message".into(), json!(self.to_string()));
        obj.insert("exitCode".into(), json!(self.exit_code()));
        match self {
            CliError::Parse { line, column, .. } => {
                obj.insert("line".into(), json!(line));
                obj.insert("column".into(), json!(column));
            }
            CliError::Core(CoreError::NotConvex { phi, rho }) => {
                obj.insert("phi".into(), json!(phi));
                obj.insert("rhoMin".into(), json!(rho));
            }
            CliError::Core(CoreError::Mismatch { direct, formula }) => {
                obj.insert("nDirect".into(), json!(direct));
                obj.insert("nFormula".into(), json!(formula));
            }
            _ => {}
        }
        Value::Object(obj).to_string()
    }
}
