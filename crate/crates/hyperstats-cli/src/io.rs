//! File formats, result documents and error-to-exit-code mapping.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hyperstats::combin::CombinError;
use hyperstats::exact::ExactError;
use hyperstats::model::ValidationError;
use hyperstats::oracle::OracleError;
use hyperstats::ExactValue;

/// A CLI failure: `(machine-readable name, human message, exit code)`.
#[derive(Debug)]
pub struct CliError {
    pub name: String,
    pub message: String,
    code: i32,
}

impl CliError {
    pub fn validation(name: impl Into<String>, message: impl Into<String>) -> Self {
        CliError {
            name: name.into(),
            message: message.into(),
            code: 2,
        }
    }

    pub fn cap(name: impl Into<String>, message: impl Into<String>) -> Self {
        CliError {
            name: name.into(),
            message: message.into(),
            code: 3,
        }
    }

    pub fn internal(name: impl Into<String>, message: impl Into<String>) -> Self {
        CliError {
            name: name.into(),
            message: message.into(),
            code: 4,
        }
    }

    pub fn code(&self) -> i32 {
        self.code
    }

    /// Prints the machine-readable error JSON to stderr.
    pub fn report(&self) {
        eprintln!(
            "{}",
            serde_json::json!({ "error": self.name, "message": self.message })
        );
    }
}

fn validation_error_name(err: &ValidationError) -> &'static str {
    match err {
        ValidationError::StubMismatch { .. } => "StubMismatch",
        ValidationError::StubMismatchOut { .. } => "StubMismatchOut",
        ValidationError::StubMismatchIn { .. } => "StubMismatchIn",
        ValidationError::EmptyEdge(_) => "EmptyEdge",
        ValidationError::EmptyTail(_) => "EmptyTail",
        ValidationError::EmptyHead(_) => "EmptyHead",
        ValidationError::LengthMismatch { .. } => "LengthMismatch",
        ValidationError::NoVertices => "NoVertices",
    }
}

impl From<ValidationError> for CliError {
    fn from(err: ValidationError) -> Self {
        CliError::validation(validation_error_name(&err), err.to_string())
    }
}

impl From<CombinError> for CliError {
    fn from(err: CombinError) -> Self {
        match &err {
            CombinError::CapExceeded(..) | CombinError::PartitionCapExceeded(..) => {
                CliError::cap("CapExceeded", err.to_string())
            }
            CombinError::KTooLarge { .. } => CliError::validation("KTooLarge", err.to_string()),
            CombinError::LengthMismatch => {
                CliError::validation("LengthMismatch", err.to_string())
            }
        }
    }
}

impl From<ExactError> for CliError {
    fn from(err: ExactError) -> Self {
        match err {
            ExactError::Combin(c) => c.into(),
            ExactError::NotAGraph | ExactError::NotADigraph => {
                CliError::validation("NotReduced", err.to_string())
            }
        }
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::TooLarge { .. } => CliError::cap("CapExceeded", err.to_string()),
            OracleError::Combin(c) => c.into(),
        }
    }
}

/// On-disk degree sequence document.
#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SequenceFile {
    Undirected {
        vertex_degrees: Vec<u64>,
        edge_degrees: Vec<u64>,
    },
    Directed {
        out_degrees: Vec<u64>,
        in_degrees: Vec<u64>,
        tail_degrees: Vec<u64>,
        head_degrees: Vec<u64>,
    },
}

/// A parsed and validated input sequence.
pub enum Input {
    Undirected(hyperstats::UndirectedDegreeSequence),
    Directed(hyperstats::DirectedDegreeSequence),
}

pub fn load_sequence(path: &Path) -> Result<Input, CliError> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::validation("IoError", format!("{}: {e}", path.display()))
    })?;
    let file: SequenceFile = serde_json::from_str(&text).map_err(|e| {
        CliError::validation(
            "ParseError",
            format!("{}: line {}: {e}", path.display(), e.line()),
        )
    })?;
    match file {
        SequenceFile::Undirected {
            vertex_degrees,
            edge_degrees,
        } => Ok(Input::Undirected(
            hyperstats::UndirectedDegreeSequence::new(vertex_degrees, edge_degrees)?,
        )),
        SequenceFile::Directed {
            out_degrees,
            in_degrees,
            tail_degrees,
            head_degrees,
        } => Ok(Input::Directed(hyperstats::DirectedDegreeSequence::new(
            out_degrees,
            in_degrees,
            tail_degrees,
            head_degrees,
        )?)),
    }
}

/// Exact rational serialized losslessly as decimal strings.
#[derive(Debug, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl RationalJson {
    pub fn from_exact(v: &ExactValue) -> Self {
        RationalJson {
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct McJson {
    pub mean: f64,
    pub std_error: f64,
    pub ci95: [f64; 2],
    pub samples: u64,
    pub seed: u64,
}

/// Per-statistic result entry; only the computed fields are emitted.
#[derive(Debug, Default, Serialize, Deserialize)]
pub struct StatResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<RationalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymptotic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc: Option<McJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Metadata {
    pub command: String,
    pub inputs: serde_json::Value,
    pub version: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ResultDocument {
    pub metadata: Metadata,
    pub statistics: BTreeMap<String, StatResult>,
}

impl ResultDocument {
    pub fn new(command: &str, inputs: serde_json::Value) -> Self {
        ResultDocument {
            metadata: Metadata {
                command: command.to_string(),
                inputs,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            statistics: BTreeMap::new(),
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("serialize"));
    }
}
