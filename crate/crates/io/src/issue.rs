use std::fmt;

use litigacost_core::{ModelError, ValidationCode, ValidationError};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IssueCode {
    MalformedJson,
    UnknownSchemaVersion,
    SchemaViolation,
    DuplicateId,
    EmptyId,
    InvalidCurrency,
    InvalidAmount,
    InvalidPolicy,
    Scenario(ValidationCode),
}

impl fmt::Display for IssueCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IssueCode::Scenario(code) => fmt::Display::fmt(code, f),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

impl Serialize for IssueCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A problem with an input document, located as precisely as possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub code: IssueCode,
    pub message: String,
    /// Path inside the scenario (or the document, for document-level issues).
    pub field_path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario_index: Option<usize>,
}

impl Issue {
    pub fn new(code: IssueCode, field_path: impl Into<String>, message: impl Into<String>) -> Self {
        Issue {
            code,
            message: message.into(),
            field_path: field_path.into(),
            scenario_id: None,
            scenario_index: None,
        }
    }

    pub fn in_scenario(mut self, index: Option<usize>, id: Option<&str>) -> Self {
        self.scenario_index = index;
        self.scenario_id = id.map(str::to_string);
        self
    }

    pub fn from_model(err: &ModelError, field_path: impl Into<String>) -> Self {
        let code = match err {
            ModelError::InvalidPolicy(_) => IssueCode::InvalidPolicy,
            ModelError::InvalidIndicators(_) => {
                IssueCode::Scenario(ValidationCode::InvalidIndicators)
            }
            ModelError::Money(_) => IssueCode::InvalidAmount,
            _ => IssueCode::SchemaViolation,
        };
        Issue::new(code, field_path, err.to_string())
    }
}

impl From<ValidationError> for Issue {
    fn from(err: ValidationError) -> Self {
        Issue::new(IssueCode::Scenario(err.code), err.field, err.message)
    }
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.scenario_id, self.scenario_index) {
            (Some(id), _) => write!(f, "scenario {id:?}: ")?,
            (None, Some(i)) => write!(f, "scenario #{i}: ")?,
            (None, None) => {}
        }
        if !self.field_path.is_empty() {
            write!(f, "{}: ", self.field_path)?;
        }
        write!(f, "{} [{}]", self.message, self.code)
    }
}
