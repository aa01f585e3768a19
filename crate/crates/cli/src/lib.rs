//! Command-line front end: input parsing, report documents, renderers and the
//! self-check runner.

pub mod document;
pub mod input;
pub mod render;

use std::path::Path;
use std::sync::Arc;

use circlebundles::classifier::{classify_action, classify_with};
use circlebundles::verify::{self, Scope};
use circlebundles::{CircleAction, Report, TableCache};
use thiserror::Error;

pub use document::{ChartableDocument, EnumerationDocument, ReportDocument};
pub use input::{parse_input, Format, InputSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<circlebundles::Error> for CliError {
    fn from(e: circlebundles::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

/// Text to print and the exit status to return with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }
}

pub fn read_input(path: &Path) -> Result<InputSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn build_action(spec: &InputSpec) -> Result<CircleAction, CliError> {
    Ok(CircleAction::build(&spec.group()?, &spec.rho)?)
}

pub fn run_classify(spec: &InputSpec) -> Result<(Report, ReportDocument), CliError> {
    let report = classify_action(&build_action(spec)?, spec.m_bound)?;
    let doc = ReportDocument::from_report(&report)?;
    Ok((report, doc))
}

pub fn classify_command(spec: &InputSpec) -> Result<Outcome, CliError> {
    let (_, doc) = run_classify(spec)?;
    Ok(Outcome::ok(match spec.format {
        Format::Text => render::report_text(&doc),
        Format::Json => to_json(&doc)?,
    }))
}

pub fn chartable_command(spec: &InputSpec) -> Result<Outcome, CliError> {
    let action = build_action(spec)?;
    let cache = TableCache::for_group(action.group())?;
    let doc = ChartableDocument::build(&cache, action.group(), action.kernel().group())?;
    Ok(Outcome::ok(match spec.format {
        Format::Text => render::chartable_text(&doc),
        Format::Json => to_json(&doc)?,
    }))
}

/// Exit status 2 when the closed form and the enumeration disagree.
pub fn enumerate_command(spec: &InputSpec, bound: usize) -> Result<Outcome, CliError> {
    if !(1..=input::MAX_M_BOUND).contains(&bound) {
        return Err(CliError::Input(format!(
            "--m must lie in 1..={}",
            input::MAX_M_BOUND
        )));
    }
    let action = build_action(spec)?;
    let cache = Arc::new(TableCache::for_group(action.group())?);
    let report = classify_with(&action, 1, cache)?;
    let doc = EnumerationDocument::build(&report, bound);
    let stdout = match spec.format {
        Format::Text => render::enumeration_text(&doc),
        Format::Json => to_json(&doc)?,
    };
    Ok(Outcome {
        stdout,
        code: if doc.agree { 0 } else { 2 },
    })
}

/// Runs every invariant suite; exit status 2 on any failure.
pub fn run_selfcheck(scope: Scope) -> Outcome {
    let summary = verify::run(scope);
    Outcome {
        stdout: render::check_text(&summary),
        code: if summary.passed() { 0 } else { 2 },
    }
}
