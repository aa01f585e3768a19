//! The input document: a permutation group, one O(2) image per generator and
//! rendering options.

use std::str::FromStr;
use std::sync::Arc;

use circlebundles::{Angle, FiniteGroup, OrthogonalElement, Permutation};
use serde::Deserialize;

use crate::CliError;

pub const DEFAULT_M_BOUND: usize = 6;
pub const MAX_M_BOUND: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InputSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub rho: Vec<OrthogonalElement>,
    pub m_bound: usize,
    pub format: Format,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    group: RawGroup,
    rho: Vec<RawElement>,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    rotation: Option<String>,
    reflection: Option<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    m_bound: Option<usize>,
    format: Option<Format>,
}

fn field_error(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{field}: {msg}"))
}

fn parse_angle(field: &str, text: &str) -> Result<Angle, CliError> {
    Angle::from_str(text.trim())
        .map_err(|_| field_error(field, format!("malformed rational {text:?}")))
}

fn parse_element(i: usize, raw: &RawElement) -> Result<OrthogonalElement, CliError> {
    match (&raw.rotation, &raw.reflection) {
        (Some(_), Some(_)) => Err(field_error(&format!("rho[{i}]"), "ambiguous O(2) element")),
        (None, None) => Err(field_error(
            &format!("rho[{i}]"),
            "expected exactly one of \"rotation\" or \"reflection\"",
        )),
        (Some(r), None) => Ok(OrthogonalElement::Rotation(parse_angle(
            &format!("rho[{i}].rotation"),
            r,
        )?)),
        (None, Some(s)) => Ok(OrthogonalElement::Reflection(parse_angle(
            &format!("rho[{i}].reflection"),
            s,
        )?)),
    }
}

pub fn parse_input(text: &str) -> Result<InputSpec, CliError> {
    let raw: RawInput = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let degree = raw.group.degree;
    if degree == 0 {
        return Err(field_error("group.degree", "must be at least 1"));
    }
    for (i, g) in raw.group.generators.iter().enumerate() {
        let field = format!("group.generators[{i}]");
        if g.len() != degree {
            return Err(field_error(
                &field,
                format!("expected {degree} images, got {}", g.len()),
            ));
        }
        if let Err(pos) = Permutation::from_one_based(g) {
            return Err(field_error(
                &field,
                format!(
                    "not a bijection of 1..{degree} (bad image at position {})",
                    pos + 1
                ),
            ));
        }
    }
    if raw.rho.len() != raw.group.generators.len() {
        return Err(field_error(
            "rho",
            format!(
                "{} entries for {} generators",
                raw.rho.len(),
                raw.group.generators.len()
            ),
        ));
    }
    let rho = raw
        .rho
        .iter()
        .enumerate()
        .map(|(i, r)| parse_element(i, r))
        .collect::<Result<Vec<_>, _>>()?;
    let m_bound = raw.options.m_bound.unwrap_or(DEFAULT_M_BOUND);
    if !(1..=MAX_M_BOUND).contains(&m_bound) {
        return Err(field_error(
            "options.m_bound",
            format!("must lie in 1..={MAX_M_BOUND}"),
        ));
    }
    Ok(InputSpec {
        degree,
        generators: raw.group.generators,
        rho,
        m_bound,
        format: raw.options.format.unwrap_or_default(),
    })
}

impl InputSpec {
    pub fn group(&self) -> Result<Arc<FiniteGroup>, CliError> {
        Ok(FiniteGroup::from_generators(self.degree, &self.generators)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = r#"{
  "group": {"degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]},
  "rho": [{"rotation": "1/3"}, {"reflection": "0"}],
  "options": {"m_bound": 6, "format": "text"}
}"#;

    #[test]
    fn s3_document() {
        let spec = parse_input(S3).unwrap();
        assert_eq!(spec.degree, 3);
        assert_eq!(spec.rho[0], OrthogonalElement::rotation(1, 3).unwrap());
        assert_eq!(spec.rho[1], OrthogonalElement::reflection(0, 1).unwrap());
        assert_eq!(spec.m_bound, 6);
        assert_eq!(spec.group().unwrap().order(), 6);
    }

    #[test]
    fn reduces_rationals() {
        let spec = parse_input(
            r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{"rotation":"2/4"}]}"#,
        )
        .unwrap();
        assert_eq!(spec.rho[0].angle().to_string(), "1/2");
        assert_eq!(spec.m_bound, DEFAULT_M_BOUND);
        assert_eq!(spec.format, Format::Text);
    }

    #[test]
    fn rejections() {
        let cases = [
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{"rotation":"1/2","reflection":"0"}]}"#,
                "rho[0]: ambiguous O(2) element",
            ),
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{"rotation":"1/x"}]}"#,
                "rho[0].rotation: malformed rational",
            ),
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{"rotation":"1/0"}]}"#,
                "malformed rational",
            ),
            (
                r#"{"group":{"degree":3,"generators":[[2,2,1]]},"rho":[{"rotation":"0"}]}"#,
                "group.generators[0]: not a bijection",
            ),
            (
                r#"{"group":{"degree":3,"generators":[[2,1]]},"rho":[{"rotation":"0"}]}"#,
                "expected 3 images",
            ),
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[]}"#,
                "rho: 0 entries for 1 generators",
            ),
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{}]}"#,
                "expected exactly one",
            ),
            (
                r#"{"group":{"degree":2,"generators":[[2,1]]},"rho":[{"rotation":"0"}],"options":{"format":"yaml"}}"#,
                "line 1",
            ),
            ("{\n  \"group\": 3\n}", "line 2"),
        ];
        for (text, want) in cases {
            let err = parse_input(text).unwrap_err();
            assert!(matches!(err, CliError::Input(_)));
            assert!(err.to_string().contains(want), "{err} lacks {want}");
        }
    }
}
