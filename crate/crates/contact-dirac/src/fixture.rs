//! JSON fixture files: structure constants, orientation and an optional
//! contact block.
//!
//! ```json
//! { "dim": 3,
//!   "c": [ {"i": 1, "j": 2, "k": 0, "val": "-1"} ],
//!   "orientation": 1,
//!   "contact": { "eta_index": 0, "J": [["0","0","0"], ["0","0","-1"], ["0","1","0"]] } }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contact::{validate_contact, ContactData, ContactError, ContactViolation};
use crate::frame::{EndoField, FrameError, FrameSpec};
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("malformed fixture: {0}")]
    Parse(String),
    #[error("invalid frame: {0}")]
    Frame(FrameError),
    #[error("fixture has no contact block")]
    NoContact,
    #[error("unsupported fixture: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Contact(#[from] ContactError),
}

impl FixtureError {
    /// Errors that describe a well-formed file violating an axiom.
    pub fn is_axiom_violation(&self) -> bool {
        matches!(
            self,
            FixtureError::Frame(FrameError::Jacobi { .. } | FrameError::NotAntisymmetric { .. })
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub val: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ContactBlock {
    pub eta_index: usize,
    #[serde(rename = "J")]
    pub j: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub dim: usize,
    pub c: Vec<Entry>,
    pub orientation: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact: Option<ContactBlock>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub spec: FrameSpec,
    pub j: Option<EndoField>,
}

impl Fixture {
    /// Contact data without checking the axioms.
    pub fn contact_unchecked(&self) -> Result<ContactData, FixtureError> {
        let j = self.j.clone().ok_or(FixtureError::NoContact)?;
        Ok(ContactData::unchecked(self.spec.clone(), j)?)
    }

    pub fn contact(&self) -> Result<ContactData, FixtureError> {
        let j = self.j.clone().ok_or(FixtureError::NoContact)?;
        Ok(ContactData::new(self.spec.clone(), j)?)
    }

    /// Violated contact axioms; empty for a valid fixture.
    pub fn violations(&self) -> Result<Vec<ContactViolation>, FixtureError> {
        Ok(validate_contact(&self.contact_unchecked()?))
    }
}

pub fn parse_fixture(text: &str, name: &str) -> Result<Fixture, FixtureError> {
    let file: FixtureFile =
        serde_json::from_str(text).map_err(|e| FixtureError::Parse(e.to_string()))?;
    from_file(&file, name)
}

pub fn from_file(file: &FixtureFile, name: &str) -> Result<Fixture, FixtureError> {
    let entries: Vec<_> = file
        .c
        .iter()
        .map(|e| (e.i, e.j, e.k, e.val.clone()))
        .collect();
    let spec = FrameSpec::new(file.dim, &entries, file.orientation).map_err(FixtureError::Frame)?;
    let j = match &file.contact {
        None => None,
        Some(block) => {
            if block.eta_index != 0 {
                return Err(FixtureError::Unsupported(format!(
                    "eta_index must be 0, got {}",
                    block.eta_index
                )));
            }
            if block.j.len() != file.dim || block.j.iter().any(|r| r.len() != file.dim) {
                return Err(FixtureError::Parse(format!("J must be {0}x{0}", file.dim)));
            }
            Some(Mat::from_rows(block.j.clone()))
        }
    };
    Ok(Fixture {
        name: name.to_string(),
        spec,
        j,
    })
}

pub fn load_fixture(path: &Path) -> Result<Fixture, FixtureError> {
    let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| "fixture".into(), |s| s.to_string_lossy().into_owned());
    parse_fixture(&text, &name)
}

/// The file form of a frame and optional `J`.
pub fn to_file(spec: &FrameSpec, j: Option<&EndoField>) -> FixtureFile {
    FixtureFile {
        dim: spec.dim(),
        c: spec
            .entries()
            .into_iter()
            .map(|(i, j, k, val)| Entry { i, j, k, val })
            .collect(),
        orientation: spec.orientation() as i64,
        contact: j.map(|j| ContactBlock {
            eta_index: 0,
            j: (0..j.rows()).map(|r| j.row(r)).collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::standard_j;

    #[test]
    fn file_round_trip() {
        let cd = ContactData::heisenberg(1);
        let file = to_file(cd.spec(), Some(cd.j()));
        let text = serde_json::to_string(&file).unwrap();
        let fx = parse_fixture(&text, "h").unwrap();
        assert_eq!(fx.contact().unwrap(), cd);
        assert_eq!(fx.j.as_ref(), Some(&standard_j(1)));
    }

    #[test]
    fn jacobi_failure_is_an_axiom_violation() {
        let text = r#"{"dim":3,"c":[{"i":0,"j":1,"k":1,"val":"1"},{"i":1,"j":2,"k":0,"val":"1"}],"orientation":1}"#;
        let err = parse_fixture(text, "bad").unwrap_err();
        assert!(err.is_axiom_violation(), "{err}");
        assert!(!parse_fixture("{", "x").unwrap_err().is_axiom_violation());
    }
}
