//! JSON space documents and JSON renderings of query results.
//!
//! A document lists the points and then either every open set or the
//! minimal open set of each point:
//!
//! ```json
//! {"points":["a","b"],"opens":[[],["a"],["a","b"]]}
//! {"points":["a","b"],"min_basis":{"a":["a"],"b":["a","b"]}}
//! ```

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error;
use crate::matrix::FurtherMatrix;
use crate::point_set::PointSet;
use crate::regions::{LargestBall, QuasiReport, RegionReport, UnionAnalysis};
use crate::space::FinSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_basis: Option<IndexMap<String, Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{}{source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Space {
        source: Error,
        line: Option<usize>,
    },
}

impl DocumentError {
    /// The construction error behind this failure, if any.
    pub fn space_error(&self) -> Option<&Error> {
        match self {
            DocumentError::Space { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// 1-based line of the `nth` occurrence of `needle`.
fn line_of(text: &str, needle: &str, nth: usize) -> Option<usize> {
    let (pos, _) = text.match_indices(needle).nth(nth)?;
    Some(text[..pos].matches('\n').count() + 1)
}

fn quoted(label: &str) -> String {
    serde_json::to_string(label).unwrap_or_else(|_| format!("\"{label}\""))
}

impl SpaceDocument {
    pub fn from_space(space: &FinSpace) -> Self {
        let min_basis = (0..space.n())
            .map(|x| {
                let members = space.set_labels(space.min_open(x)).into_iter().map(String::from).collect();
                (space.label(x).to_string(), members)
            })
            .collect();
        SpaceDocument {
            points: space.labels().to_vec(),
            opens: None,
            min_basis: Some(min_basis),
        }
    }

    /// Builds the space, attributing errors to the line of `text` they most
    /// likely come from.
    fn build(&self, text: &str) -> Result<FinSpace, DocumentError> {
        let lookup = |label: &str| -> Result<usize, DocumentError> {
            self.points.iter().position(|p| p == label).ok_or_else(|| DocumentError::Space {
                source: Error::UnknownLabel(label.to_string()),
                line: line_of(text, &quoted(label), 0),
            })
        };
        let to_set = |labels: &[String]| -> Result<PointSet, DocumentError> {
            labels.iter().map(|l| lookup(l)).collect()
        };
        let attach = |e: Error| {
            let line = match &e {
                Error::DuplicateLabel(l) => line_of(text, &quoted(l), 1),
                Error::PointNotInOwnBasis(l) => line_of(text, &format!("{}:", quoted(l)), 0),
                Error::BasisNotNested { x, .. } => line_of(text, &format!("{}:", quoted(x)), 0),
                _ if self.opens.is_some() => line_of(text, "\"opens\"", 0),
                _ => line_of(text, "\"min_basis\"", 0),
            };
            DocumentError::Space { source: e, line }
        };
        match (&self.opens, &self.min_basis) {
            (Some(_), Some(_)) => Err(DocumentError::Schema(
                "give either `opens` or `min_basis`, not both".into(),
            )),
            (None, None) => Err(DocumentError::Schema(
                "missing `opens` or `min_basis`".into(),
            )),
            (Some(opens), None) => {
                let sets = opens.iter().map(|o| to_set(o)).collect::<Result<Vec<_>, _>>()?;
                FinSpace::from_open_sets(self.points.iter().cloned(), &sets).map_err(attach)
            }
            (None, Some(basis)) => {
                for key in basis.keys() {
                    lookup(key)?;
                }
                let mut sets = Vec::with_capacity(self.points.len());
                for p in &self.points {
                    let members = basis.get(p).ok_or_else(|| {
                        DocumentError::Schema(format!("`min_basis` has no entry for `{p}`"))
                    })?;
                    sets.push(to_set(members)?);
                }
                FinSpace::from_minimal_basis(self.points.iter().cloned(), sets).map_err(attach)
            }
        }
    }
}

pub fn parse_document(text: &str) -> Result<SpaceDocument, DocumentError> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            DocumentError::Schema(e.to_string())
        } else {
            DocumentError::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        }
    })
}

pub fn parse_space(text: &str) -> Result<FinSpace, DocumentError> {
    parse_document(text)?.build(text)
}

/// Canonical compact form: `min_basis`, labels in point order, members
/// sorted by point order.
pub fn serialize_space(space: &FinSpace) -> String {
    serde_json::to_string(&SpaceDocument::from_space(space)).expect("documents always serialize")
}

fn labels_value(space: &FinSpace, set: PointSet) -> Value {
    json!(space.set_labels(set))
}

pub fn matrix_json(space: &FinSpace, m: &FurtherMatrix) -> Value {
    let report = m.report();
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            json!({
                "point": space.label(p.index),
                "row_zero_count": p.row_zero_count,
                "column_zero_count": p.column_zero_count,
                "minimal_open": labels_value(space, p.row_zeros),
                "closure": labels_value(space, p.column_zeros),
                "open_singleton": p.open_singleton,
                "maximum": p.maximum,
                "minimum": p.minimum,
            })
        })
        .collect();
    json!({
        "labels": m.labels(),
        "rows": m.rows(),
        "points": points,
        "rows_distinct": report.rows_distinct,
        "columns_distinct": report.columns_distinct,
        "is_t0": report.is_t0,
        "has_zero_row_or_column": report.has_zero_row_or_column,
    })
}

pub fn region_json(space: &FinSpace, r: &RegionReport) -> Value {
    json!({
        "subset": labels_value(space, r.subset),
        "boundary": labels_value(space, r.boundary),
        "interior": labels_value(space, r.interior),
        "center": labels_value(space, r.center),
        "radius": r.radius,
    })
}

pub fn quasi_json(space: &FinSpace, q: &QuasiReport) -> Value {
    json!({
        "subset": labels_value(space, q.subset),
        "quasi_center": labels_value(space, q.quasi_center),
        "quasi_radius": q.quasi_radius,
    })
}

pub fn union_json(space: &FinSpace, u: &UnionAnalysis) -> Value {
    json!({
        "inputs": u.inputs.iter().map(|r| region_json(space, r)).collect::<Vec<_>>(),
        "tilde_sets": u.tilde_sets.iter().map(|&s| labels_value(space, s)).collect::<Vec<_>>(),
        "dominant": u.dominant,
        "max_radius": u.max_radius,
        "predicted_center": u.predicted_center.map(|s| labels_value(space, s)),
        "predicted_radius": u.predicted_radius,
        "case": u.case.tag(),
        "direct": region_json(space, &u.direct),
        "consistent": u.consistent(),
    })
}

pub fn largest_balls_json(space: &FinSpace, balls: &[LargestBall]) -> Value {
    json!(balls
        .iter()
        .map(|b| json!({
            "center": space.label(b.center),
            "radius": b.radius,
            "ball": labels_value(space, b.ball),
            "contained_in_other": b.contained_in_other,
        }))
        .collect::<Vec<_>>())
}
