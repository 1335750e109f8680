//! JSON input format for user-defined spaces and the analysis report.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::geometry::{GeometryError, GeometryReport, ReductiveMetricSpace};
use crate::lie::{BracketEntry, LieAlgebra, LieError};
use crate::linalg::{LinalgError, Matrix};
use crate::soliton::{solve_with, SignClass, SolitonError, SolitonStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("coefficient key {0:?} is not a basis index")]
    BadKey(String),
    #[error("declared dim {declared} but metric is for m_dim {m_dim} ({detail})")]
    Shape {
        declared: usize,
        m_dim: usize,
        detail: String,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `{"i": 0, "j": 1, "coeffs": {"2": "1"}}`: `[x_i, x_j] = Σ coeffs[k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, Rational>,
}

/// A user-defined space. Indices are 0-based, only pairs `i < j` are listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub name: String,
    pub dim: usize,
    pub m_dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    pub metric: Vec<Vec<Rational>>,
}

impl SpaceFile {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn algebra(&self) -> Result<LieAlgebra, InputError> {
        let entries = self
            .brackets
            .iter()
            .map(|b| {
                let coeffs = b
                    .coeffs
                    .iter()
                    .map(|(k, v)| {
                        k.trim()
                            .parse::<usize>()
                            .map(|k| (k, v.clone()))
                            .map_err(|_| InputError::BadKey(k.clone()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(BracketEntry::new(b.i, b.j, coeffs))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(LieAlgebra::from_brackets(self.dim, &entries)?)
    }

    /// Builds the space; does not check the Jacobi identity.
    pub fn to_space(&self) -> Result<ReductiveMetricSpace, InputError> {
        let alg = self.algebra()?;
        if self.metric.len() != self.m_dim || self.metric.iter().any(|r| r.len() != self.m_dim) {
            return Err(InputError::Shape {
                declared: self.dim,
                m_dim: self.m_dim,
                detail: "metric must be m_dim x m_dim".into(),
            });
        }
        let metric = if self.m_dim == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_rows(self.metric.clone())?
        };
        Ok(ReductiveMetricSpace::new(alg, self.m_dim, metric)?)
    }

    /// Sparse description of an existing space.
    pub fn from_space(name: &str, space: &ReductiveMetricSpace) -> Self {
        let n = space.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: BTreeMap<String, Rational> = space
                    .algebra()
                    .basis_bracket(i, j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k.to_string(), v))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketSpec { i, j, coeffs });
                }
            }
        }
        SpaceFile {
            name: name.to_string(),
            dim: n,
            m_dim: space.m_dim(),
            brackets,
            metric: space.metric().to_rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub jacobi: bool,
    pub reductive: bool,
    pub metric_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolitonSummary {
    pub status: SolitonStatus,
    pub c: Option<Rational>,
    pub sign_class: Option<SignClass>,
    pub derivation: Option<Vec<Vec<Rational>>>,
    pub solution_space_dim: usize,
    pub c_unique: bool,
}

/// Output of the full pipeline; every number is an exact rational string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub space_name: String,
    pub parameters: BTreeMap<String, Rational>,
    pub validation: Validation,
    pub ricci_operator: Vec<Vec<Rational>>,
    pub scalar_curvature: Rational,
    pub derivation_dim: usize,
    pub soliton: SolitonSummary,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))
    }
}

/// Validation, curvature and soliton analysis. Fails if the Jacobi identity does not hold.
pub fn analyze(
    space_name: &str,
    parameters: BTreeMap<String, Rational>,
    space: &ReductiveMetricSpace,
) -> Result<AnalysisReport, SolitonError> {
    // Reductivity and invariance were checked when the space was built.
    let der = space.algebra().derivation_space()?;
    let geo = GeometryReport::compute(space);
    let res = solve_with(space, &der, &geo.ricci.operator)?;
    let sol = res.solution.as_ref();
    Ok(AnalysisReport {
        space_name: space_name.to_string(),
        parameters,
        validation: Validation {
            jacobi: true,
            reductive: true,
            metric_invariant: true,
        },
        ricci_operator: geo.ricci.operator.to_rows(),
        scalar_curvature: geo.ricci.scalar.clone(),
        derivation_dim: res.derivation_dim,
        soliton: SolitonSummary {
            status: res.status,
            c: sol.map(|s| s.c.clone()),
            sign_class: sol.map(|s| s.sign_class),
            derivation: sol.map(|s| s.derivation.to_rows()),
            solution_space_dim: res.solution_space_dim,
            c_unique: res.c_unique,
        },
    })
}

fn write_matrix(f: &mut fmt::Formatter<'_>, rows: &[Vec<Rational>], indent: &str) -> fmt::Result {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(f, "{indent}[ {} ]", padded.join("  "))?;
    }
    Ok(())
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "space:              {}", self.space_name)?;
        if !self.parameters.is_empty() {
            let ps: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(f, "parameters:         {}", ps.join(", "))?;
        }
        let v = &self.validation;
        writeln!(
            f,
            "validation:         jacobi={} reductive={} metric_invariant={}",
            v.jacobi, v.reductive, v.metric_invariant
        )?;
        writeln!(f, "ricci_operator:")?;
        write_matrix(f, &self.ricci_operator, "  ")?;
        writeln!(f, "scalar_curvature:   {}", self.scalar_curvature)?;
        writeln!(f, "derivation_dim:     {}", self.derivation_dim)?;
        let s = &self.soliton;
        writeln!(f, "soliton.status:     {}", s.status)?;
        if let Some(c) = &s.c {
            writeln!(f, "soliton.c:          {c}")?;
        }
        if let Some(sc) = s.sign_class {
            writeln!(f, "soliton.sign_class: {sc}")?;
        }
        if let Some(d) = &s.derivation {
            writeln!(f, "soliton.derivation:")?;
            write_matrix(f, d, "  ")?;
        }
        writeln!(f, "soliton.solution_space_dim: {}", s.solution_space_dim)?;
        write!(f, "soliton.c_unique:   {}", s.c_unique)
    }
}
