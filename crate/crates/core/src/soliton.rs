//! The algebraic Ricci soliton equation `Ric = c·Id + pr∘D`, `D ∈ Der(g)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::geometry::{GeometryReport, ReductiveMetricSpace};
use crate::lie::{DerivationFailure, DerivationSpace, LieError};
use crate::linalg::{solve_affine, LinalgError, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonStatus {
    Einstein,
    Soliton,
    NotSoliton,
}

impl SolitonStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolitonStatus::Einstein => "einstein",
            SolitonStatus::Soliton => "soliton",
            SolitonStatus::NotSoliton => "not_soliton",
        }
    }
}

impl fmt::Display for SolitonStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign of the soliton constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClass {
    Shrinking,
    Steady,
    Expanding,
}

impl SignClass {
    pub fn of(c: &Rational) -> Self {
        if c.is_positive() {
            SignClass::Shrinking
        } else if c.is_zero() {
            SignClass::Steady
        } else {
            SignClass::Expanding
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignClass::Shrinking => "shrinking",
            SignClass::Steady => "steady",
            SignClass::Expanding => "expanding",
        }
    }
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Constant and derivation, present unless the space is not a soliton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonSolution {
    pub c: Rational,
    pub derivation: Matrix,
    pub sign_class: SignClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonResult {
    pub status: SolitonStatus,
    pub solution: Option<SolitonSolution>,
    /// Dimension of the solution set of the assembled system in `(a_1..a_k, c)`.
    pub solution_space_dim: usize,
    /// `true` iff `c` is the same for every solution.
    pub c_unique: bool,
    pub derivation_dim: usize,
}

impl SolitonResult {
    pub fn c(&self) -> Option<&Rational> {
        self.solution.as_ref().map(|s| &s.c)
    }

    pub fn derivation(&self) -> Option<&Matrix> {
        self.solution.as_ref().map(|s| &s.derivation)
    }

    pub fn sign_class(&self) -> Option<SignClass> {
        self.solution.as_ref().map(|s| s.sign_class)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolitonError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Solves `Ric = c·Id + pr∘D` over `D ∈ Der(g)` and `c`.
///
/// Unknowns are the coefficients of `D` in the derivation basis followed by
/// `c`. The reported solution is the one with every free unknown set to zero.
pub fn solve_algebraic_soliton(
    space: &ReductiveMetricSpace,
) -> Result<SolitonResult, SolitonError> {
    let der = space.algebra().derivation_space()?;
    let report = GeometryReport::compute(space);
    solve_with(space, &der, &report.ricci.operator)
}

pub(crate) fn solve_with(
    space: &ReductiveMetricSpace,
    der: &DerivationSpace,
    ric: &Matrix,
) -> Result<SolitonResult, SolitonError> {
    let (n, m) = (space.dim(), space.m_dim());
    let k = der.dimension();
    let mut system = Matrix::zeros(m * m, k + 1);
    let mut rhs = Vec::with_capacity(m * m);
    let mut row = 0;
    for j in 0..m {
        for i in 0..m {
            for (t, d) in der.basis.iter().enumerate() {
                system[(row, t)] = d[(i, j)].clone();
            }
            if i == j {
                system[(row, k)] = Rational::one();
            }
            rhs.push(ric[(i, j)].clone());
            row += 1;
        }
    }
    let sol = solve_affine(&system, &rhs)?;
    let solution_space_dim = sol.kernel_basis.len();
    let c_unique = sol.kernel_basis.iter().all(|v| v[k].is_zero());

    if !sol.consistent {
        return Ok(SolitonResult {
            status: SolitonStatus::NotSoliton,
            solution: None,
            solution_space_dim: 0,
            c_unique: false,
            derivation_dim: k,
        });
    }

    let mean = ric
        .trace()
        .checked_div(&Rational::from_integer(m as i64))
        .expect("m_dim >= 1");
    let einstein = ric.sub(&Matrix::identity(m).scale(&mean))?.is_zero();
    let (status, c, derivation) = if einstein {
        (SolitonStatus::Einstein, mean, Matrix::zeros(n, n))
    } else {
        let c = sol.particular[k].clone();
        (
            SolitonStatus::Soliton,
            c,
            der.combine(&sol.particular[..k], n),
        )
    };
    Ok(SolitonResult {
        status,
        solution: Some(SolitonSolution {
            sign_class: SignClass::of(&c),
            c,
            derivation,
        }),
        solution_space_dim,
        c_unique,
        derivation_dim: k,
    })
}

/// Why a candidate `(c, D)` does not solve the soliton equation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolitonMismatch {
    #[error("D is not a derivation: {0}")]
    NotDerivation(DerivationFailure),
    #[error("Ric - c·Id - pr∘D is nonzero:\n{0}")]
    Residual(Matrix),
}

/// Checks a candidate solution. The derivation property is tested before the residual.
pub fn verify_soliton(
    space: &ReductiveMetricSpace,
    c: &Rational,
    d: &Matrix,
) -> Result<Result<(), SolitonMismatch>, SolitonError> {
    if let Err(failure) = space.algebra().is_derivation(d)? {
        return Ok(Err(SolitonMismatch::NotDerivation(failure)));
    }
    let m = space.m_dim();
    let ric = GeometryReport::compute(space).ricci.operator;
    let residual = ric
        .sub(&Matrix::identity(m).scale(c))?
        .sub(&space.project_to_m(d))?;
    if residual.is_zero() {
        Ok(Ok(()))
    } else {
        Ok(Err(SolitonMismatch::Residual(residual)))
    }
}
