//! Exact detection of algebraic Ricci solitons on metric Lie algebras and
//! reductive homogeneous pseudo-Riemannian spaces.
//!
//! All arithmetic is over arbitrary-precision rationals; no floating point is
//! used in any decision.

#![allow(clippy::result_large_err)]

pub mod catalog;
pub mod checks;
pub mod exact;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod soliton;

pub use catalog::{
    build_type_a, build_type_b, build_type_c, build_type_d, CatalogError, SpaceType,
};
pub use exact::{Rational, RationalError};
pub use geometry::{
    curvature, levi_civita, ricci, Connection, CurvatureTensor, GeometryError, GeometryReport,
    ReductiveMetricSpace, Ricci,
};
pub use lie::{BracketEntry, DerivationSpace, JacobiFailure, LieAlgebra, LieError};
pub use linalg::{kernel_basis, rref, solve_affine, LinalgError, Matrix};
pub use report::{analyze, AnalysisReport, SpaceFile};
pub use soliton::{
    solve_algebraic_soliton, verify_soliton, SignClass, SolitonResult, SolitonStatus,
};

use thiserror::Error;

/// Any failure surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Soliton(#[from] soliton::SolitonError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Input(#[from] report::InputError),
}
