//! Structural invariants of the whole pipeline, checked exactly.
//!
//! Each check returns `Ok(())` or a message naming the first offending index
//! tuple (0-based).

use std::fmt;

use crate::exact::Rational;
use crate::geometry::{GeometryReport, ReductiveMetricSpace};
use crate::lie::unit;
use crate::soliton::{solve_algebraic_soliton, verify_soliton, SolitonStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Jacobi,
    TorsionFree,
    MetricSkew,
    CurvatureSymmetries,
    Bianchi,
    RicciSymmetry,
    SolitonRoundTrip,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::Jacobi,
        Invariant::TorsionFree,
        Invariant::MetricSkew,
        Invariant::CurvatureSymmetries,
        Invariant::Bianchi,
        Invariant::RicciSymmetry,
        Invariant::SolitonRoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Jacobi => "jacobi",
            Invariant::TorsionFree => "torsion_free",
            Invariant::MetricSkew => "metric_skew",
            Invariant::CurvatureSymmetries => "curvature_symmetries",
            Invariant::Bianchi => "bianchi",
            Invariant::RicciSymmetry => "ricci_symmetry",
            Invariant::SolitonRoundTrip => "soliton_round_trip",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub invariant: Invariant,
    pub result: Result<(), String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

/// Runs every invariant in [`Invariant::ALL`] order.
pub fn run_all(space: &ReductiveMetricSpace) -> Vec<CheckOutcome> {
    let geo = GeometryReport::compute(space);
    Invariant::ALL
        .iter()
        .map(|&invariant| CheckOutcome {
            invariant,
            result: run_one(space, &geo, invariant),
        })
        .collect()
}

pub fn run_one(
    space: &ReductiveMetricSpace,
    geo: &GeometryReport,
    inv: Invariant,
) -> Result<(), String> {
    match inv {
        Invariant::Jacobi => space.algebra().check_jacobi().map_err(|e| e.to_string()),
        Invariant::TorsionFree => torsion_free(space, geo),
        Invariant::MetricSkew => metric_skew(space, geo),
        Invariant::CurvatureSymmetries => curvature_symmetries(geo),
        Invariant::Bianchi => bianchi(geo),
        Invariant::RicciSymmetry => ricci_symmetry(space, geo),
        Invariant::SolitonRoundTrip => soliton_round_trip(space),
    }
}

/// `Λ_X Y − Λ_Y X = [X,Y]_m`.
pub fn torsion_free(space: &ReductiveMetricSpace, geo: &GeometryReport) -> Result<(), String> {
    let m = space.m_dim();
    for i in 0..m {
        for j in i + 1..m {
            let b = space.bracket_m(i, j);
            let (a, c) = (geo.connection.get(i, j), geo.connection.get(j, i));
            if (0..m).any(|k| &a[k] - &c[k] != b[k]) {
                return Err(format!("torsion is nonzero on ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// `g(Λ_X Y, Z) + g(Y, Λ_X Z) = 0`.
pub fn metric_skew(space: &ReductiveMetricSpace, geo: &GeometryReport) -> Result<(), String> {
    let m = space.m_dim();
    for i in 0..m {
        for j in 0..m {
            for k in j..m {
                let v = space.inner(geo.connection.get(i, j), &unit(m, k))
                    + space.inner(&unit(m, j), geo.connection.get(i, k));
                if !v.is_zero() {
                    return Err(format!("Λ_{i} is not g-skew on ({j}, {k}): {v}"));
                }
            }
        }
    }
    Ok(())
}

/// Antisymmetry in each pair and pair symmetry of the lowered curvature tensor.
pub fn curvature_symmetries(geo: &GeometryReport) -> Result<(), String> {
    let r = &geo.curvature;
    let m = r.m_dim();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let v = r.get(i, j, k, l);
                    let fail = |what: &str| Err(format!("{what} fails at ({i}, {j}, {k}, {l})"));
                    if *v != -r.get(j, i, k, l) {
                        return fail("R(X,Y,Z,W) = -R(Y,X,Z,W)");
                    }
                    if *v != -r.get(i, j, l, k) {
                        return fail("R(X,Y,Z,W) = -R(X,Y,W,Z)");
                    }
                    if v != r.get(k, l, i, j) {
                        return fail("R(X,Y,Z,W) = R(Z,W,X,Y)");
                    }
                }
            }
        }
    }
    Ok(())
}

/// First Bianchi identity `R(X,Y,Z,W) + R(Y,Z,X,W) + R(Z,X,Y,W) = 0`.
pub fn bianchi(geo: &GeometryReport) -> Result<(), String> {
    let r = &geo.curvature;
    let m = r.m_dim();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let s: Rational = r.get(i, j, k, l) + r.get(j, k, i, l) + r.get(k, i, j, l);
                    if !s.is_zero() {
                        return Err(format!("first Bianchi sum is {s} at ({i}, {j}, {k}, {l})"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `ρ` symmetric and `Ric` self-adjoint for `g`.
pub fn ricci_symmetry(space: &ReductiveMetricSpace, geo: &GeometryReport) -> Result<(), String> {
    let m = space.m_dim();
    let rho = &geo.ricci.tensor;
    let g_ric = space
        .metric()
        .mul(&geo.ricci.operator)
        .map_err(|e| e.to_string())?;
    for i in 0..m {
        for j in i + 1..m {
            if rho[(i, j)] != rho[(j, i)] {
                return Err(format!("ρ is not symmetric at ({i}, {j})"));
            }
            if g_ric[(i, j)] != g_ric[(j, i)] {
                return Err(format!("Ric is not g-self-adjoint at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// A computed soliton or Einstein solution passes `verify_soliton`.
pub fn soliton_round_trip(space: &ReductiveMetricSpace) -> Result<(), String> {
    let res = solve_algebraic_soliton(space).map_err(|e| e.to_string())?;
    if res.status == SolitonStatus::NotSoliton {
        return Ok(());
    }
    let sol = res.solution.as_ref().expect("solution present");
    match verify_soliton(space, &sol.c, &sol.derivation).map_err(|e| e.to_string())? {
        Ok(()) => Ok(()),
        Err(mismatch) => Err(format!(
            "computed {} does not verify: {mismatch}",
            res.status
        )),
    }
}
