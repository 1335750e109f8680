//! The four families A, B, C, D of four-dimensional generalized symmetric spaces,
//! given by their bracket tables and scalar products on `m`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{frac, int, Rational};
use crate::geometry::{GeometryError, ReductiveMetricSpace};
use crate::lie::{BracketEntry, LieAlgebra, LieError};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown space type {0:?} (expected A, B, C or D)")]
    UnknownSpace(String),
    #[error("space {space} requires parameter {name:?}")]
    MissingParameter {
        space: SpaceType,
        name: &'static str,
    },
    #[error("space {space} does not take parameter {name:?}")]
    UnknownParameter { space: SpaceType, name: String },
    #[error("parameter {name} = {value} is outside its domain ({domain})")]
    Domain {
        name: &'static str,
        value: Rational,
        domain: &'static str,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceType {
    A,
    B,
    C,
    D,
}

/// One named parameter of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: &'static str,
}

impl SpaceType {
    pub const ALL: [SpaceType; 4] = [SpaceType::A, SpaceType::B, SpaceType::C, SpaceType::D];

    pub fn params(self) -> &'static [ParamSpec] {
        match self {
            SpaceType::A => &[ParamSpec {
                name: "delta",
                domain: "delta > 0",
            }],
            SpaceType::B => &[
                ParamSpec {
                    name: "lambda",
                    domain: "any rational",
                },
                ParamSpec {
                    name: "epsilon",
                    domain: "+1 or -1",
                },
            ],
            SpaceType::C => &[ParamSpec {
                name: "sign",
                domain: "+1 or -1",
            }],
            SpaceType::D => &[ParamSpec {
                name: "lambda",
                domain: "lambda != 0",
            }],
        }
    }

    pub fn signature(self) -> &'static str {
        match self {
            SpaceType::A | SpaceType::B | SpaceType::D => "(2,2)",
            SpaceType::C => "(3,1) for sign = +1, (1,3) for sign = -1",
        }
    }

    /// The point used when a parameter is not given: all parameters equal to 1.
    pub fn default_parameters(self) -> BTreeMap<String, Rational> {
        self.params()
            .iter()
            .map(|p| (p.name.to_string(), int(1)))
            .collect()
    }

    /// Fills in [`SpaceType::default_parameters`] for every parameter not in `given`.
    pub fn with_defaults(self, given: &BTreeMap<String, Rational>) -> BTreeMap<String, Rational> {
        let mut out = self.default_parameters();
        out.extend(given.iter().map(|(k, v)| (k.clone(), v.clone())));
        out
    }

    /// Parameter points sampled by the regression and verification suites.
    pub fn sample_grid(self) -> Vec<BTreeMap<String, Rational>> {
        let point = |pairs: &[(&str, Rational)]| -> BTreeMap<String, Rational> {
            pairs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect()
        };
        match self {
            SpaceType::A => [int(1), int(2), frac(3, 2)]
                .into_iter()
                .map(|d| point(&[("delta", d)]))
                .collect(),
            SpaceType::B => {
                let mut out = Vec::new();
                for eps in [int(1), int(-1)] {
                    for l in [int(1), int(-1), frac(1, 2)] {
                        out.push(point(&[("lambda", l), ("epsilon", eps.clone())]));
                    }
                }
                out
            }
            SpaceType::C => [int(1), int(-1)]
                .into_iter()
                .map(|s| point(&[("sign", s)]))
                .collect(),
            SpaceType::D => [int(1), int(2), int(-1)]
                .into_iter()
                .map(|l| point(&[("lambda", l)]))
                .collect(),
        }
    }
}

impl fmt::Display for SpaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SpaceType::A => "A",
            SpaceType::B => "B",
            SpaceType::C => "C",
            SpaceType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for SpaceType {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(SpaceType::A),
            "B" | "b" => Ok(SpaceType::B),
            "C" | "c" => Ok(SpaceType::C),
            "D" | "d" => Ok(SpaceType::D),
            other => Err(CatalogError::UnknownSpace(other.to_string())),
        }
    }
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("U{i}")).collect()
}

fn unit_sign(name: &'static str, value: &Rational) -> Result<i64, CatalogError> {
    if *value == int(1) {
        Ok(1)
    } else if *value == int(-1) {
        Ok(-1)
    } else {
        Err(CatalogError::Domain {
            name,
            value: value.clone(),
            domain: "+1 or -1",
        })
    }
}

fn entry(i: usize, j: usize, coeffs: &[(usize, Rational)]) -> BracketEntry {
    BracketEntry::new(i - 1, j - 1, coeffs.iter().map(|(k, v)| (k - 1, v.clone())))
}

/// Type A, neutral signature, `δ > 0`.
pub fn build_type_a(delta: &Rational) -> Result<ReductiveMetricSpace, CatalogError> {
    if !delta.is_positive() {
        return Err(CatalogError::Domain {
            name: "delta",
            value: delta.clone(),
            domain: "delta > 0",
        });
    }
    let d = delta.clone();
    let two_d2 = int(2) * &d * &d;
    let brackets = [
        entry(1, 3, &[(1, -&d)]),
        entry(1, 4, &[(2, d.clone())]),
        entry(1, 5, &[(2, int(1))]),
        entry(2, 3, &[(2, d.clone())]),
        entry(2, 4, &[(1, d.clone())]),
        entry(2, 5, &[(1, int(-1))]),
        entry(3, 4, &[(5, -two_d2)]),
        entry(3, 5, &[(4, int(-2))]),
        entry(4, 5, &[(3, int(2))]),
    ];
    let alg = LieAlgebra::from_brackets(5, &brackets)?.with_basis_names(names(5));
    let metric = Matrix::diagonal(&[int(1), int(1), int(-2), int(-2)]);
    Ok(ReductiveMetricSpace::new(alg, 4, metric)?)
}

/// Type B, neutral signature, `ε = ±1`, any `λ`.
pub fn build_type_b(lambda: &Rational, epsilon: i64) -> Result<ReductiveMetricSpace, CatalogError> {
    let eps = int(unit_sign("epsilon", &int(epsilon))?);
    let brackets = [
        entry(1, 3, &[(1, int(-1))]),
        entry(1, 4, &[(2, int(1)), (5, eps.clone())]),
        entry(2, 3, &[(2, int(1)), (5, -&eps)]),
        entry(2, 4, &[(1, int(1))]),
        entry(3, 5, &[(2, int(2))]),
        entry(4, 5, &[(1, int(-2))]),
    ];
    let alg = LieAlgebra::from_brackets(5, &brackets)?.with_basis_names(names(5));
    let two_l = int(2) * lambda;
    let z = int(0);
    let metric = Matrix::from_rows(vec![
        vec![z.clone(), z.clone(), int(-1), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), int(-1)],
        vec![int(-1), z.clone(), two_l.clone(), z.clone()],
        vec![z.clone(), int(-1), z.clone(), two_l],
    ])
    .expect("4x4");
    Ok(ReductiveMetricSpace::new(alg, 4, metric)?)
}

/// Type C: a Lie group (`h = 0`); `sign` selects the signature of the `U1, U2` block.
pub fn build_type_c(sign: i64) -> Result<ReductiveMetricSpace, CatalogError> {
    let s = int(unit_sign("sign", &int(sign))?);
    let brackets = [entry(1, 4, &[(1, int(-1))]), entry(2, 4, &[(2, int(1))])];
    let alg = LieAlgebra::from_brackets(4, &brackets)?.with_basis_names(names(4));
    let z = int(0);
    let h = frac(1, 2);
    let metric = Matrix::from_rows(vec![
        vec![s.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), s, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), h.clone()],
        vec![z.clone(), z.clone(), h, z],
    ])
    .expect("4x4");
    Ok(ReductiveMetricSpace::new(alg, 4, metric)?)
}

/// Type D, neutral signature, `λ ≠ 0`.
pub fn build_type_d(lambda: &Rational) -> Result<ReductiveMetricSpace, CatalogError> {
    if lambda.is_zero() {
        return Err(CatalogError::Domain {
            name: "lambda",
            value: lambda.clone(),
            domain: "lambda != 0",
        });
    }
    let brackets = [
        entry(1, 4, &[(2, int(-1))]),
        entry(1, 5, &[(1, int(1))]),
        entry(2, 3, &[(1, int(-1))]),
        entry(2, 5, &[(2, int(-1))]),
        entry(3, 4, &[(5, int(-1))]),
        entry(3, 5, &[(3, int(2))]),
        entry(4, 5, &[(4, int(-2))]),
    ];
    let alg = LieAlgebra::from_brackets(5, &brackets)?.with_basis_names(names(5));
    let z = int(0);
    let metric = Matrix::from_rows(vec![
        vec![z.clone(), int(1), z.clone(), z.clone()],
        vec![int(1), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), lambda.clone()],
        vec![z.clone(), z.clone(), lambda.clone(), z],
    ])
    .expect("4x4");
    Ok(ReductiveMetricSpace::new(alg, 4, metric)?)
}

/// Builds a catalog space from named parameters, e.g. `{"delta": 3/2}` for type A.
pub fn build(
    space: SpaceType,
    params: &BTreeMap<String, Rational>,
) -> Result<ReductiveMetricSpace, CatalogError> {
    if let Some(extra) = params
        .keys()
        .find(|k| !space.params().iter().any(|p| p.name == k.as_str()))
    {
        return Err(CatalogError::UnknownParameter {
            space,
            name: extra.clone(),
        });
    }
    let get = |name: &'static str| {
        params
            .get(name)
            .ok_or(CatalogError::MissingParameter { space, name })
    };
    match space {
        SpaceType::A => build_type_a(get("delta")?),
        SpaceType::B => {
            let eps = unit_sign("epsilon", get("epsilon")?)?;
            build_type_b(get("lambda")?, eps)
        }
        SpaceType::C => build_type_c(unit_sign("sign", get("sign")?)?),
        SpaceType::D => build_type_d(get("lambda")?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::unit;

    #[test]
    fn type_a_table_entries() {
        let s = build_type_a(&int(1)).unwrap();
        let alg = s.algebra();
        assert_eq!(
            alg.basis_bracket(2, 3),
            vec![int(0), int(0), int(0), int(0), int(-2)]
        );
        assert_eq!(
            alg.basis_bracket(2, 4),
            vec![int(0), int(0), int(0), int(-2), int(0)]
        );
        assert_eq!(alg.bracket(&unit(5, 0), &unit(5, 4)).unwrap(), unit(5, 1));
        assert_eq!(
            alg.basis_bracket(4, 2),
            vec![int(0), int(0), int(0), int(2), int(0)]
        );
        assert!(alg.check_jacobi().is_ok());
        assert!(matches!(
            build_type_a(&int(-1)),
            Err(CatalogError::Domain { name: "delta", .. })
        ));
        assert!(matches!(
            build_type_a(&int(0)),
            Err(CatalogError::Domain { .. })
        ));
    }

    #[test]
    fn type_b_table_entries() {
        let s = build_type_b(&int(1), 1).unwrap();
        assert_eq!(
            s.algebra().basis_bracket(0, 3),
            vec![int(0), int(1), int(0), int(0), int(1)]
        );
        assert_eq!(
            s.algebra().basis_bracket(4, 2),
            vec![int(0), int(-2), int(0), int(0), int(0)]
        );
        assert!(s.algebra().check_jacobi().is_ok());
        // The 2x2 blocks [[0,-1],[-1,2λ]] each have determinant -1.
        let s0 = build_type_b(&int(0), -1).unwrap();
        assert_eq!(s0.metric().determinant().unwrap(), int(1));
        assert!(matches!(
            build_type_b(&int(1), 2),
            Err(CatalogError::Domain {
                name: "epsilon",
                ..
            })
        ));
    }

    #[test]
    fn type_b_with_negative_epsilon_violates_jacobi() {
        // Cyclic sum on (U1, U3, U4) is 2(1 - ε)U2.
        let s = build_type_b(&int(1), -1).unwrap();
        let err = s.algebra().check_jacobi().unwrap_err();
        assert_eq!((err.i, err.j, err.k), (0, 2, 3));
        assert_eq!(err.jacobiator, vec![int(0), int(4), int(0), int(0), int(0)]);
    }

    #[test]
    fn type_c_table_and_metric() {
        let s = build_type_c(1).unwrap();
        assert_eq!(s.algebra().basis_bracket(3, 0), unit(4, 0));
        assert_eq!(s.metric().determinant().unwrap(), frac(-1, 4));
        assert_eq!(
            build_type_c(-1).unwrap().metric().determinant().unwrap(),
            frac(-1, 4)
        );
        assert!(build_type_c(0).is_err());
    }

    #[test]
    fn type_d_table_entries() {
        let s = build_type_d(&int(1)).unwrap();
        assert_eq!(
            s.algebra().basis_bracket(2, 4),
            vec![int(0), int(0), int(2), int(0), int(0)]
        );
        assert!(s.algebra().check_jacobi().is_ok());
        assert!(matches!(
            build_type_d(&int(0)),
            Err(CatalogError::Domain { name: "lambda", .. })
        ));
    }

    #[test]
    fn build_by_name_checks_parameters() {
        let p = |pairs: &[(&str, i64)]| -> BTreeMap<String, Rational> {
            pairs
                .iter()
                .map(|(k, v)| (k.to_string(), int(*v)))
                .collect()
        };
        assert!(build(SpaceType::A, &p(&[("delta", 2)])).is_ok());
        assert_eq!(
            build(SpaceType::A, &p(&[])),
            Err(CatalogError::MissingParameter {
                space: SpaceType::A,
                name: "delta"
            })
        );
        assert!(matches!(
            build(SpaceType::C, &p(&[("sign", 1), ("lambda", 2)])),
            Err(CatalogError::UnknownParameter { .. })
        ));
        assert!(build(SpaceType::B, &p(&[("lambda", 3), ("epsilon", 1)])).is_ok());
        assert_eq!(
            SpaceType::B.with_defaults(&p(&[("lambda", 3)])),
            p(&[("lambda", 3), ("epsilon", 1)])
        );
        assert_eq!("d".parse::<SpaceType>().unwrap(), SpaceType::D);
        assert!("E".parse::<SpaceType>().is_err());
        for t in SpaceType::ALL {
            for point in t.sample_grid() {
                assert!(build(t, &point).is_ok(), "{t} {point:?}");
            }
        }
    }
}
