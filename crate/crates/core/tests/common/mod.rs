//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use algsoliton_core::exact::{frac, int, Rational};
use algsoliton_core::geometry::CurvatureTensor;
use algsoliton_core::linalg::{rref, Matrix};
use algsoliton_core::{LieAlgebra, ReductiveMetricSpace};
use proptest::prelude::*;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn diag(v: &[Rational]) -> Matrix {
    Matrix::diagonal(v)
}

pub fn rows(r: Vec<Vec<Rational>>) -> Matrix {
    Matrix::from_rows(r).unwrap()
}

/// Collects one labelled PASS/FAIL line per check and fails at the end.
pub struct Tally {
    criterion: &'static str,
    failures: Vec<String>,
}

impl Tally {
    pub fn new(criterion: &'static str) -> Self {
        Tally {
            criterion,
            failures: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl AsRef<str>, ok: bool, detail: impl FnOnce() -> String) {
        let label = label.as_ref();
        if ok {
            println!("PASS [{}] {label}", self.criterion);
        } else {
            let d = detail();
            println!("FAIL [{}] {label}: {d}", self.criterion);
            self.failures.push(format!("{label}: {d}"));
        }
    }

    pub fn finish(self) {
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n{}",
            self.criterion,
            self.failures.join("\n")
        );
    }
}

// ---------------------------------------------------------------------------
// Closed-form derivation algebras, one basis matrix per free parameter.
// Column l is the image of U_l.

fn family(n: usize, k: usize, build: impl Fn(&[Rational]) -> Vec<Vec<Rational>>) -> Vec<Matrix> {
    (0..k)
        .map(|t| {
            let p: Vec<Rational> = (0..k)
                .map(|s| if s == t { int(1) } else { int(0) })
                .collect();
            let m = rows(build(&p));
            assert_eq!((m.rows(), m.cols()), (n, n));
            m
        })
        .collect()
}

/// Parameters `(l11, l12, l51, l52, l53, l54)`.
pub fn der_a(delta: &Rational) -> Vec<Matrix> {
    let d = delta.clone();
    let d2 = &d * &d;
    family(5, 6, move |p| {
        let (l11, l12, l51, l52, l53, l54) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let z = int(0);
        let t = int(2) * l12 + &d * l53;
        vec![
            vec![
                l11.clone(),
                -l12 - &d * l53,
                -(&d * l52),
                -(&d * l51),
                l51.clone(),
            ],
            vec![
                l12.clone(),
                l11 + &d * l54,
                -(&d * l51),
                &d * l52,
                l52.clone(),
            ],
            vec![z.clone(), z.clone(), z.clone(), t.clone(), l53.clone()],
            vec![z.clone(), z.clone(), -t, z.clone(), l54.clone()],
            vec![z.clone(), z.clone(), &d2 * l53, &d2 * l54, z],
        ]
    })
}

/// `ε = 1`; parameters `(l11, l12, l31, l32, l35, l25)`.
pub fn der_b_plus() -> Vec<Matrix> {
    family(5, 6, |p| {
        let (l11, l12, l31, l32, l35, l25) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let z = int(0);
        vec![
            vec![
                l11.clone(),
                l12.clone(),
                l31.clone(),
                -l32 - int(2) * l35,
                int(2) * l12,
            ],
            vec![
                l12.clone(),
                l11 - int(2) * l25,
                l32.clone(),
                -l31,
                int(2) * l25,
            ],
            vec![z.clone(); 5],
            vec![z.clone(); 5],
            vec![l12.clone(), l25.clone(), l35.clone(), -l31, l11 - l25],
        ]
    })
}

/// `ε = −1`; parameters `(l11, l31, l32, l35, l25)`.
pub fn der_b_minus() -> Vec<Matrix> {
    family(5, 5, |p| {
        let (l11, l31, l32, l35, l25) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
        let z = int(0);
        vec![
            vec![
                l11.clone(),
                z.clone(),
                l31.clone(),
                -l32 - int(2) * l35,
                z.clone(),
            ],
            vec![z.clone(), l11.clone(), l32.clone(), -l31, z.clone()],
            vec![z.clone(); 5],
            vec![z.clone(); 5],
            vec![z.clone(), l25.clone(), l35.clone(), -l31, l11.clone()],
        ]
    })
}

/// Parameters `(l11, l22, l33, l41, l42, l43)`.
pub fn der_c() -> Vec<Matrix> {
    family(4, 6, |p| {
        let z = int(0);
        vec![
            vec![p[0].clone(), z.clone(), z.clone(), p[3].clone()],
            vec![z.clone(), p[1].clone(), z.clone(), p[4].clone()],
            vec![z.clone(), z.clone(), p[2].clone(), p[5].clone()],
            vec![z.clone(); 4],
        ]
    })
}

/// Parameters `(l11, l21, l31, l12, l22, l42)`.
pub fn der_d() -> Vec<Matrix> {
    family(5, 6, |p| {
        let (l11, l21, l31, l12, l22, l42) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let z = int(0);
        vec![
            vec![l11.clone(), l21.clone(), l31.clone(), z.clone(), -l42],
            vec![
                l12.clone(),
                l22.clone(),
                z.clone(),
                l42.clone(),
                l31.clone(),
            ],
            vec![z.clone(), z.clone(), l11 - l22, z.clone(), int(2) * l21],
            vec![z.clone(), z.clone(), z.clone(), l22 - l11, int(-2) * l12],
            vec![z.clone(), z.clone(), l12.clone(), -l21, z],
        ]
    })
}

/// Rank of the span of a list of matrices viewed as vectors.
pub fn span_rank(ms: &[Matrix]) -> usize {
    if ms.is_empty() {
        return 0;
    }
    let r: Vec<Vec<Rational>> = ms.iter().map(|m| m.entries().to_vec()).collect();
    rref(&rows(r)).rank
}

// ---------------------------------------------------------------------------
// Pseudo-orthonormal frames given as unnormalized U-coordinate vectors `u_a`
// with `e_a = sqrt(s_a) u_a`.

pub struct Frame {
    pub vectors: Vec<Vec<Rational>>,
    pub sq_scale: Vec<Rational>,
}

impl Frame {
    /// Exact comparison `R(e_a,e_b,e_c,e_d) == value` without square roots:
    /// equal squares after rescaling and equal signs.
    pub fn component_equals(&self, r: &CurvatureTensor, idx: [usize; 4], value: &Rational) -> bool {
        let v = &self.vectors;
        let raw = r.eval(&v[idx[0]], &v[idx[1]], &v[idx[2]], &v[idx[3]]);
        let scale: Rational = idx.iter().map(|&i| self.sq_scale[i].clone()).product();
        &raw * &raw * scale == value * value && raw.signum() == value.signum()
    }

    /// `(R(e..))²` as an exact rational, for diagnostics.
    pub fn component_squared(&self, r: &CurvatureTensor, idx: [usize; 4]) -> (Rational, Rational) {
        let v = &self.vectors;
        let raw = r.eval(&v[idx[0]], &v[idx[1]], &v[idx[2]], &v[idx[3]]);
        let scale: Rational = idx.iter().map(|&i| self.sq_scale[i].clone()).product();
        (raw.clone(), &raw * &raw * scale)
    }

    /// `g(e_a, e_b)` is `±δ_ab`.
    pub fn is_pseudo_orthonormal(&self, s: &ReductiveMetricSpace, signs: &[i64]) -> bool {
        let n = self.vectors.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let g = s.inner(&self.vectors[a], &self.vectors[b]) * &self.sq_scale[a];
                if a == b {
                    g == int(signs[a])
                } else {
                    g.is_zero()
                }
            })
        })
    }
}

fn v4(a: [Rational; 4]) -> Vec<Rational> {
    a.to_vec()
}

pub fn frame_a() -> Frame {
    Frame {
        vectors: vec![
            v4([int(1), int(0), int(0), int(0)]),
            v4([int(0), int(1), int(0), int(0)]),
            v4([int(0), int(0), int(1), int(0)]),
            v4([int(0), int(0), int(0), int(1)]),
        ],
        sq_scale: vec![int(1), int(1), frac(1, 2), frac(1, 2)],
    }
}

/// Quoted nonzero components for type A, as functions of `δ²`; indices 0-based.
pub fn values_a(delta: &Rational) -> Vec<([usize; 4], Rational)> {
    let d2 = delta * delta;
    let h = &d2 * frac(1, 2);
    vec![
        ([0, 1, 0, 1], -&d2),
        ([0, 1, 2, 3], d2.clone()),
        ([0, 2, 0, 2], -&h),
        ([0, 2, 1, 3], h.clone()),
        ([0, 3, 0, 3], -&h),
        ([0, 3, 1, 2], -&h),
        ([1, 2, 1, 2], -&h),
        ([1, 3, 1, 3], -&h),
    ]
}

pub fn frame_b(lambda: &Rational) -> Frame {
    let lo = lambda - frac(1, 2);
    let hi = lambda + frac(1, 2);
    Frame {
        vectors: vec![
            v4([lo.clone(), int(0), int(1), int(0)]),
            v4([int(0), lo, int(0), int(1)]),
            v4([hi.clone(), int(0), int(1), int(0)]),
            v4([int(0), hi, int(0), int(1)]),
        ],
        sq_scale: vec![int(1); 4],
    }
}

pub fn values_b() -> Vec<([usize; 4], Rational)> {
    vec![
        ([0, 1, 0, 1], int(-2)),
        ([0, 1, 0, 3], int(-2)),
        ([0, 1, 1, 2], int(2)),
        ([0, 1, 2, 3], int(2)),
        ([0, 3, 2, 3], int(2)),
        ([1, 2, 2, 3], int(-2)),
        ([2, 3, 2, 3], int(2)),
    ]
}

pub fn frame_c() -> Frame {
    Frame {
        vectors: vec![
            v4([int(1), int(0), int(0), int(0)]),
            v4([int(0), int(1), int(0), int(0)]),
            v4([int(0), int(0), int(1), int(1)]),
            v4([int(0), int(0), int(1), int(-1)]),
        ],
        sq_scale: vec![int(1); 4],
    }
}

pub fn values_c() -> Vec<([usize; 4], Rational)> {
    vec![
        ([0, 2, 0, 2], int(-1)),
        ([0, 2, 0, 3], int(1)),
        ([0, 3, 0, 3], int(-1)),
        ([1, 2, 1, 2], int(-1)),
        ([1, 2, 1, 3], int(1)),
        ([1, 3, 1, 3], int(-1)),
    ]
}

/// Frame for type D with `ε = sign(λ)` so that `e2` is spacelike.
pub fn frame_d(lambda: &Rational) -> Frame {
    let eps = if lambda.is_positive() {
        int(1)
    } else {
        int(-1)
    };
    let s = (int(2) * lambda.abs()).recip().unwrap();
    Frame {
        vectors: vec![
            v4([int(1), int(1), int(0), int(0)]),
            v4([int(0), int(0), int(1), eps.clone()]),
            v4([int(1), int(-1), int(0), int(0)]),
            v4([int(0), int(0), int(1), -eps]),
        ],
        sq_scale: vec![frac(1, 2), s.clone(), frac(1, 2), s],
    }
}

pub fn values_d(lambda: &Rational) -> Vec<([usize; 4], Rational)> {
    let a = (int(2) * lambda).recip().unwrap();
    let b = lambda.recip().unwrap();
    vec![
        ([0, 1, 0, 1], -&a),
        ([0, 1, 2, 3], a.clone()),
        ([0, 3, 0, 3], a.clone()),
        ([0, 3, 1, 2], a.clone()),
        ([1, 2, 1, 2], a.clone()),
        ([2, 3, 2, 3], -&a),
        ([0, 2, 0, 2], -&b),
        ([0, 2, 1, 3], b.clone()),
    ]
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// Bilinear bracket straight from the structure constants.
fn raw_bracket(alg: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = alg.dim();
    let mut out = vec![int(0); n];
    for i in 0..n {
        for j in 0..n {
            let w = &x[i] * &y[j];
            if w.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &w * alg.constant(i, j, k);
            }
        }
    }
    out
}

fn apply(d: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    d.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Derivation system built column by column: unknown `(a, b)` sits at column
/// `b * n + a` (column-major) and its column is the residual of the
/// elementary matrix `E_ab` on all ordered pairs `(i, j)`, `i != j`.
pub fn brute_force_derivation_dim(alg: &LieAlgebra) -> usize {
    let n = alg.dim();
    let unit = |i: usize| -> Vec<Rational> {
        (0..n)
            .map(|t| if t == i { int(1) } else { int(0) })
            .collect()
    };
    let eq_count = n * n * n;
    let mut sys = Matrix::zeros(eq_count.max(1), n * n);
    for b in 0..n {
        for a in 0..n {
            let mut e = vec![vec![int(0); n]; n];
            e[a][b] = int(1);
            let col = b * n + a;
            let mut row = 0;
            for j in 0..n {
                for i in 0..n {
                    let lhs = apply(&e, &raw_bracket(alg, &unit(i), &unit(j)));
                    let r1 = raw_bracket(alg, &apply(&e, &unit(i)), &unit(j));
                    let r2 = raw_bracket(alg, &unit(i), &apply(&e, &unit(j)));
                    for k in 0..n {
                        sys[(row, col)] = &lhs[k] - &r1[k] - &r2[k];
                        row += 1;
                    }
                }
            }
        }
    }
    n * n - rref(&sys).rank
}

// ---------------------------------------------------------------------------
// Strategies.

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| frac(if neg { -n } else { n }, d))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

/// Invertible block-diagonal change of basis for an `(m, n − m)` split.
pub fn block_basis_change(n: usize, m: usize) -> impl Strategy<Value = Matrix> {
    let top = proptest::collection::vec(-3i64..=3, m * m);
    let bottom = proptest::collection::vec(-3i64..=3, (n - m) * (n - m));
    (top, bottom)
        .prop_map(move |(t, b)| {
            let mut p = Matrix::zeros(n, n);
            for i in 0..m {
                for j in 0..m {
                    p[(i, j)] = int(t[i * m + j]);
                }
                p[(i, i)] += int(4);
            }
            for i in 0..n - m {
                for j in 0..n - m {
                    p[(m + i, m + j)] = int(b[i * (n - m) + j]);
                }
                p[(m + i, m + i)] += int(4);
            }
            p
        })
        .prop_filter("invertible", |p| !p.determinant().unwrap().is_zero())
}
