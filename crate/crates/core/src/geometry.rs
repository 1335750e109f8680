//! Reductive homogeneous pseudo-Riemannian spaces and their curvature.
//!
//! The Lie algebra basis is ordered with the `m_dim` basis vectors of `m`
//! first and the basis of the isotropy algebra `h` last. All tensors are
//! expressed in that (generally non-orthonormal) basis. Conventions:
//!
//! * `R(X,Y) = ∇_[X,Y] − [∇_X, ∇_Y]`, lowered as `R(X,Y,Z,W) = g(R(X,Y)Z, W)`;
//! * `ρ(X,Y) = Σ g^{cd} R(X, U_c, Y, U_d)`, which equals `Σ ε_k g(R(X,e_k)Y, e_k)`
//!   for any pseudo-orthonormal frame;
//! * `g(Ric X, Y) = ρ(X,Y)`; matrices act on columns, so column `j` of an
//!   operator matrix is the image of `U_j`.

use thiserror::Error;

use crate::exact::Rational;
use crate::lie::{unit, LieAlgebra};
use crate::linalg::{LinalgError, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("m_dim = {m_dim} must lie in 1..={dim}")]
    InvalidSplit { m_dim: usize, dim: usize },
    #[error("metric must be {expected}x{expected}, got {rows}x{cols}")]
    MetricShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("metric is not symmetric: g[{i}][{j}] != g[{j}][{i}]")]
    NonSymmetricMetric { i: usize, j: usize },
    #[error("metric is degenerate (determinant 0)")]
    DegenerateMetric,
    #[error("split is not reductive: [{left}, {right}] has component {value} along {along}")]
    NonReductive {
        left: String,
        right: String,
        along: String,
        value: Rational,
    },
    #[error("metric is not ad(h)-invariant on ({z}, {x}, {y}): <[Z,X],Y> + <X,[Z,Y]> = {value}")]
    NonInvariantMetric {
        z: String,
        x: String,
        y: String,
        value: Rational,
    },
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("basis change mixes m and h: entry ({row}, {col}) is nonzero")]
    BlockViolation { row: usize, col: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Lie algebra `g = m ⊕ h` with a nondegenerate ad(h)-invariant scalar product on `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveMetricSpace {
    algebra: LieAlgebra,
    m_dim: usize,
    metric: Matrix,
    metric_inv: Matrix,
}

impl ReductiveMetricSpace {
    pub fn new(algebra: LieAlgebra, m_dim: usize, metric: Matrix) -> Result<Self, GeometryError> {
        let n = algebra.dim();
        if m_dim == 0 || m_dim > n {
            return Err(GeometryError::InvalidSplit { m_dim, dim: n });
        }
        if metric.rows() != m_dim || metric.cols() != m_dim {
            return Err(GeometryError::MetricShape {
                expected: m_dim,
                rows: metric.rows(),
                cols: metric.cols(),
            });
        }
        for i in 0..m_dim {
            for j in 0..i {
                if metric[(i, j)] != metric[(j, i)] {
                    return Err(GeometryError::NonSymmetricMetric { i: j, j: i });
                }
            }
        }
        if metric.determinant()?.is_zero() {
            return Err(GeometryError::DegenerateMetric);
        }
        let metric_inv = metric.inverse()?;
        let space = ReductiveMetricSpace {
            algebra,
            m_dim,
            metric,
            metric_inv,
        };
        space.check_reductive()?;
        space.check_invariant()?;
        Ok(space)
    }

    fn name(&self, i: usize) -> String {
        self.algebra.basis_names()[i].clone()
    }

    fn check_reductive(&self) -> Result<(), GeometryError> {
        let (n, m) = (self.dim(), self.m_dim);
        for z in m..n {
            for x in 0..n {
                let b = self.algebra.basis_bracket(z, x);
                // [h,m] ⊆ m and [h,h] ⊆ h.
                let forbidden = if x < m { m..n } else { 0..m };
                if let Some(k) = forbidden.clone().find(|&k| !b[k].is_zero()) {
                    return Err(GeometryError::NonReductive {
                        left: self.name(z),
                        right: self.name(x),
                        along: self.name(k),
                        value: b[k].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_invariant(&self) -> Result<(), GeometryError> {
        let (n, m) = (self.dim(), self.m_dim);
        for z in m..n {
            for x in 0..m {
                let zx = self.bracket_m(z, x);
                for y in x..m {
                    let zy = self.bracket_m(z, y);
                    let value = self.inner(&zx, &unit(m, y)) + self.inner(&unit(m, x), &zy);
                    if !value.is_zero() {
                        return Err(GeometryError::NonInvariantMetric {
                            z: self.name(z),
                            x: self.name(x),
                            y: self.name(y),
                            value,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn metric_inverse(&self) -> &Matrix {
        &self.metric_inv
    }

    /// `g(x, y)` for coordinate vectors in `m`.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let g = &self.metric[(i, j)];
                if !g.is_zero() {
                    acc += xi * yj * g;
                }
            }
        }
        acc
    }

    /// `m`-component of `[U_i, U_j]`.
    pub fn bracket_m(&self, i: usize, j: usize) -> Vector {
        let mut b = self.algebra.basis_bracket(i, j);
        b.truncate(self.m_dim);
        b
    }

    /// Embeds an `m`-vector into `g`.
    pub fn embed_m(&self, x: &[Rational]) -> Vector {
        let mut v = x.to_vec();
        v.resize(self.dim(), Rational::zero());
        v
    }

    /// `m`-block of the projection `pr∘D` restricted to `m`.
    pub fn project_to_m(&self, d: &Matrix) -> Matrix {
        d.top_left(self.m_dim, self.m_dim)
    }

    pub fn with_scaled_metric(&self, t: &Rational) -> Result<Self, GeometryError> {
        ReductiveMetricSpace::new(self.algebra.clone(), self.m_dim, self.metric.scale(t))
    }

    /// Same geometry in the basis given by the columns of `p`.
    ///
    /// `p` must be invertible and map `span(m)` and `span(h)` to themselves.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self, GeometryError> {
        let (n, m) = (self.dim(), self.m_dim);
        if p.rows() != n || p.cols() != n {
            return Err(LinalgError::DimensionMismatch(format!(
                "basis change must be {n}x{n}, got {}x{}",
                p.rows(),
                p.cols()
            ))
            .into());
        }
        for row in 0..n {
            for col in 0..n {
                if (row < m) != (col < m) && !p[(row, col)].is_zero() {
                    return Err(GeometryError::BlockViolation { row, col });
                }
            }
        }
        if p.determinant()?.is_zero() {
            return Err(GeometryError::SingularBasisChange);
        }
        let algebra = self.algebra.change_basis(p)?;
        let pm = p.top_left(m, m);
        let metric = pm.transpose().mul(&self.metric)?.mul(&pm)?;
        ReductiveMetricSpace::new(algebra, m, metric)
    }
}

/// Nomizu map `Λ: m × m → m` of the Levi-Civita connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    m_dim: usize,
    table: Vec<Vector>,
}

impl Connection {
    /// `Λ_{U_i} U_j`.
    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.m_dim + j]
    }

    /// `Λ_x y` for coordinate vectors in `m`.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let m = self.m_dim;
        let mut out = vec![Rational::zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (o, l) in out.iter_mut().zip(self.get(i, j)) {
                    if !l.is_zero() {
                        *o += &w * l;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(Rational::is_zero)
    }
}

/// `Λ_X Y = ½[X,Y]_m + U(X,Y)` with `2⟨U(X,Y),Z⟩ = ⟨[Z,X]_m,Y⟩ + ⟨X,[Z,Y]_m⟩`.
pub fn levi_civita(space: &ReductiveMetricSpace) -> Connection {
    let m = space.m_dim();
    let half = crate::exact::frac(1, 2);
    let mut table = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let (ei, ej) = (unit(m, i), unit(m, j));
            let rhs: Vector = (0..m)
                .map(|k| {
                    let a = space.inner(&space.bracket_m(k, i), &ej);
                    let b = space.inner(&ei, &space.bracket_m(k, j));
                    (a + b) * &half
                })
                .collect();
            let u = space.metric_inverse().mul_vec(&rhs).expect("m-vector");
            let entry = space
                .bracket_m(i, j)
                .iter()
                .zip(u)
                .map(|(b, u)| b * &half + u)
                .collect();
            table.push(entry);
        }
    }
    Connection { m_dim: m, table }
}

/// Fully lowered curvature tensor `R[i][j][k][l] = g(R(U_i,U_j)U_k, U_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    m_dim: usize,
    data: Vec<Rational>,
}

impl CurvatureTensor {
    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        let m = self.m_dim;
        &self.data[((i * m + j) * m + k) * m + l]
    }

    /// Multilinear evaluation `R(x, y, z, w)` on coordinate vectors in `m`.
    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational], w: &[Rational]) -> Rational {
        let nz = |v: &[Rational]| -> Vec<(usize, Rational)> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect()
        };
        let (xs, ys, zs, ws) = (nz(x), nz(y), nz(z), nz(w));
        let mut acc = Rational::zero();
        for (i, a) in &xs {
            for (j, b) in &ys {
                for (k, c) in &zs {
                    for (l, d) in &ws {
                        let r = self.get(*i, *j, *k, *l);
                        if !r.is_zero() {
                            acc += a * b * c * d * r;
                        }
                    }
                }
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }
}

/// `R(X,Y)Z = Λ_{[X,Y]_m} Z + [[X,Y]_h, Z] − Λ_X Λ_Y Z + Λ_Y Λ_X Z`, lowered with `g`.
pub fn curvature(space: &ReductiveMetricSpace, conn: &Connection) -> CurvatureTensor {
    let (n, m) = (space.dim(), space.m_dim());
    let mut data = vec![Rational::zero(); m * m * m * m];
    for i in 0..m {
        for j in 0..m {
            let b = space.algebra().basis_bracket(i, j);
            let b_m = &b[..m];
            let mut b_h = vec![Rational::zero(); n];
            b_h[m..].clone_from_slice(&b[m..]);
            let has_h = b_h.iter().any(|v| !v.is_zero());
            for k in 0..m {
                let ek = unit(m, k);
                let mut v = conn.apply(b_m, &ek);
                if has_h {
                    let iso = space
                        .algebra()
                        .bracket(&b_h, &unit(n, k))
                        .expect("g-vectors");
                    for (o, t) in v.iter_mut().zip(&iso[..m]) {
                        *o += t;
                    }
                }
                let yz = conn.get(j, k);
                let xz = conn.get(i, k);
                let xyz = conn.apply(&unit(m, i), yz);
                let yxz = conn.apply(&unit(m, j), xz);
                for ((o, a), b) in v.iter_mut().zip(&xyz).zip(&yxz) {
                    *o -= a;
                    *o += b;
                }
                for l in 0..m {
                    data[((i * m + j) * m + k) * m + l] = space.inner(&v, &unit(m, l));
                }
            }
        }
    }
    CurvatureTensor { m_dim: m, data }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ricci {
    /// `ρ`, symmetric.
    pub tensor: Matrix,
    /// `Ric = g⁻¹ ρ`.
    pub operator: Matrix,
    pub scalar: Rational,
}

pub fn ricci(space: &ReductiveMetricSpace, r: &CurvatureTensor) -> Ricci {
    let m = space.m_dim();
    let ginv = space.metric_inverse();
    let mut rho = Matrix::zeros(m, m);
    for x in 0..m {
        for y in 0..m {
            let mut acc = Rational::zero();
            for c in 0..m {
                for d in 0..m {
                    let g = &ginv[(c, d)];
                    if !g.is_zero() {
                        acc += g * r.get(x, c, y, d);
                    }
                }
            }
            rho[(x, y)] = acc;
        }
    }
    let operator = ginv.mul(&rho).expect("m x m");
    let scalar = operator.trace();
    Ricci {
        tensor: rho,
        operator,
        scalar,
    }
}

/// Connection, curvature and Ricci data of a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryReport {
    pub connection: Connection,
    pub curvature: CurvatureTensor,
    pub ricci: Ricci,
}

impl GeometryReport {
    pub fn compute(space: &ReductiveMetricSpace) -> Self {
        let connection = levi_civita(space);
        let curvature = curvature(space, &connection);
        let ricci = ricci(space, &curvature);
        GeometryReport {
            connection,
            curvature,
            ricci,
        }
    }

    pub fn ricci_operator(&self) -> &Matrix {
        &self.ricci.operator
    }

    pub fn scalar_curvature(&self) -> &Rational {
        &self.ricci.scalar
    }
}
