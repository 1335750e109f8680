//! Lie algebras given by structure constants, and their derivation algebras.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::Rational;
use crate::linalg::{kernel_basis, LinalgError, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [x{i}, x{j}] given more than once")]
    DuplicatePair { i: usize, j: usize },
    #[error("bracket [x{i}, x{i}] must vanish")]
    SelfBracket { i: usize },
    #[error("bracket pairs must be listed with i < j, got ({i}, {j})")]
    UnorderedPair { i: usize, j: usize },
    #[error(transparent)]
    Jacobi(#[from] JacobiFailure),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// First basis triple (i < j < k) whose cyclic Jacobi sum is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Jacobi identity fails on (x{i}, x{j}, x{k}): jacobiator = {}", format_vector(.jacobiator))]
pub struct JacobiFailure {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub jacobiator: Vector,
}

/// Basis pair on which `D[xi,xj] = [Dxi,xj] + [xi,Dxj]` fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("derivation identity fails on (x{i}, x{j}): residual = {}", format_vector(.residual))]
pub struct DerivationFailure {
    pub i: usize,
    pub j: usize,
    pub residual: Vector,
}

pub(crate) fn format_vector(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

/// One row of a sparse bracket table: `[x_i, x_j] = Σ coeffs[k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, Rational>,
}

impl BracketEntry {
    pub fn new(i: usize, j: usize, coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        BracketEntry {
            i,
            j,
            coeffs: coeffs.into_iter().collect(),
        }
    }
}

/// Finite-dimensional Lie algebra `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
///
/// Antisymmetry holds by construction. The Jacobi identity is not enforced at
/// construction; call [`LieAlgebra::check_jacobi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    constants: Vec<Rational>,
    basis_names: Vec<String>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            constants: vec![Rational::zero(); dim * dim * dim],
            basis_names: default_names(dim),
        }
    }

    /// Builds an algebra from the upper triangle (`i < j`) of its bracket table.
    pub fn from_brackets(dim: usize, brackets: &[BracketEntry]) -> Result<Self, LieError> {
        let mut alg = LieAlgebra::abelian(dim);
        let mut seen = std::collections::BTreeSet::new();
        for entry in brackets {
            let (i, j) = (entry.i, entry.j);
            for idx in [i, j].into_iter().chain(entry.coeffs.keys().copied()) {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                if entry.coeffs.values().all(Rational::is_zero) {
                    continue;
                }
                return Err(LieError::SelfBracket { i });
            }
            if i > j {
                return Err(LieError::UnorderedPair { i, j });
            }
            if !seen.insert((i, j)) {
                return Err(LieError::DuplicatePair { i, j });
            }
            for (&k, v) in &entry.coeffs {
                alg.set(i, j, k, v.clone());
            }
        }
        Ok(alg)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim, "one name per basis vector");
        self.basis_names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let n = self.dim;
        self.constants[(j * n + i) * n + k] = -&v;
        self.constants[(i * n + j) * n + k] = v;
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.constants[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, LieError> {
        let n = self.dim;
        if x.len() != n || y.len() != n {
            return Err(LinalgError::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            ))
            .into());
        }
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if i == j {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)`; column `j` holds `[x, x_j]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix, LieError> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &unit(self.dim, j)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(&cols)?)
    }

    pub fn check_jacobi(&self) -> Result<(), JacobiFailure> {
        let n = self.dim;
        let e = |i| unit(n, i);
        let br = |x: &[Rational], y: &[Rational]| self.bracket(x, y).expect("basis-length vectors");
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = br(&e(i), &br(&e(j), &e(k)));
                    let b = br(&e(j), &br(&e(k), &e(i)));
                    let c = br(&e(k), &br(&e(i), &e(j)));
                    let sum: Vector = (0..n).map(|t| &a[t] + &b[t] + &c[t]).collect();
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Err(JacobiFailure {
                            i,
                            j,
                            k,
                            jacobiator: sum,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-expresses the algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, LinalgError> {
        let n = self.dim;
        if p.rows() != n || !p.is_square() {
            return Err(LinalgError::DimensionMismatch(
                "basis change must be n x n".into(),
            ));
        }
        let p_inv = p.inverse()?;
        let mut out = LieAlgebra::abelian(n).with_basis_names(self.basis_names.clone());
        for a in 0..n {
            for b in a + 1..n {
                let v = self
                    .bracket(&p.column(a), &p.column(b))
                    .expect("basis-length vectors");
                let coords = p_inv.mul_vec(&v)?;
                for (l, c) in coords.into_iter().enumerate() {
                    out.set(a, b, l, c);
                }
            }
        }
        Ok(out)
    }

    /// Checks `D[xi,xj] = [Dxi,xj] + [xi,Dxj]` on all basis pairs.
    ///
    /// Column `l` of `d` holds the coordinates of `D(x_l)`.
    pub fn is_derivation(&self, d: &Matrix) -> Result<Result<(), DerivationFailure>, LieError> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Err(LinalgError::DimensionMismatch(format!(
                "derivation must be {n}x{n}, got {}x{}",
                d.rows(),
                d.cols()
            ))
            .into());
        }
        let images: Vec<Vector> = (0..n).map(|l| d.column(l)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.basis_bracket(i, j))?;
                let r1 = self.bracket(&images[i], &unit(n, j))?;
                let r2 = self.bracket(&unit(n, i), &images[j])?;
                let residual: Vector = (0..n).map(|t| &lhs[t] - &r1[t] - &r2[t]).collect();
                if residual.iter().any(|v| !v.is_zero()) {
                    return Ok(Err(DerivationFailure { i, j, residual }));
                }
            }
        }
        Ok(Ok(()))
    }

    /// Linear map `vec(D) -> (D[xi,xj] - [Dxi,xj] - [xi,Dxj])` stacked over `i < j`.
    ///
    /// Unknowns are the entries of `D` flattened row-major; equations run over
    /// pairs in lexicographic order, then over the output component.
    pub fn derivation_system(&self) -> Matrix {
        let n = self.dim;
        let pairs = n * n.saturating_sub(1) / 2;
        let mut sys = Matrix::zeros(pairs * n, n * n);
        let mut row = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for p in 0..n {
                        let c = self.constant(i, j, p);
                        if !c.is_zero() {
                            sys[(row, k * n + p)] += c;
                        }
                        let c = self.constant(p, j, k);
                        if !c.is_zero() {
                            sys[(row, p * n + i)] -= c;
                        }
                        let c = self.constant(i, p, k);
                        if !c.is_zero() {
                            sys[(row, p * n + j)] -= c;
                        }
                    }
                    row += 1;
                }
            }
        }
        sys
    }

    /// Basis of `Der(g)`. Refuses algebras that violate the Jacobi identity.
    pub fn derivation_space(&self) -> Result<DerivationSpace, LieError> {
        self.check_jacobi()?;
        let n = self.dim;
        let basis: Vec<Matrix> = kernel_basis(&self.derivation_system())
            .into_iter()
            .map(|v| {
                let rows = v.chunks(n).map(<[Rational]>::to_vec).collect();
                Matrix::from_rows(rows).expect("square chunks")
            })
            .collect();
        Ok(DerivationSpace { basis })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `Σ coeffs[t] · basis[t]`.
    pub fn combine(&self, coeffs: &[Rational], n: usize) -> Matrix {
        self.basis
            .iter()
            .zip(coeffs)
            .filter(|(_, a)| !a.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (d, a)| {
                acc.add(&d.scale(a)).expect("same shape")
            })
    }
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("U{i}")).collect()
}
