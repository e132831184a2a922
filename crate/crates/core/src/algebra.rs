//! Finite-dimensional real Lie algebras given by structure constants, together
//! with the positive-definite inner products that define left-invariant metrics.
//!
//! Structure constants are stored for `i < j` only; `[e_j, e_i]` is produced by
//! negation on access, so antisymmetry holds exactly.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector, RANK_TOL};
use nalgebra::linalg::Cholesky;
use nalgebra::Dyn;

/// A real Lie algebra on the basis `e_1, ..., e_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    upper: Vec<Vector>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `[e_i, e_j] += c e_k`
    /// (0-based). Entries with `i > j` are folded into the stored `(j, i)` slot with
    /// a sign flip. The result is validated against the Jacobi identity.
    pub fn from_brackets<I>(dim: usize, names: Option<Vec<String>>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, f64)>,
    {
        let alg = Self::from_brackets_unchecked(dim, names, entries)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Same as [`LieAlgebra::from_brackets`] without the Jacobi check. Index and
    /// dimension errors are still reported.
    pub fn from_brackets_unchecked<I>(
        dim: usize,
        names: Option<Vec<String>>,
        entries: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, f64)>,
    {
        if dim == 0 {
            return Err(Error::Invalid("algebra dimension must be positive".into()));
        }
        let names = names.unwrap_or_else(|| default_names(dim));
        if names.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: names.len(),
            });
        }
        let mut upper = vec![Vector::zeros(dim); dim * (dim - 1) / 2];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                if c != 0.0 {
                    return Err(Error::Invalid(format!(
                        "bracket [e{0}, e{0}] must vanish",
                        i + 1
                    )));
                }
                continue;
            }
            let (a, b, s) = if i < j { (i, j, c) } else { (j, i, -c) };
            upper[pair_index(dim, a, b)][k] += s;
        }
        Ok(Self { dim, names, upper })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets_unchecked(dim, None, std::iter::empty())
            .expect("abelian algebra of positive dimension")
    }

    /// Jacobi tolerance used at load: `1e-9 (1 + max|c|)^2`.
    pub fn jacobi_tolerance(&self) -> f64 {
        let m = self.max_constant();
        1e-9 * (1.0 + m) * (1.0 + m)
    }

    pub fn validate(&self) -> Result<()> {
        let defect = self.jacobi_defect();
        let tolerance = self.jacobi_tolerance();
        if defect > tolerance {
            return Err(Error::JacobiViolation { defect, tolerance });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn max_constant(&self) -> f64 {
        self.upper
            .iter()
            .flat_map(|v| v.iter())
            .fold(0.0, |a, &b| a.max(b.abs()))
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn structure(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vector::zeros(self.dim),
            std::cmp::Ordering::Less => self.upper[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[pair_index(self.dim, j, i)],
        }
    }

    /// Single structure constant `c_{ij}^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> f64 {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 0.0,
            std::cmp::Ordering::Less => self.upper[pair_index(self.dim, i, j)][k],
            std::cmp::Ordering::Greater => -self.upper[pair_index(self.dim, j, i)][k],
        }
    }

    /// Nonzero `(i, j, k, c)` entries with `i < j`, in index order.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = &self.upper[pair_index(self.dim, i, j)];
                for k in 0..self.dim {
                    if v[k] != 0.0 {
                        out.push((i, j, k, v[k]));
                    }
                }
            }
        }
        out
    }

    pub fn check_vector(&self, x: &Vector) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `[X, Y] = sum x_i y_j c_{ij}^k e_k`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.br(x, y))
    }

    /// Unchecked bracket for internal use.
    pub(crate) fn br(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let w = x[i] * y[j] - x[j] * y[i];
                if w != 0.0 {
                    out.axpy(w, &self.upper[pair_index(n, i, j)], 1.0);
                }
            }
        }
        out
    }

    /// Matrix of `ad X`; column `j` is `[X, e_j]`.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.br(x, &linalg::unit(n, j));
            m.set_column(j, &col);
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            m.set_column(j, &self.structure(i, j));
        }
        m
    }

    /// Max over basis triples of the Euclidean norm of the Jacobiator.
    pub fn jacobi_defect(&self) -> f64 {
        let n = self.dim;
        let basis: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.br(&basis[i], &self.structure(j, k));
                    let b = self.br(&basis[k], &self.structure(i, j));
                    let c = self.br(&basis[j], &self.structure(k, i));
                    worst = worst.max((a + b + c).norm());
                }
            }
        }
        worst
    }

    /// Kernel of the stacked adjoint matrices.
    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim;
        let mut stacked = Matrix::zeros(n * n, n);
        for i in 0..n {
            stacked
                .view_mut((i * n, 0), (n, n))
                .copy_from(&self.ad_basis(i));
        }
        let kernel = linalg::null_space_scaled(&stacked, self.max_constant());
        SubspaceBasis::from_raw(n, linalg::canonical_basis(&kernel, n))
    }

    /// `g^0 = g`, `g^i = [g, g^{i-1}]` until the series vanishes or stabilizes.
    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let n = self.dim;
        let generators: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        series_from(self, &generators, SubspaceBasis::full(n))
    }

    /// Span of `[X, Y]` over all `X` in `a` and `Y` in `b`.
    pub fn bracket_span(&self, a: &[Vector], b: &[Vector]) -> SubspaceBasis {
        let mut products = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                products.push(self.br(x, y));
            }
        }
        let size = |vs: &[Vector]| vs.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let scale = self.max_constant() * size(a) * size(b);
        SubspaceBasis::span_scaled(self.dim, &products, scale)
    }

    pub fn derived_algebra(&self) -> SubspaceBasis {
        let n = self.dim;
        let basis: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        self.bracket_span(&basis, &basis)
    }

    pub fn is_subalgebra(&self, h: &SubspaceBasis) -> bool {
        h.contains_subspace(&self.bracket_span(h.vectors(), h.vectors()))
    }

    /// `[e_i, h] ⊆ h` for every basis vector.
    pub fn is_ideal(&self, h: &SubspaceBasis) -> bool {
        let n = self.dim;
        let basis: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        h.contains_subspace(&self.bracket_span(&basis, h.vectors()))
    }

    /// `{X : [X, h] ⊆ h}` as a linear kernel problem.
    pub fn normalizer(&self, h: &SubspaceBasis) -> SubspaceBasis {
        let n = self.dim;
        let q = h.orthonormal_matrix();
        let proj_out = Matrix::identity(n, n) - &q * q.transpose();
        let k = h.rank().max(1);
        let mut stacked = Matrix::zeros(n * k, n);
        for (b, v) in h.vectors().iter().enumerate() {
            // [X, v] = -ad(v) X
            let block = &proj_out * self.ad(v);
            stacked.view_mut((b * n, 0), (n, n)).copy_from(&block);
        }
        let size = h.vectors().iter().map(|v| v.norm()).fold(0.0, f64::max);
        let kernel = linalg::null_space_scaled(&stacked, self.max_constant() * size);
        SubspaceBasis::from_raw(n, linalg::canonical_basis(&kernel, n))
    }

    /// Cartan test: `h` nilpotent and self-normalizing.
    pub fn is_cartan(&self, h: &SubspaceBasis) -> Result<CartanVerdict> {
        if !self.is_subalgebra(h) {
            return Err(Error::NotSubalgebra);
        }
        let restricted = series_from(self, h.vectors(), h.clone());
        let normalizer = self.normalizer(h);
        let self_normalizing = normalizer.equals(h);
        Ok(CartanVerdict {
            nilpotent: restricted.class.is_some(),
            self_normalizing,
            normalizer_dim: normalizer.rank(),
        })
    }

    /// `B(X, Y) = tr(ad X ad Y)` on the basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// Nondegeneracy of the Killing form after normalizing by its largest entry.
    pub fn is_semisimple(&self) -> bool {
        let b = self.killing_form();
        let scale = linalg::max_abs(&b);
        if scale == 0.0 {
            return false;
        }
        (b / scale).determinant().abs() > 1e-9
    }

    /// Structure constants in the new basis `f_i = sum_a p[(a, i)] e_a`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim;
        if p.nrows() != n || p.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.nrows(),
            });
        }
        let lu = p.clone().lu();
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i).into_owned()).collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.br(&cols[i], &cols[j]);
                let coords = lu
                    .solve(&b)
                    .ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
                for k in 0..n {
                    if coords[k] != 0.0 {
                        entries.push((i, j, k, coords[k]));
                    }
                }
            }
        }
        Self::from_brackets_unchecked(n, Some(self.names.clone()), entries)
    }

    /// `self ⊕ other` with the second summand's basis following the first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim;
        let mut entries = self.nonzero_constants();
        entries.extend(
            other
                .nonzero_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i + n, j + n, k + n, c)),
        );
        Self::from_brackets_unchecked(n + other.dim, None, entries)
            .expect("direct sum indices in range")
    }

    /// Skew-adjointness of every `ad(e_i)` with respect to `g`.
    pub fn biinvariance_check(&self, g: &InnerProduct) -> Verdict {
        let n = self.dim;
        let basis: Vec<Vector> = (0..n).map(|i| linalg::unit(n, i)).collect();
        let mut worst = 0.0_f64;
        let mut witness = None;
        for i in 0..n {
            for j in 0..n {
                let xy = self.structure(i, j);
                for k in 0..n {
                    let xz = self.structure(i, k);
                    let r = (g.inner(&xy, &basis[k]) + g.inner(&basis[j], &xz)).abs();
                    if r > worst {
                        worst = r;
                        witness = Some(vec![i, j, k]);
                    }
                }
            }
        }
        let scale = 1.0 + self.max_constant() * g.max_entry();
        let holds = worst <= 1e-9 * scale;
        Verdict {
            holds,
            residual: worst,
            witness: if holds { None } else { witness },
        }
    }

    /// `h^⊥` with respect to `g`, with `dim h + dim h^⊥ = n`.
    pub fn orthogonal_complement(&self, g: &InnerProduct, h: &SubspaceBasis) -> SubspaceBasis {
        orthogonal_complement(g, h)
    }
}

/// `h^⊥` with respect to `g`.
pub fn orthogonal_complement(g: &InnerProduct, h: &SubspaceBasis) -> SubspaceBasis {
    let n = g.dim();
    if h.rank() == 0 {
        return SubspaceBasis::full(n);
    }
    let mut rows = Matrix::zeros(h.rank(), n);
    for (b, v) in h.vectors().iter().enumerate() {
        rows.set_row(b, &(g.gram() * v).transpose());
    }
    let kernel = linalg::null_space(&rows);
    SubspaceBasis::from_raw(n, linalg::canonical_basis(&kernel, n))
}

fn series_from(alg: &LieAlgebra, generators: &[Vector], start: SubspaceBasis) -> LowerCentralSeries {
    let mut terms = vec![start];
    loop {
        let last = terms.last().expect("series is never empty");
        if last.rank() == 0 {
            let class = terms.len() - 1;
            return LowerCentralSeries {
                terms,
                class: Some(class),
            };
        }
        let next = alg.bracket_span(generators, last.vectors());
        if next.rank() == last.rank() {
            return LowerCentralSeries { terms, class: None };
        }
        terms.push(next);
    }
}

/// The lower central series and the nilpotency class, if any.
#[derive(Debug, Clone)]
pub struct LowerCentralSeries {
    pub terms: Vec<SubspaceBasis>,
    /// First `i` with `g^i = 0`; `None` when the series stabilizes at a nonzero term.
    pub class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(SubspaceBasis::rank).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanVerdict {
    pub nilpotent: bool,
    pub self_normalizing: bool,
    pub normalizer_dim: usize,
}

impl CartanVerdict {
    pub fn holds(&self) -> bool {
        self.nilpotent && self.self_normalizing
    }
}

/// Outcome of a structural check: whether it holds, the worst residual, and the
/// basis indices (0-based) witnessing a failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub residual: f64,
    pub witness: Option<Vec<usize>>,
}

/// A linearly independent list of vectors spanning a subspace of `R^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    /// Validates linear independence of the supplied vectors.
    pub fn new(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let r = linalg::rank(&linalg::columns(&vectors, ambient));
        if r != vectors.len() {
            return Err(Error::LinearlyDependent {
                rank: r,
                count: vectors.len(),
            });
        }
        Ok(Self { ambient, vectors })
    }

    pub(crate) fn from_raw(ambient: usize, vectors: Vec<Vector>) -> Self {
        Self { ambient, vectors }
    }

    /// Basis of the span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        Self::span_scaled(ambient, vectors, 0.0)
    }

    /// As [`SubspaceBasis::span`], treating vectors that are rounding noise
    /// relative to `scale` as zero.
    pub fn span_scaled(ambient: usize, vectors: &[Vector], scale: f64) -> Self {
        let cs = linalg::column_space_scaled(&linalg::columns(vectors, ambient), scale);
        Self::from_raw(ambient, linalg::canonical_basis(&cs, ambient))
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_raw(ambient, (0..ambient).map(|i| linalg::unit(ambient, i)).collect())
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_raw(ambient, Vec::new())
    }

    /// Span of the given basis vectors (0-based indices).
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut vs = Vec::new();
        for &i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: ambient,
                });
            }
            vs.push(linalg::unit(ambient, i));
        }
        Self::new(ambient, vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Euclidean-orthonormal basis as matrix columns.
    pub fn orthonormal_matrix(&self) -> Matrix {
        let cs = linalg::column_space(&linalg::columns(&self.vectors, self.ambient));
        linalg::columns(&cs, self.ambient)
    }

    /// Euclidean distance from `v` to the subspace.
    pub fn distance(&self, v: &Vector) -> f64 {
        let q = self.orthonormal_matrix();
        (v - &q * (q.transpose() * v)).norm()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.distance(v) <= RANK_TOL * v.norm().max(1.0)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        if other.rank() == 0 {
            return true;
        }
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        linalg::rank(&linalg::columns(&all, self.ambient)) == self.rank()
    }

    pub fn equals(&self, other: &SubspaceBasis) -> bool {
        self.rank() == other.rank() && self.contains_subspace(other)
    }
}

/// Positive-definite Gram matrix of a left-invariant metric.
#[derive(Debug, Clone)]
pub struct InnerProduct {
    gram: Matrix,
    chol: Cholesky<f64, Dyn>,
}

impl PartialEq for InnerProduct {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}

impl InnerProduct {
    pub fn new(gram: Matrix) -> Result<Self> {
        if gram.nrows() != gram.ncols() || gram.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: gram.nrows(),
                found: gram.ncols(),
            });
        }
        let scale = linalg::max_abs(&gram).max(1.0);
        let asymmetry = linalg::max_abs(&(&gram - gram.transpose()));
        if asymmetry > 1e-12 * scale {
            return Err(Error::MetricNotSymmetric { asymmetry });
        }
        let gram = (&gram + gram.transpose()) * 0.5;
        let eig = gram.clone().symmetric_eigen();
        let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        let max = eig.eigenvalues.iter().copied().fold(0.0, |a: f64, b| a.max(b.abs()));
        if !(min > 1e-9 * max.max(1e-300)) {
            return Err(Error::MetricNotPositiveDefinite {
                min_eigenvalue: min,
            });
        }
        let chol = Cholesky::new(gram.clone()).ok_or(Error::MetricNotPositiveDefinite {
            min_eigenvalue: min,
        })?;
        Ok(Self { gram, chol })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n, n)).expect("identity is positive definite")
    }

    pub fn diagonal(d: &[f64]) -> Result<Self> {
        Self::new(Matrix::from_diagonal(&Vector::from_column_slice(d)))
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn max_entry(&self) -> f64 {
        linalg::max_abs(&self.gram)
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> f64 {
        x.dot(&(&self.gram * y))
    }

    pub fn norm_sq(&self, x: &Vector) -> f64 {
        self.inner(x, x)
    }

    pub fn norm(&self, x: &Vector) -> f64 {
        self.norm_sq(x).max(0.0).sqrt()
    }

    /// Solves `G x = rhs`.
    pub fn solve(&self, rhs: &Vector) -> Vector {
        self.chol.solve(rhs)
    }

    /// A `g`-orthonormal basis of the subspace.
    pub fn orthonormalize(&self, vectors: &[Vector]) -> Vec<Vector> {
        linalg::gram_schmidt(vectors, &self.gram)
    }

    /// Block-diagonal metric `self ⊕ other`.
    pub fn direct_sum(&self, other: &InnerProduct) -> InnerProduct {
        let (n, m) = (self.dim(), other.dim());
        let mut g = Matrix::zeros(n + m, n + m);
        g.view_mut((0, 0), (n, n)).copy_from(&self.gram);
        g.view_mut((n, n), (m, m)).copy_from(&other.gram);
        InnerProduct::new(g).expect("direct sum of positive-definite metrics")
    }
}
