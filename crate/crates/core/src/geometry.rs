//! Left-invariant Riemannian geometry of a metric Lie algebra.
//!
//! For left-invariant fields the derivative terms of the Koszul formula drop
//! out, so the Levi-Civita connection is a finite table `∇_{e_i} e_j`. All
//! curvature and submanifold quantities are computed from that table.

use crate::algebra::{orthogonal_complement, InnerProduct, LieAlgebra, SubspaceBasis};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};

/// Sign convention for the `g([X,Y],Z)` term of the Koszul formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulConvention {
    /// `2g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`; the Levi-Civita connection.
    Standard,
    /// Same formula with `-g([X,Y],Z)`. Not torsion-free; kept for comparison only.
    NegatedBracket,
}

/// `gamma[i * n + j]` holds `∇_{e_i} e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionCoefficients {
    dim: usize,
    gamma: Vec<Vector>,
}

impl ConnectionCoefficients {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut gamma = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                gamma.push(f(i, j));
            }
        }
        Self { dim, gamma }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.gamma[i * self.dim + j]
    }

    /// `Γ_{ij}^k`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[i * self.dim + j][k]
    }

    /// `∇_X Y` for constant-coefficient fields.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim;
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = x[i] * y[j];
                if w != 0.0 {
                    out.axpy(w, &self.gamma[i * n + j], 1.0);
                }
            }
        }
        out
    }

    /// `max |Γ_{ij}^k - Γ_{ji}^k - c_{ij}^k|`.
    pub fn torsion_defect(&self, alg: &LieAlgebra) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let t = self.get(i, j) - self.get(j, i) - alg.structure(i, j);
                worst = worst.max(t.amax());
            }
        }
        worst
    }

    /// `max |g(∇_{e_i} e_j, e_k) + g(e_j, ∇_{e_i} e_k)|`.
    pub fn metric_defect(&self, g: &InnerProduct) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = g.inner(self.get(i, j), &linalg::unit(n, k))
                        + g.inner(&linalg::unit(n, j), self.get(i, k));
                    worst = worst.max(r.abs());
                }
            }
        }
        worst
    }

    pub fn max_difference(&self, other: &ConnectionCoefficients) -> f64 {
        self.gamma
            .iter()
            .zip(&other.gamma)
            .map(|(a, b)| (a - b).amax())
            .fold(0.0, f64::max)
    }
}

/// Solves the left-invariant Koszul system for every basis pair.
pub fn koszul_connection(
    alg: &LieAlgebra,
    g: &InnerProduct,
    convention: KoszulConvention,
) -> Result<ConnectionCoefficients> {
    let n = alg.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    let sign = match convention {
        KoszulConvention::Standard => 1.0,
        KoszulConvention::NegatedBracket => -1.0,
    };
    let gram = g.gram();
    // gb[(i,j)][k] = g([e_i, e_j], e_k)
    let gb: Vec<Vector> = (0..n * n)
        .map(|ij| gram * alg.structure(ij / n, ij % n))
        .collect();
    Ok(ConnectionCoefficients::from_fn(n, |i, j| {
        let rhs = Vector::from_fn(n, |k, _| {
            0.5 * (sign * gb[i * n + j][k] - gb[j * n + k][i] + gb[k * n + i][j])
        });
        g.solve(&rhs)
    }))
}

pub fn levi_civita(alg: &LieAlgebra, g: &InnerProduct) -> Result<ConnectionCoefficients> {
    koszul_connection(alg, g, KoszulConvention::Standard)
}

/// A metric Lie algebra with its Levi-Civita connection computed once.
#[derive(Debug, Clone)]
pub struct Geometry {
    alg: LieAlgebra,
    metric: InnerProduct,
    conn: ConnectionCoefficients,
}

impl Geometry {
    pub fn new(alg: LieAlgebra, metric: InnerProduct) -> Result<Self> {
        let conn = levi_civita(&alg, &metric)?;
        Ok(Self { alg, metric, conn })
    }

    pub fn alg(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn metric(&self) -> &InnerProduct {
        &self.metric
    }

    pub fn connection(&self) -> &ConnectionCoefficients {
        &self.conn
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.alg.br(x, y)
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> f64 {
        self.metric.inner(x, y)
    }

    pub fn norm(&self, x: &Vector) -> f64 {
        self.metric.norm(x)
    }

    pub fn nabla(&self, x: &Vector, y: &Vector) -> Vector {
        self.conn.apply(x, y)
    }

    /// `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_{[X,Y]} Z`.
    pub fn curvature(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = self.nabla(x, &self.nabla(y, z));
        let b = self.nabla(y, &self.nabla(x, z));
        let c = self.nabla(&self.bracket(x, y), z);
        a - b - c
    }

    /// `g(R(X,Y)Z, W)`.
    pub fn curvature_4(&self, x: &Vector, y: &Vector, z: &Vector, w: &Vector) -> f64 {
        self.inner(&self.curvature(x, y, z), w)
    }

    /// Sectional curvature of the plane spanned by `X` and `Y`.
    pub fn sectional(&self, x: &Vector, y: &Vector) -> Result<f64> {
        self.alg.check_vector(x)?;
        self.alg.check_vector(y)?;
        let xx = self.inner(x, x);
        let yy = self.inner(y, y);
        let xy = self.inner(x, y);
        let gram_det = xx * yy - xy * xy;
        if !(gram_det > 1e-12 * xx * yy) {
            return Err(Error::DegeneratePlane { gram_det });
        }
        Ok(self.curvature_4(x, y, y, x) / gram_det)
    }

    /// Sectional curvature of the coordinate plane `(e_i, e_j)`, 0-based.
    pub fn sectional_basis(&self, i: usize, j: usize) -> Result<f64> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, dim: n });
            }
        }
        self.sectional(&linalg::unit(n, i), &linalg::unit(n, j))
    }

    /// `h(X,Y)`: normal part of `∇_X Y`.
    pub fn second_fundamental_form(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
    ) -> Result<Vector> {
        split.check_tangent(&self.metric, x)?;
        split.check_tangent(&self.metric, y)?;
        Ok(split.normal_part(&self.metric, &self.nabla(x, y)))
    }

    /// Induced connection on the submanifold: tangential part of `∇_X Y`.
    pub fn tangential_connection(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
    ) -> Result<Vector> {
        split.check_tangent(&self.metric, x)?;
        split.check_tangent(&self.metric, y)?;
        Ok(split.tangent_part(&self.metric, &self.nabla(x, y)))
    }

    /// Normal connection `D_X ξ`: normal part of `∇_X ξ`.
    pub fn normal_connection(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        xi: &Vector,
    ) -> Result<Vector> {
        split.check_tangent(&self.metric, x)?;
        split.check_normal(&self.metric, xi)?;
        Ok(split.normal_part(&self.metric, &self.nabla(x, xi)))
    }

    /// Shape operator `A_ξ X = -(∇_X ξ)^T`.
    pub fn weingarten(&self, split: &SubmanifoldSplit, xi: &Vector, x: &Vector) -> Result<Vector> {
        split.check_tangent(&self.metric, x)?;
        split.check_normal(&self.metric, xi)?;
        Ok(-split.tangent_part(&self.metric, &self.nabla(x, xi)))
    }

    /// Max over an orthonormal tangent basis `Y` of `|<A_ξ X, Y> - <h(X,Y), ξ>|`.
    pub fn weingarten_duality_residual(
        &self,
        split: &SubmanifoldSplit,
        xi: &Vector,
        x: &Vector,
    ) -> Result<f64> {
        let a = self.weingarten(split, xi, x)?;
        let mut worst = 0.0_f64;
        for y in split.tangent_orthonormal() {
            let h = self.second_fundamental_form(split, x, y)?;
            worst = worst.max((self.inner(&a, y) - self.inner(&h, xi)).abs());
        }
        Ok(worst)
    }

    /// `(∇̄_X h)(Y,Z) = D_X h(Y,Z) - h(∇_X Y, Z) - h(Y, ∇_X Z)`.
    pub fn covariant_derivative_h(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector> {
        let hyz = self.second_fundamental_form(split, y, z)?;
        let d = self.normal_connection(split, x, &hyz)?;
        let nxy = self.tangential_connection(split, x, y)?;
        let nxz = self.tangential_connection(split, x, z)?;
        Ok(d - self.second_fundamental_form(split, &nxy, z)?
            - self.second_fundamental_form(split, y, &nxz)?)
    }

    /// Mean curvature vector: the trace of `h` over an orthonormal tangent basis,
    /// divided according to `divisor`.
    pub fn mean_curvature(&self, split: &SubmanifoldSplit, divisor: MeanCurvatureDivisor) -> Vector {
        let n = self.dim();
        let mut trace = Vector::zeros(n);
        for f in split.tangent_orthonormal() {
            trace += split.normal_part(&self.metric, &self.nabla(f, f));
        }
        let d = match divisor {
            MeanCurvatureDivisor::Submanifold => split.tangent().rank(),
            MeanCurvatureDivisor::Ambient => n,
        };
        if d == 0 {
            trace
        } else {
            trace / d as f64
        }
    }

    /// Curvature of the induced connection, `g(R^m(X,Y)Z, W)`.
    pub fn intrinsic_curvature_4(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
        z: &Vector,
        w: &Vector,
    ) -> Result<f64> {
        if !split.is_subalgebra() {
            return Err(Error::NotSubalgebra);
        }
        for v in [x, y, z, w] {
            split.check_tangent(&self.metric, v)?;
        }
        let nt = |a: &Vector, b: &Vector| split.tangent_part(&self.metric, &self.nabla(a, b));
        let r = nt(x, &nt(y, z)) - nt(y, &nt(x, z)) - nt(&self.bracket(x, y), z);
        Ok(self.inner(&r, w))
    }

    /// Residual of the Gauss equation for tangent `X, Y, Z, W`.
    pub fn gauss_residual(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
        z: &Vector,
        w: &Vector,
        orientation: GaussOrientation,
    ) -> Result<f64> {
        let intrinsic = self.intrinsic_curvature_4(split, x, y, z, w)?;
        let ambient = self.curvature_4(x, y, z, w);
        let hxz = self.second_fundamental_form(split, x, z)?;
        let hyw = self.second_fundamental_form(split, y, w)?;
        let hxw = self.second_fundamental_form(split, x, w)?;
        let hyz = self.second_fundamental_form(split, y, z)?;
        let correction = self.inner(&hxz, &hyw) - self.inner(&hxw, &hyz);
        let r = match orientation {
            GaussOrientation::AmbientEqualsIntrinsicPlusForm => ambient - (intrinsic + correction),
            GaussOrientation::IntrinsicEqualsAmbientPlusForm => intrinsic - (ambient + correction),
        };
        Ok(r.abs())
    }

    /// `‖∇_X Y + ∇_Y X - 2h(X,Y)‖` with `h` taken for the given split.
    pub fn symmetric_part_residual(
        &self,
        split: &SubmanifoldSplit,
        x: &Vector,
        y: &Vector,
    ) -> Result<f64> {
        let h = self.second_fundamental_form(split, x, y)?;
        let s = self.nabla(x, y) + self.nabla(y, x) - h * 2.0;
        Ok(self.norm(&s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanCurvatureDivisor {
    /// Divide the trace by the submanifold dimension.
    Submanifold,
    /// Divide by the ambient dimension.
    Ambient,
}

/// Which curvature is expressed through the other in the Gauss equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussOrientation {
    /// `R(X,Y;Z,W) = R^m(X,Y;Z,W) + <h(X,Z),h(Y,W)> - <h(X,W),h(Y,Z)>`; the correct one.
    AmbientEqualsIntrinsicPlusForm,
    /// The same right-hand side with the roles of the two curvatures exchanged.
    IntrinsicEqualsAmbientPlusForm,
}

/// Tangent space `m` and its `g`-orthogonal normal space.
#[derive(Debug, Clone)]
pub struct SubmanifoldSplit {
    tangent: SubspaceBasis,
    normal: SubspaceBasis,
    tangent_on: Vec<Vector>,
    normal_on: Vec<Vector>,
    subalgebra: bool,
}

/// Relative tolerance for tangency and normality of inputs.
const MEMBERSHIP_TOL: f64 = 1e-9;

impl SubmanifoldSplit {
    pub fn new(alg: &LieAlgebra, g: &InnerProduct, m: SubspaceBasis) -> Result<Self> {
        if m.ambient() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: m.ambient(),
            });
        }
        let normal = orthogonal_complement(g, &m);
        let tangent_on = g.orthonormalize(m.vectors());
        let normal_on = g.orthonormalize(normal.vectors());
        let subalgebra = alg.is_subalgebra(&m);
        Ok(Self {
            tangent: m,
            normal,
            tangent_on,
            normal_on,
            subalgebra,
        })
    }

    pub fn for_geometry(geom: &Geometry, m: SubspaceBasis) -> Result<Self> {
        Self::new(geom.alg(), geom.metric(), m)
    }

    /// `m = z^⊥`, the complement of the center.
    pub fn center_complement(geom: &Geometry) -> Result<Self> {
        let z = geom.alg().center();
        let zp = orthogonal_complement(geom.metric(), &z);
        Self::for_geometry(geom, zp)
    }

    pub fn tangent(&self) -> &SubspaceBasis {
        &self.tangent
    }

    pub fn normal(&self) -> &SubspaceBasis {
        &self.normal
    }

    pub fn tangent_orthonormal(&self) -> &[Vector] {
        &self.tangent_on
    }

    pub fn normal_orthonormal(&self) -> &[Vector] {
        &self.normal_on
    }

    pub fn is_subalgebra(&self) -> bool {
        self.subalgebra
    }

    pub fn tangent_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.len());
        for f in &self.tangent_on {
            out.axpy(g.inner(f, v), f, 1.0);
        }
        out
    }

    pub fn normal_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        v - self.tangent_part(g, v)
    }

    pub fn check_tangent(&self, g: &InnerProduct, v: &Vector) -> Result<()> {
        if v.len() != self.tangent.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.tangent.ambient(),
                found: v.len(),
            });
        }
        let residual = g.norm(&self.normal_part(g, v));
        if residual > MEMBERSHIP_TOL * (1.0 + g.norm(v)) {
            return Err(Error::NotTangent { residual });
        }
        Ok(())
    }

    pub fn check_normal(&self, g: &InnerProduct, v: &Vector) -> Result<()> {
        if v.len() != self.tangent.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.tangent.ambient(),
                found: v.len(),
            });
        }
        let residual = g.norm(&self.tangent_part(g, v));
        if residual > MEMBERSHIP_TOL * (1.0 + g.norm(v)) {
            return Err(Error::NotNormal { residual });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn e(i: usize) -> Vector {
        linalg::unit(3, i)
    }

    fn h3() -> Geometry {
        let alg = LieAlgebra::from_brackets(3, None, [(0, 1, 2, 1.0)]).unwrap();
        Geometry::new(alg, InnerProduct::identity(3)).unwrap()
    }

    /// Brute-force Koszul oracle: builds the full 3-index table
    /// `K_ijk = g(∇_{e_i} e_j, e_k)` from structure constants and solves with an
    /// explicit inverse, independent of `koszul_connection`.
    fn oracle_gamma(alg: &LieAlgebra, g: &InnerProduct, i: usize, j: usize) -> Vector {
        let n = alg.dim();
        let gm = g.gram();
        let gbr = |a: usize, b: usize, c: usize| -> f64 {
            (0..n)
                .map(|k| (0..n).map(|l| alg.constant(a, b, k) * gm[(k, l)] * if l == c { 1.0 } else { 0.0 }).sum::<f64>())
                .sum()
        };
        let rhs = Vector::from_fn(n, |k, _| 0.5 * (gbr(i, j, k) + gbr(k, i, j) + gbr(k, j, i)));
        gm.clone().try_inverse().unwrap() * rhs
    }

    #[test]
    fn heisenberg_connection_matches_oracle() {
        let geom = h3();
        let c = geom.connection();
        assert_abs_diff_eq!(c.get(0, 1).clone(), e(2) * 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c.get(1, 0).clone(), e(2) * -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c.get(0, 2).clone(), e(1) * -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c.get(1, 2).clone(), e(0) * 0.5, epsilon = 1e-15);
        for i in 0..3 {
            assert_abs_diff_eq!(c.get(i, i).clone(), Vector::zeros(3), epsilon = 1e-15);
            for j in 0..3 {
                let o = oracle_gamma(geom.alg(), geom.metric(), i, j);
                assert_abs_diff_eq!(c.get(i, j).clone(), o, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn scaled_heisenberg_connection() {
        let alg = LieAlgebra::from_brackets(3, None, [(0, 1, 2, 1.0)]).unwrap();
        let g = InnerProduct::diagonal(&[1.0, 1.0, 4.0]).unwrap();
        let geom = Geometry::new(alg.clone(), g.clone()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let o = oracle_gamma(&alg, &g, i, j);
                assert_abs_diff_eq!(geom.connection().get(i, j).clone(), o, epsilon = 1e-14);
            }
        }
        // ∇_{e1} e3 = -2 e2 once |e3|^2 = 4.
        assert_abs_diff_eq!(geom.connection().get(0, 2).clone(), e(1) * -2.0, epsilon = 1e-14);
        assert!(geom.connection().torsion_defect(&alg) < 1e-14);
        assert!(geom.connection().metric_defect(&g) < 1e-14);
    }

    #[test]
    fn abelian_is_flat() {
        let geom = Geometry::new(LieAlgebra::abelian(3), InnerProduct::identity(3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(geom.connection().get(i, j), &Vector::zeros(3));
            }
        }
        assert_eq!(geom.sectional(&e(0), &(e(1) + e(2))).unwrap(), 0.0);
    }

    #[test]
    fn negated_bracket_convention_has_torsion() {
        let geom = h3();
        let c = koszul_connection(geom.alg(), geom.metric(), KoszulConvention::NegatedBracket)
            .unwrap();
        assert!(c.torsion_defect(geom.alg()) > 0.5);
    }

    #[test]
    fn heisenberg_curvature_values() {
        let geom = h3();
        assert_abs_diff_eq!(geom.curvature(&e(0), &e(1), &e(1)), e(0) * -0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(geom.curvature_4(&e(0), &e(2), &e(2), &e(0)), 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(geom.sectional(&e(0), &e(1)).unwrap(), -0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(geom.sectional(&e(0), &e(2)).unwrap(), 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(geom.sectional(&e(1), &e(2)).unwrap(), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn degenerate_plane_rejected() {
        let geom = h3();
        assert!(matches!(
            geom.sectional(&e(0), &(e(0) * 2.0)),
            Err(Error::DegeneratePlane { .. })
        ));
    }

    fn split13(geom: &Geometry) -> SubmanifoldSplit {
        SubmanifoldSplit::for_geometry(geom, SubspaceBasis::coordinate(3, &[0, 2]).unwrap())
            .unwrap()
    }

    #[test]
    fn second_fundamental_form_values() {
        let geom = h3();
        let s = split13(&geom);
        assert!(s.is_subalgebra());
        assert_abs_diff_eq!(
            geom.second_fundamental_form(&s, &e(0), &e(2)).unwrap(),
            e(1) * -0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            geom.second_fundamental_form(&s, &e(0), &e(0)).unwrap(),
            Vector::zeros(3),
            epsilon = 1e-15
        );
        assert!(matches!(
            geom.second_fundamental_form(&s, &e(1), &e(0)),
            Err(Error::NotTangent { .. })
        ));
    }

    #[test]
    fn weingarten_values() {
        let geom = h3();
        let s = split13(&geom);
        // A_{e2} e1 = -(∇_{e1} e2)^T = -1/2 e3, dual to <h(e1,e3), e2> = -1/2.
        assert_abs_diff_eq!(geom.weingarten(&s, &e(1), &e(0)).unwrap(), e(2) * -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(geom.weingarten(&s, &e(1), &e(2)).unwrap(), e(0) * -0.5, epsilon = 1e-15);
        assert!(geom.weingarten_duality_residual(&s, &e(1), &e(0)).unwrap() < 1e-15);
        assert!(matches!(geom.weingarten(&s, &e(0), &e(0)), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn covariant_derivative_of_h() {
        let geom = h3();
        let s = split13(&geom);
        for (x, y, z) in [(0, 0, 0), (2, 0, 0), (0, 0, 2)] {
            let v = geom.covariant_derivative_h(&s, &e(x), &e(y), &e(z)).unwrap();
            assert_abs_diff_eq!(v, Vector::zeros(3), epsilon = 1e-15);
        }
    }

    #[test]
    fn mean_curvature_values() {
        let geom = h3();
        let s = split13(&geom);
        assert!(geom.mean_curvature(&s, MeanCurvatureDivisor::Submanifold).norm() < 1e-15);
        let s12 = SubmanifoldSplit::for_geometry(&geom, SubspaceBasis::coordinate(3, &[0, 1]).unwrap()).unwrap();
        assert!(geom.mean_curvature(&s12, MeanCurvatureDivisor::Submanifold).norm() < 1e-15);
    }

    #[test]
    fn gauss_equation_heisenberg() {
        let geom = h3();
        let s = split13(&geom);
        let args = (&e(0), &e(2), &e(2), &e(0));
        let std = geom
            .gauss_residual(&s, args.0, args.1, args.2, args.3, GaussOrientation::AmbientEqualsIntrinsicPlusForm)
            .unwrap();
        assert!(std < 1e-15);
        let swapped = geom
            .gauss_residual(&s, args.0, args.1, args.2, args.3, GaussOrientation::IntrinsicEqualsAmbientPlusForm)
            .unwrap();
        assert_abs_diff_eq!(swapped, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn symmetric_part_examples() {
        let geom = h3();
        let s = SubmanifoldSplit::center_complement(&geom).unwrap();
        assert_abs_diff_eq!(geom.symmetric_part_residual(&s, &e(0), &e(1)).unwrap(), 1.0, epsilon = 1e-15);
        assert!(geom.symmetric_part_residual(&s, &e(0), &e(0)).unwrap() < 1e-15);
    }
}
