//! Almost complex and almost contact structures, their slot-wise lifts, and the
//! contact-metric and K-contact tests.

use rand::Rng;

use crate::algebra::{InnerProduct, SubspaceBasis};
use crate::error::{Error, Result};
use crate::geometry::{Geometry, SubmanifoldSplit};
use crate::lift::{LiftedAlgebra, MatrixElement};
use crate::linalg::{self, Matrix, Vector};
use crate::sampling;

const STRUCTURE_TOL: f64 = 1e-10;

/// Residuals of `J^2 + Id` and of `g(J., J.) - g(., .)` over basis pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianVerdict {
    pub square_residual: f64,
    pub compatibility_residual: f64,
    pub holds: bool,
}

pub fn hermitian_check(g: &InnerProduct, j: &Matrix) -> Result<HermitianVerdict> {
    let n = g.dim();
    if j.nrows() != n || j.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: j.nrows(),
        });
    }
    let square_residual = linalg::max_abs(&(j * j + Matrix::identity(n, n)));
    let compat = j.transpose() * g.gram() * j - g.gram();
    let compatibility_residual = linalg::max_abs(&compat);
    let scale = 1.0 + linalg::max_abs(j).powi(2) * g.max_entry().max(1.0);
    Ok(HermitianVerdict {
        square_residual,
        compatibility_residual,
        holds: square_residual <= STRUCTURE_TOL * scale
            && compatibility_residual <= STRUCTURE_TOL * scale,
    })
}

/// A g-compatible almost complex structure.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostComplexStructure {
    matrix: Matrix,
}

impl AlmostComplexStructure {
    /// Rejects maps that are not Hermitian for `g`.
    pub fn new(g: &InnerProduct, matrix: Matrix) -> Result<Self> {
        let v = hermitian_check(g, &matrix)?;
        if v.square_residual > STRUCTURE_TOL * (1.0 + linalg::max_abs(&matrix).powi(2)) {
            return Err(Error::InvalidComplexStructure {
                reason: "J^2 != -Id",
                residual: v.square_residual,
            });
        }
        if !v.holds {
            return Err(Error::InvalidComplexStructure {
                reason: "J is not compatible with the metric",
                residual: v.compatibility_residual,
            });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        &self.matrix * x
    }

    /// `J̄`: `J` in every slot.
    pub fn lift(&self, a: &MatrixElement) -> MatrixElement {
        a.map(|v| self.apply(v))
    }

    /// `A_C`: `J` applied to the first column.
    pub fn ac_col(&self, a: &MatrixElement) -> MatrixElement {
        MatrixElement::new(self.apply(&a.x11), a.x12.clone(), self.apply(&a.x21), a.x22.clone())
    }

    /// `A_R`: `J` applied to the first row.
    pub fn ac_row(&self, a: &MatrixElement) -> MatrixElement {
        MatrixElement::new(self.apply(&a.x11), self.apply(&a.x12), a.x21.clone(), a.x22.clone())
    }

    /// `JX = PX + FX` with `PX` tangent and `FX` normal.
    pub fn pf_decompose(
        &self,
        g: &InnerProduct,
        split: &SubmanifoldSplit,
        x: &Vector,
    ) -> Result<(Vector, Vector)> {
        split.check_tangent(g, x)?;
        let jx = self.apply(x);
        let p = split.tangent_part(g, &jx);
        let f = jx - &p;
        Ok((p, f))
    }

    /// Slot-wise `P̄A` and `F̄A`.
    pub fn lifted_pf(
        &self,
        g: &InnerProduct,
        split: &SubmanifoldSplit,
        a: &MatrixElement,
    ) -> Result<(MatrixElement, MatrixElement)> {
        let n = a.dim();
        let mut p = MatrixElement::zeros(n);
        let mut f = MatrixElement::zeros(n);
        for s in 0..4 {
            let (ps, fs) = self.pf_decompose(g, split, a.slot(s))?;
            *p.slot_mut(s) = ps;
            *f.slot_mut(s) = fs;
        }
        Ok((p, f))
    }
}

/// Distribution of `g(JX,Y) / (|JX||Y|)` over sampled unit `X, Y` in `m`, and
/// the largest gap between the base value and the matching lifted value
/// `<J̄A,B> / sum |JA_s||B_s|` built from the same directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlantStats {
    pub samples: usize,
    pub min_cos: f64,
    pub max_cos: f64,
    pub mean_cos: f64,
    pub lifted_residual: f64,
}

impl SlantStats {
    /// Angles in radians, from the extreme cosines.
    pub fn angle_range(&self) -> (f64, f64) {
        (self.max_cos.clamp(-1.0, 1.0).acos(), self.min_cos.clamp(-1.0, 1.0).acos())
    }
}

pub fn slant_angle<R: Rng + ?Sized>(
    lift: &LiftedAlgebra,
    j: &AlmostComplexStructure,
    m: &SubspaceBasis,
    samples: usize,
    rng: &mut R,
) -> Result<SlantStats> {
    let g = lift.base().metric();
    if m.rank() == 0 {
        return Err(Error::Invalid("slant angle needs a nonzero subspace".into()));
    }
    if samples == 0 {
        return Err(Error::Invalid("slant angle needs at least one sample".into()));
    }
    let basis = g.orthonormalize(m.vectors());
    let mut stats = SlantStats {
        samples,
        min_cos: f64::INFINITY,
        max_cos: f64::NEG_INFINITY,
        mean_cos: 0.0,
        lifted_residual: 0.0,
    };
    for _ in 0..samples {
        let x = sampling::unit_in(rng, g, &basis);
        let y = sampling::unit_in(rng, g, &basis);
        let jx = j.apply(&x);
        let c = g.inner(&jx, &y) / (g.norm(&jx) * g.norm(&y));
        stats.min_cos = stats.min_cos.min(c);
        stats.max_cos = stats.max_cos.max(c);
        stats.mean_cos += c / samples as f64;
        let a = MatrixElement::from_slots(std::array::from_fn(|_| &x * rng.gen_range(0.2..2.0)));
        let b = MatrixElement::from_slots(std::array::from_fn(|_| &y * rng.gen_range(0.2..2.0)));
        let ja = j.lift(&a);
        let denom: f64 = (0..4).map(|s| g.norm(ja.slot(s)) * g.norm(b.slot(s))).sum();
        let lifted = lift.inner(&ja, &b) / denom;
        stats.lifted_residual = stats.lifted_residual.max((lifted - c).abs());
    }
    Ok(stats)
}

/// Factor in front of `η([X,Y])` in the left-invariant exterior derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExteriorConvention {
    /// `dη(X,Y) = -η([X,Y])`.
    Unit,
    /// `dη(X,Y) = -½ η([X,Y])`.
    Half,
}

/// `(φ, ξ, η)` on the Lie algebra; `φ` acts on columns.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostContactStructure {
    pub phi: Matrix,
    pub xi: Vector,
    pub eta: Vector,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactAxioms {
    /// `|φξ|`
    pub phi_xi: f64,
    /// `max |φ² + Id - ξ ⊗ η|`
    pub phi_squared: f64,
    /// `|η(ξ) - 1|`
    pub eta_xi: f64,
    /// `max |g(φX,φY) - g(X,Y) + η(X)η(Y)|` over basis pairs
    pub metric: f64,
}

impl ContactAxioms {
    pub fn max(&self) -> f64 {
        self.phi_xi.max(self.phi_squared).max(self.eta_xi).max(self.metric)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContactVerdict {
    pub axioms: ContactAxioms,
    /// `max |Φ(e_i,e_j) - dη(e_i,e_j)|` with `Φ(X,Y) = g(X,φY)`.
    pub contact_metric_residual: f64,
    pub contact_metric_witness: Option<(usize, usize)>,
    /// `max_i |∇_{e_i} ξ + φ e_i|`.
    pub k_contact_residual: f64,
    pub k_contact_witness: Option<usize>,
}

impl AlmostContactStructure {
    pub fn new(phi: Matrix, xi: Vector, eta: Vector) -> Result<Self> {
        let n = xi.len();
        if phi.nrows() != n || phi.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: phi.nrows(),
            });
        }
        if eta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: eta.len(),
            });
        }
        Ok(Self { phi, xi, eta })
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }

    pub fn axioms(&self, g: &InnerProduct) -> ContactAxioms {
        let n = self.dim();
        let phi_xi = (&self.phi * &self.xi).norm();
        let phi_squared = linalg::max_abs(
            &(&self.phi * &self.phi + Matrix::identity(n, n) - &self.xi * self.eta.transpose()),
        );
        let eta_xi = (self.eta.dot(&self.xi) - 1.0).abs();
        let lhs = self.phi.transpose() * g.gram() * &self.phi;
        let rhs = g.gram() - &self.eta * self.eta.transpose();
        let metric = linalg::max_abs(&(lhs - rhs));
        ContactAxioms {
            phi_xi,
            phi_squared,
            eta_xi,
            metric,
        }
    }

    /// Contact-metric and K-contact residuals.
    pub fn check(&self, geom: &Geometry, convention: ExteriorConvention) -> Result<ContactVerdict> {
        let n = geom.dim();
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            });
        }
        let factor = match convention {
            ExteriorConvention::Unit => 1.0,
            ExteriorConvention::Half => 0.5,
        };
        let e = |i| linalg::unit(n, i);
        let mut cm = 0.0_f64;
        let mut cm_w = None;
        for i in 0..n {
            for j in 0..n {
                let big_phi = geom.inner(&e(i), &(&self.phi * e(j)));
                let d_eta = -factor * self.eta.dot(&geom.alg().structure(i, j));
                let r = (big_phi - d_eta).abs();
                if r > cm {
                    cm = r;
                    cm_w = Some((i, j));
                }
            }
        }
        let mut kc = 0.0_f64;
        let mut kc_w = None;
        for i in 0..n {
            let r = geom.norm(&(geom.nabla(&e(i), &self.xi) + &self.phi * e(i)));
            if r > kc {
                kc = r;
                kc_w = Some(i);
            }
        }
        Ok(ContactVerdict {
            axioms: self.axioms(geom.metric()),
            contact_metric_residual: cm,
            contact_metric_witness: cm_w,
            k_contact_residual: kc,
            k_contact_witness: kc_w,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieAlgebra;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rot2() -> Matrix {
        Matrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])
    }

    fn j4() -> Matrix {
        // Je1 = e2, Je3 = e4.
        let mut j = Matrix::zeros(4, 4);
        j[(1, 0)] = 1.0;
        j[(0, 1)] = -1.0;
        j[(3, 2)] = 1.0;
        j[(2, 3)] = -1.0;
        j
    }

    fn v(c: &[f64]) -> Vector {
        Vector::from_column_slice(c)
    }

    #[test]
    fn hermitian_examples() {
        assert!(hermitian_check(&InnerProduct::identity(2), &rot2()).unwrap().holds);
        let bad = hermitian_check(&InnerProduct::identity(2), &Matrix::from_diagonal(&v(&[1.0, -1.0]))).unwrap();
        assert!(!bad.holds);
        assert_abs_diff_eq!(bad.square_residual, 2.0);
        assert!(hermitian_check(&InnerProduct::identity(4), &j4()).unwrap().holds);
        // J^2 = -Id but not isometric for a skewed metric.
        let g = InnerProduct::diagonal(&[1.0, 4.0]).unwrap();
        let v = hermitian_check(&g, &rot2()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.square_residual, 0.0);
        assert!(matches!(
            AlmostComplexStructure::new(&g, rot2()),
            Err(Error::InvalidComplexStructure { .. })
        ));
    }

    #[test]
    fn lift_and_rows_columns() {
        let j = AlmostComplexStructure::new(&InnerProduct::identity(2), rot2()).unwrap();
        let a = MatrixElement::uniform(&v(&[1.0, 0.0]));
        assert_eq!(j.lift(&a), MatrixElement::uniform(&v(&[0.0, 1.0])));
        assert_eq!(j.lift(&j.lift(&a)), -a);
        let j = AlmostComplexStructure::new(&InnerProduct::identity(4), j4()).unwrap();
        let e = |i| linalg::unit(4, i);
        let a = MatrixElement::new(e(0), e(1), e(2), e(3));
        assert_eq!(j.ac_col(&a), MatrixElement::new(e(1), e(1), e(3), e(3)));
        assert_eq!(j.ac_row(&a), MatrixElement::new(e(1), -e(0), e(2), e(3)));
        assert_eq!(j.ac_row(&a).transpose(), j.ac_col(&a.transpose()));
    }

    #[test]
    fn pf_examples() {
        let g = InnerProduct::identity(4);
        let alg = LieAlgebra::abelian(4);
        let j = AlmostComplexStructure::new(&g, j4()).unwrap();
        let e = |i| linalg::unit(4, i);
        let inv = SubmanifoldSplit::new(&alg, &g, SubspaceBasis::coordinate(4, &[0, 1]).unwrap()).unwrap();
        let (p, f) = j.pf_decompose(&g, &inv, &e(0)).unwrap();
        assert_eq!(p, e(1));
        assert_eq!(f, Vector::zeros(4));
        let anti = SubmanifoldSplit::new(&alg, &g, SubspaceBasis::coordinate(4, &[0, 2]).unwrap()).unwrap();
        let (p, f) = j.pf_decompose(&g, &anti, &e(2)).unwrap();
        assert_eq!(p, Vector::zeros(4));
        assert_eq!(f, e(3));
        assert!(j.pf_decompose(&g, &anti, &e(1)).is_err());
    }

    #[test]
    fn slant_examples() {
        let g = InnerProduct::identity(4);
        let lift = LiftedAlgebra::lift(&LieAlgebra::abelian(4), &g).unwrap();
        let j = AlmostComplexStructure::new(&g, j4()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let anti = SubspaceBasis::coordinate(4, &[0, 2]).unwrap();
        let s = slant_angle(&lift, &j, &anti, 50, &mut rng).unwrap();
        assert!(s.max_cos.abs() < 1e-12 && s.min_cos.abs() < 1e-12);
        assert!(s.lifted_residual < 1e-12);
        let inv = SubspaceBasis::coordinate(4, &[0, 1]).unwrap();
        let s = slant_angle(&lift, &j, &inv, 200, &mut rng).unwrap();
        assert!(s.max_cos > 0.9 && s.min_cos < -0.9);
        assert!(s.lifted_residual < 1e-12);
    }

    fn h3_contact() -> (Geometry, AlmostContactStructure) {
        let alg = LieAlgebra::from_brackets(3, None, [(0, 1, 2, 1.0)]).unwrap();
        let geom = Geometry::new(alg, InnerProduct::identity(3)).unwrap();
        let phi = Matrix::from_row_slice(3, 3, &[0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let acs = AlmostContactStructure::new(phi, v(&[0.0, 0.0, 1.0]), v(&[0.0, 0.0, 1.0])).unwrap();
        (geom, acs)
    }

    #[test]
    fn heisenberg_contact() {
        let (geom, acs) = h3_contact();
        assert_eq!(acs.axioms(geom.metric()).max(), 0.0);
        let v = acs.check(&geom, ExteriorConvention::Unit).unwrap();
        assert_abs_diff_eq!(v.contact_metric_residual, 0.0);
        assert_abs_diff_eq!(v.k_contact_residual, 0.5, epsilon = 1e-15);
        assert_eq!(v.k_contact_witness, Some(0));
        let half = acs.check(&geom, ExteriorConvention::Half).unwrap();
        assert_abs_diff_eq!(half.contact_metric_residual, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn abelian_contact_fails() {
        let (_, acs) = h3_contact();
        let geom = Geometry::new(LieAlgebra::abelian(3), InnerProduct::identity(3)).unwrap();
        let v = acs.check(&geom, ExteriorConvention::Unit).unwrap();
        assert_abs_diff_eq!(v.contact_metric_residual, 1.0);
    }
}
