//! Two-step nilpotent metric Lie algebras: the center split, the operators
//! `j(Z)`, the Heisenberg-type test, closed-form connection, and generators.

use crate::algebra::{orthogonal_complement, InnerProduct, LieAlgebra, SubspaceBasis};
use crate::error::{Error, Result};
use crate::geometry::{ConnectionCoefficients, Geometry};
use crate::lift::MatrixElement;
use crate::linalg::{self, Matrix, Vector};

const CENTRAL_TOL: f64 = 1e-9;

/// True for abelian and 2-step nilpotent algebras.
pub fn is_two_step(alg: &LieAlgebra) -> bool {
    matches!(alg.lower_central_series().class, Some(c) if c <= 2)
}

/// `g = z ⊕ z^⊥` with g-orthonormal bases of both pieces.
#[derive(Debug, Clone)]
pub struct CenterSplit {
    z: SubspaceBasis,
    z_perp: SubspaceBasis,
    z_on: Vec<Vector>,
    perp_on: Vec<Vector>,
}

impl CenterSplit {
    pub fn new(alg: &LieAlgebra, g: &InnerProduct) -> Self {
        let z = alg.center();
        let z_perp = orthogonal_complement(g, &z);
        let z_on = g.orthonormalize(z.vectors());
        let perp_on = g.orthonormalize(z_perp.vectors());
        Self {
            z,
            z_perp,
            z_on,
            perp_on,
        }
    }

    pub fn of(geom: &Geometry) -> Self {
        Self::new(geom.alg(), geom.metric())
    }

    pub fn center(&self) -> &SubspaceBasis {
        &self.z
    }

    pub fn complement(&self) -> &SubspaceBasis {
        &self.z_perp
    }

    pub fn center_orthonormal(&self) -> &[Vector] {
        &self.z_on
    }

    pub fn complement_orthonormal(&self) -> &[Vector] {
        &self.perp_on
    }

    pub fn center_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.len());
        for f in &self.z_on {
            out.axpy(g.inner(f, v), f, 1.0);
        }
        out
    }

    pub fn complement_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        v - self.center_part(g, v)
    }

    pub fn in_center(&self, g: &InnerProduct, v: &Vector) -> bool {
        g.norm(&self.complement_part(g, v)) <= CENTRAL_TOL * (1.0 + g.norm(v))
    }

    pub fn in_complement(&self, g: &InnerProduct, v: &Vector) -> bool {
        g.norm(&self.center_part(g, v)) <= CENTRAL_TOL * (1.0 + g.norm(v))
    }
}

/// `j(Z)` on `z^⊥`, stored in the g-orthonormal basis `F` of `z^⊥` as
/// `M[(a, b)] = g(j(Z) f_b, f_a) = g([f_b, f_a], Z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct JOperator {
    pub z: Vector,
    basis: Vec<Vector>,
    pub matrix: Matrix,
}

impl JOperator {
    /// Applies `j(Z)` to a vector of `z^⊥` given in algebra coordinates.
    /// Components along the center are ignored.
    pub fn apply(&self, g: &InnerProduct, x: &Vector) -> Vector {
        let k = self.basis.len();
        let coords = Vector::from_fn(k, |a, _| g.inner(&self.basis[a], x));
        let image = &self.matrix * coords;
        let mut out = Vector::zeros(x.len());
        for (a, f) in self.basis.iter().enumerate() {
            out.axpy(image[a], f, 1.0);
        }
        out
    }

    /// `max |M + Mᵀ|`.
    pub fn skew_defect(&self) -> f64 {
        linalg::max_abs(&(&self.matrix + self.matrix.transpose()))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn require_two_step(alg: &LieAlgebra) -> Result<()> {
    if is_two_step(alg) {
        Ok(())
    } else {
        Err(Error::NotTwoStep)
    }
}

pub fn j_map(geom: &Geometry, split: &CenterSplit, z: &Vector) -> Result<JOperator> {
    let alg = geom.alg();
    alg.check_vector(z)?;
    require_two_step(alg)?;
    let g = geom.metric();
    if !split.in_center(g, z) {
        let residual = g.norm(&split.complement_part(g, z));
        return Err(Error::NotCentral { residual });
    }
    let f = split.complement_orthonormal();
    let k = f.len();
    let matrix = Matrix::from_fn(k, k, |a, b| g.inner(&alg.br(&f[b], &f[a]), z));
    Ok(JOperator {
        z: z.clone(),
        basis: f.to_vec(),
        matrix,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HTypeStatus {
    Holds,
    Fails,
    /// `z^⊥ = 0`: nothing to check.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HTypeVerdict {
    pub status: HTypeStatus,
    /// Worst `‖j(Z)² + |Z|² Id‖_F / |Z|²` over the candidates.
    pub defect: f64,
    /// The candidate attaining the worst defect, on failure.
    pub witness: Option<Vector>,
}

pub const H_TYPE_TOL: f64 = 1e-9;

/// Tests `j(Z)² = -|Z|² Id` on the canonical center basis and on normalized
/// pairwise sums of orthonormal center vectors.
pub fn is_h_type(geom: &Geometry, split: &CenterSplit) -> Result<HTypeVerdict> {
    require_two_step(geom.alg())?;
    if split.complement().rank() == 0 || split.center().rank() == 0 {
        return Ok(HTypeVerdict {
            status: HTypeStatus::Vacuous,
            defect: 0.0,
            witness: None,
        });
    }
    let mut candidates: Vec<Vector> = split.center().vectors().to_vec();
    let on = split.center_orthonormal();
    for a in 0..on.len() {
        for b in a + 1..on.len() {
            candidates.push((&on[a] + &on[b]) / std::f64::consts::SQRT_2);
            candidates.push((&on[a] - &on[b]) / std::f64::consts::SQRT_2);
        }
    }
    let mut worst = 0.0_f64;
    let mut witness = None;
    for z in candidates {
        let d = h_type_defect(geom, split, &z)?;
        if d > worst {
            worst = d;
            witness = Some(z);
        }
    }
    let holds = worst <= H_TYPE_TOL;
    Ok(HTypeVerdict {
        status: if holds { HTypeStatus::Holds } else { HTypeStatus::Fails },
        defect: worst,
        witness: if holds { None } else { witness },
    })
}

/// `‖j(Z)² + |Z|² Id‖_F / |Z|²` for one central `Z`.
pub fn h_type_defect(geom: &Geometry, split: &CenterSplit, z: &Vector) -> Result<f64> {
    let j = j_map(geom, split, z)?;
    let zz = geom.metric().norm_sq(z);
    if zz == 0.0 {
        return Ok(0.0);
    }
    let k = j.dim();
    Ok((&j.matrix * &j.matrix + Matrix::identity(k, k) * zz).norm() / zz)
}

/// `h_{2m+1}`: `[e_{2i-1}, e_{2i}] = e_{2m+1}` with the identity metric.
pub fn gen_heisenberg(m: usize) -> Result<(LieAlgebra, InnerProduct)> {
    if m == 0 {
        return Err(Error::Invalid("Heisenberg algebra needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    let entries = (0..m).map(|i| (2 * i, 2 * i + 1, n - 1, 1.0));
    Ok((LieAlgebra::from_brackets(n, None, entries)?, InnerProduct::identity(n)))
}

/// Built-in Clifford data for `gen_h_type`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HTypePreset {
    /// One rotation on R², giving the 3-dimensional Heisenberg algebra.
    Complex,
    /// Left multiplication by `i, j, k` on the quaternions, giving dimension 7.
    Quaternion,
}

impl HTypePreset {
    pub fn maps(self) -> Vec<Matrix> {
        match self {
            HTypePreset::Complex => vec![Matrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])],
            HTypePreset::Quaternion => {
                // Basis (1, i, j, k); column c is the image of basis vector c.
                let li = Matrix::from_row_slice(
                    4,
                    4,
                    &[
                        0.0, -1.0, 0.0, 0.0, //
                        1.0, 0.0, 0.0, 0.0, //
                        0.0, 0.0, 0.0, -1.0, //
                        0.0, 0.0, 1.0, 0.0,
                    ],
                );
                let lj = Matrix::from_row_slice(
                    4,
                    4,
                    &[
                        0.0, 0.0, -1.0, 0.0, //
                        0.0, 0.0, 0.0, 1.0, //
                        1.0, 0.0, 0.0, 0.0, //
                        0.0, -1.0, 0.0, 0.0,
                    ],
                );
                let lk = Matrix::from_row_slice(
                    4,
                    4,
                    &[
                        0.0, 0.0, 0.0, -1.0, //
                        0.0, 0.0, -1.0, 0.0, //
                        0.0, 1.0, 0.0, 0.0, //
                        1.0, 0.0, 0.0, 0.0,
                    ],
                );
                vec![li, lj, lk]
            }
        }
    }
}

/// Builds `R^{2p} ⊕ R^q` with `[X,Y] = Σ_a <J_a X, Y> z_a` and the identity
/// metric. The maps must be skew, square to `-Id` and pairwise anticommute.
pub fn gen_h_type(maps: &[Matrix]) -> Result<(LieAlgebra, InnerProduct)> {
    if maps.is_empty() {
        return Err(Error::Invalid("at least one map is required".into()));
    }
    let k = maps[0].nrows();
    if k == 0 || k % 2 != 0 {
        return Err(Error::Invalid(format!("maps must act on an even-dimensional space, got {k}")));
    }
    for m in maps {
        if m.nrows() != k || m.ncols() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: m.nrows(),
            });
        }
    }
    let id = Matrix::identity(k, k);
    for (a, ja) in maps.iter().enumerate() {
        let skew = linalg::max_abs(&(ja + ja.transpose()));
        let square = linalg::max_abs(&(ja * ja + &id));
        let residual = skew.max(square);
        if residual > 1e-10 {
            return Err(Error::CliffordRelation {
                first: a,
                second: a,
                residual,
            });
        }
        for (b, jb) in maps.iter().enumerate().skip(a + 1) {
            let residual = linalg::max_abs(&(ja * jb + jb * ja));
            if residual > 1e-10 {
                return Err(Error::CliffordRelation {
                    first: a,
                    second: b,
                    residual,
                });
            }
        }
    }
    let q = maps.len();
    let mut entries = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for (a, ja) in maps.iter().enumerate() {
                // <J_a f_i, f_j> = (J_a)_{ji}
                let c = ja[(j, i)];
                if c != 0.0 {
                    entries.push((i, j, k + a, c));
                }
            }
        }
    }
    let n = k + q;
    Ok((LieAlgebra::from_brackets(n, None, entries)?, InnerProduct::identity(n)))
}

/// `∇_X Y = ½[X,Y]`, `∇_X Z = ∇_Z X = -½ j(Z)X`, `∇_Z Z' = 0`, assembled per
/// basis pair from the center split.
pub fn two_step_connection(geom: &Geometry, split: &CenterSplit) -> Result<ConnectionCoefficients> {
    require_two_step(geom.alg())?;
    let n = geom.dim();
    let g = geom.metric();
    let mut js = Vec::with_capacity(n);
    let mut perp = Vec::with_capacity(n);
    for i in 0..n {
        let e = linalg::unit(n, i);
        let zc = split.center_part(g, &e);
        perp.push(&e - &zc);
        js.push(j_map(geom, split, &zc)?);
    }
    Ok(ConnectionCoefficients::from_fn(n, |i, j| {
        geom.bracket(&perp[i], &perp[j]) * 0.5
            - js[j].apply(g, &perp[i]) * 0.5
            - js[i].apply(g, &perp[j]) * 0.5
    }))
}

/// `‖[X, j(Z)X] - |X|² Z‖`.
pub fn bracket_j_residual(geom: &Geometry, split: &CenterSplit, x: &Vector, z: &Vector) -> Result<f64> {
    let g = geom.metric();
    if !split.in_complement(g, x) {
        return Err(Error::Invalid("X must lie in the complement of the center".into()));
    }
    let j = j_map(geom, split, z)?;
    let lhs = geom.bracket(x, &j.apply(g, x));
    Ok(geom.norm(&(lhs - z * g.norm_sq(x))))
}

/// Slot-wise `j̄(B)A = [[j(B11)A11, j(B12)A12], [j(B21)A21, j(B22)A22]]`.
pub fn lifted_j(
    geom: &Geometry,
    split: &CenterSplit,
    b: &MatrixElement,
    a: &MatrixElement,
) -> Result<MatrixElement> {
    let g = geom.metric();
    let mut out = MatrixElement::zeros(geom.dim());
    for s in 0..4 {
        if !split.in_complement(g, a.slot(s)) {
            return Err(Error::Invalid(format!(
                "slot {} of A is not orthogonal to the center",
                crate::lift::SLOT_NAMES[s]
            )));
        }
        *out.slot_mut(s) = j_map(geom, split, b.slot(s))?.apply(g, a.slot(s));
    }
    Ok(out)
}
