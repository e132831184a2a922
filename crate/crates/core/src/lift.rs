//! The 4n-dimensional algebra of 2x2 arrays over a metric Lie algebra.
//!
//! An element is written `[[X, W], [Z, Y]]` with slots `x11 = X`, `x12 = W`,
//! `x21 = Z`, `x22 = Y`. Bracket, metric and connection act slot by slot, so the
//! lift is the direct sum of four copies of the base. In flat coordinates slot
//! `s` (in the order 11, 12, 21, 22) occupies the block `s*n .. (s+1)*n`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{orthogonal_complement, InnerProduct, LieAlgebra, SubspaceBasis};
use crate::error::{Error, Result};
use crate::geometry::{Geometry, SubmanifoldSplit};
use crate::linalg::Vector;

pub const SLOT_NAMES: [&str; 4] = ["11", "12", "21", "22"];

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixElement {
    pub x11: Vector,
    pub x12: Vector,
    pub x21: Vector,
    pub x22: Vector,
}

impl MatrixElement {
    pub fn new(x11: Vector, x12: Vector, x21: Vector, x22: Vector) -> Self {
        Self { x11, x12, x21, x22 }
    }

    pub fn zeros(n: usize) -> Self {
        Self::uniform(&Vector::zeros(n))
    }

    /// Every slot equal to `v`.
    pub fn uniform(v: &Vector) -> Self {
        Self::new(v.clone(), v.clone(), v.clone(), v.clone())
    }

    pub fn diagonal(x: &Vector, y: &Vector) -> Self {
        let z = Vector::zeros(x.len());
        Self::new(x.clone(), z.clone(), z, y.clone())
    }

    /// A single nonzero slot (`slot` in 0..4, order 11, 12, 21, 22).
    pub fn single(slot: usize, v: &Vector) -> Self {
        let mut m = Self::zeros(v.len());
        *m.slot_mut(slot) = v.clone();
        m
    }

    pub fn from_slots(slots: [Vector; 4]) -> Self {
        let [a, b, c, d] = slots;
        Self::new(a, b, c, d)
    }

    pub fn dim(&self) -> usize {
        self.x11.len()
    }

    pub fn slots(&self) -> [&Vector; 4] {
        [&self.x11, &self.x12, &self.x21, &self.x22]
    }

    pub fn slot(&self, s: usize) -> &Vector {
        self.slots()[s]
    }

    pub fn slot_mut(&mut self, s: usize) -> &mut Vector {
        match s {
            0 => &mut self.x11,
            1 => &mut self.x12,
            2 => &mut self.x21,
            3 => &mut self.x22,
            _ => panic!("slot index {s} out of range"),
        }
    }

    pub fn map(&self, f: impl Fn(&Vector) -> Vector) -> Self {
        Self::new(f(&self.x11), f(&self.x12), f(&self.x21), f(&self.x22))
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn(&Vector, &Vector) -> Vector) -> Self {
        Self::new(
            f(&self.x11, &other.x11),
            f(&self.x12, &other.x12),
            f(&self.x21, &other.x21),
            f(&self.x22, &other.x22),
        )
    }

    /// Swaps the off-diagonal slots.
    pub fn transpose(&self) -> Self {
        Self::new(self.x11.clone(), self.x21.clone(), self.x12.clone(), self.x22.clone())
    }

    /// `[[Y, -W], [-Z, X]]`.
    pub fn star(&self) -> Self {
        Self::new(self.x22.clone(), -&self.x12, -&self.x21, self.x11.clone())
    }

    pub fn to_flat(&self) -> Vector {
        let n = self.dim();
        let mut v = Vector::zeros(4 * n);
        for (s, slot) in self.slots().iter().enumerate() {
            v.rows_mut(s * n, n).copy_from(slot);
        }
        v
    }

    pub fn from_flat(n: usize, v: &Vector) -> Result<Self> {
        if v.len() != 4 * n {
            return Err(Error::DimensionMismatch {
                expected: 4 * n,
                found: v.len(),
            });
        }
        Ok(Self::new(
            v.rows(0, n).into_owned(),
            v.rows(n, n).into_owned(),
            v.rows(2 * n, n).into_owned(),
            v.rows(3 * n, n).into_owned(),
        ))
    }

    /// Largest absolute coordinate over all slots.
    pub fn amax(&self) -> f64 {
        self.slots().iter().map(|s| s.amax()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.amax() <= tol
    }
}

impl Add for &MatrixElement {
    type Output = MatrixElement;
    fn add(self, rhs: &MatrixElement) -> MatrixElement {
        self.zip_map(rhs, |a, b| a + b)
    }
}

impl Add for MatrixElement {
    type Output = MatrixElement;
    fn add(self, rhs: MatrixElement) -> MatrixElement {
        &self + &rhs
    }
}

impl Sub for &MatrixElement {
    type Output = MatrixElement;
    fn sub(self, rhs: &MatrixElement) -> MatrixElement {
        self.zip_map(rhs, |a, b| a - b)
    }
}

impl Sub for MatrixElement {
    type Output = MatrixElement;
    fn sub(self, rhs: MatrixElement) -> MatrixElement {
        &self - &rhs
    }
}

impl Neg for &MatrixElement {
    type Output = MatrixElement;
    fn neg(self) -> MatrixElement {
        self.map(|a| -a)
    }
}

impl Neg for MatrixElement {
    type Output = MatrixElement;
    fn neg(self) -> MatrixElement {
        -&self
    }
}

impl Mul<f64> for &MatrixElement {
    type Output = MatrixElement;
    fn mul(self, k: f64) -> MatrixElement {
        self.map(|a| a * k)
    }
}

impl Mul<f64> for MatrixElement {
    type Output = MatrixElement;
    fn mul(self, k: f64) -> MatrixElement {
        &self * k
    }
}

/// The lifted algebra over a base geometry.
#[derive(Debug, Clone)]
pub struct LiftedAlgebra {
    base: Geometry,
}

impl LiftedAlgebra {
    pub fn new(base: Geometry) -> Self {
        Self { base }
    }

    pub fn lift(alg: &LieAlgebra, g: &InnerProduct) -> Result<Self> {
        Ok(Self::new(Geometry::new(alg.clone(), g.clone())?))
    }

    pub fn base(&self) -> &Geometry {
        &self.base
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        4 * self.base.dim()
    }

    pub fn check(&self, a: &MatrixElement) -> Result<()> {
        if a.dim() != self.base_dim() || a.slots().iter().any(|s| s.len() != a.dim()) {
            return Err(Error::DimensionMismatch {
                expected: self.base_dim(),
                found: a.slots().iter().map(|s| s.len()).find(|&l| l != self.base_dim()).unwrap_or(a.dim()),
            });
        }
        Ok(())
    }

    fn g(&self, x: &Vector, y: &Vector) -> f64 {
        self.base.inner(x, y)
    }

    /// `g(X,V) + g(W,K) + g(Z,N) + g(Y,M)`.
    pub fn inner(&self, a: &MatrixElement, b: &MatrixElement) -> f64 {
        (0..4).map(|s| self.g(a.slot(s), b.slot(s))).sum()
    }

    pub fn norm(&self, a: &MatrixElement) -> f64 {
        self.inner(a, a).max(0.0).sqrt()
    }

    pub fn bracket(&self, a: &MatrixElement, b: &MatrixElement) -> MatrixElement {
        a.zip_map(b, |x, y| self.base.bracket(x, y))
    }

    /// Slot-wise `∇̄_A B`.
    pub fn connection(&self, a: &MatrixElement, b: &MatrixElement) -> MatrixElement {
        a.zip_map(b, |x, y| self.base.nabla(x, y))
    }

    /// Slot-wise `R̄(A,B)C`.
    pub fn curvature(&self, a: &MatrixElement, b: &MatrixElement, c: &MatrixElement) -> MatrixElement {
        MatrixElement::from_slots(std::array::from_fn(|s| {
            self.base.curvature(a.slot(s), b.slot(s), c.slot(s))
        }))
    }

    /// Slot-wise sectional curvature, laid out as the 2x2 array `[[K11, K12], [K21, K22]]`.
    pub fn sectional(&self, a: &MatrixElement, b: &MatrixElement) -> Result<[[f64; 2]; 2]> {
        let mut k = [0.0; 4];
        for (s, slot) in k.iter_mut().enumerate() {
            *slot = self.base.sectional(a.slot(s), b.slot(s))?;
        }
        Ok([[k[0], k[1]], [k[2], k[3]]])
    }

    /// `O(A) = g(X,Y) - g(Z,W)`.
    pub fn o_functional(&self, a: &MatrixElement) -> f64 {
        self.g(&a.x11, &a.x22) - self.g(&a.x21, &a.x12)
    }

    /// `(A,B) = g(X,V) g(Y,M) - g(W,K) g(Z,N)`.
    pub fn det_form(&self, a: &MatrixElement, b: &MatrixElement) -> f64 {
        self.g(&a.x11, &b.x11) * self.g(&a.x22, &b.x22)
            - self.g(&a.x12, &b.x12) * self.g(&a.x21, &b.x21)
    }

    /// Both diagonals g-orthogonal, each pairing measured relative to the slot norms.
    pub fn is_cross(&self, a: &MatrixElement, tol: f64) -> bool {
        let rel = |x: &Vector, y: &Vector| {
            self.g(x, y).abs() <= tol * (1.0 + self.base.norm(x) * self.base.norm(y))
        };
        rel(&a.x11, &a.x22) && rel(&a.x21, &a.x12)
    }

    /// Slot-wise second fundamental form for a split of the base.
    pub fn lifted_h(
        &self,
        split: &SubmanifoldSplit,
        a: &MatrixElement,
        b: &MatrixElement,
    ) -> Result<MatrixElement> {
        let mut out = MatrixElement::zeros(self.base_dim());
        for s in 0..4 {
            *out.slot_mut(s) = self.base.second_fundamental_form(split, a.slot(s), b.slot(s))?;
        }
        Ok(out)
    }

    /// Basis labels `E11(e1), ..., E22(en)` in flat order.
    pub fn basis_names(&self) -> Vec<String> {
        let names = self.base.alg().names();
        SLOT_NAMES
            .iter()
            .flat_map(|s| names.iter().map(move |e| format!("E{s}({e})")))
            .collect()
    }

    /// The lift as an ordinary 4n-dimensional Lie algebra.
    pub fn as_lie_algebra(&self) -> LieAlgebra {
        let n = self.base_dim();
        let base = self.base.alg().nonzero_constants();
        let entries = (0..4).flat_map(|s| {
            base.iter()
                .map(move |&(i, j, k, c)| (s * n + i, s * n + j, s * n + k, c))
        });
        LieAlgebra::from_brackets_unchecked(4 * n, Some(self.basis_names()), entries)
            .expect("block indices in range")
    }

    /// Block-diagonal lifted metric.
    pub fn metric(&self) -> InnerProduct {
        let g = self.base.metric();
        g.direct_sum(g).direct_sum(&g.direct_sum(g))
    }

    /// The lift with its own Levi-Civita connection, computed from scratch.
    pub fn to_geometry(&self) -> Result<Geometry> {
        Geometry::new(self.as_lie_algebra(), self.metric())
    }

    pub fn classify(&self, a: &MatrixElement, dec: &TypeDecomposition) -> LiftType {
        LiftType::ALL
            .into_iter()
            .find(|&t| self.belongs_to(a, dec, t))
            .unwrap_or(LiftType::None)
    }

    pub fn belongs_to(&self, a: &MatrixElement, dec: &TypeDecomposition, t: LiftType) -> bool {
        let g = self.base.metric();
        let h = |v: &Vector| dec.in_h(g, v);
        let n = |v: &Vector| dec.in_n(g, v);
        let (x, w, z, y) = (&a.x11, &a.x12, &a.x21, &a.x22);
        match t {
            LiftType::C1 => h(x) && h(w) && n(z) && n(y),
            LiftType::C1Swapped => n(x) && n(w) && h(z) && h(y),
            LiftType::C2 => h(x) && h(y) && n(w) && n(z),
            LiftType::C3 => h(x) && h(z) && n(w) && n(y),
            LiftType::C3Swapped => n(x) && n(z) && h(w) && h(y),
            LiftType::None => !LiftType::ALL.iter().any(|&t| self.belongs_to(a, dec, t)),
        }
    }

    /// Splits `A` into a piece over `h`, a piece over `n` and a mixed remainder.
    ///
    /// Slots are projected onto `h` and `n`. An element lying entirely over `h`
    /// (resp. `n`) is returned whole as the first (resp. second) part; otherwise
    /// the `h`-projection is the first part and the `n`-projection is the mixed
    /// remainder.
    pub fn decompose(&self, a: &MatrixElement, dec: &TypeDecomposition) -> LiftDecomposition {
        let g = self.base.metric();
        let hp = a.map(|v| dec.h_part(g, v));
        let np = a - &hp;
        let n = self.base_dim();
        let tol = 1e-9 * (1.0 + a.amax());
        if np.is_zero(tol) {
            LiftDecomposition {
                h: a.clone(),
                n: MatrixElement::zeros(n),
                c: MatrixElement::zeros(n),
            }
        } else if hp.is_zero(tol) {
            LiftDecomposition {
                h: MatrixElement::zeros(n),
                n: a.clone(),
                c: MatrixElement::zeros(n),
            }
        } else {
            LiftDecomposition {
                h: hp,
                n: MatrixElement::zeros(n),
                c: np,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LiftDecomposition {
    pub h: MatrixElement,
    pub n: MatrixElement,
    pub c: MatrixElement,
}

/// Row, diagonal and column families of lifted elements induced by `g = h ⊕ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftType {
    /// First row in `h`, second row in `n`.
    C1,
    /// First row in `n`, second row in `h`.
    C1Swapped,
    /// Diagonal in `h`, anti-diagonal in `n`.
    C2,
    /// First column in `h`, second column in `n`.
    C3,
    /// First column in `n`, second column in `h`.
    C3Swapped,
    None,
}

impl LiftType {
    pub const ALL: [LiftType; 5] = [
        LiftType::C1,
        LiftType::C1Swapped,
        LiftType::C2,
        LiftType::C3,
        LiftType::C3Swapped,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LiftType::C1 => "C1",
            LiftType::C1Swapped => "C1-swapped",
            LiftType::C2 => "C2",
            LiftType::C3 => "C3",
            LiftType::C3Swapped => "C3-swapped",
            LiftType::None => "none",
        }
    }
}

/// A subalgebra `h` and its g-orthogonal complement `n`.
#[derive(Debug, Clone)]
pub struct TypeDecomposition {
    h: SubspaceBasis,
    n: SubspaceBasis,
    h_on: Vec<Vector>,
    n_on: Vec<Vector>,
}

const MEMBER_TOL: f64 = 1e-9;

impl TypeDecomposition {
    pub fn new(alg: &LieAlgebra, g: &InnerProduct, h: SubspaceBasis) -> Result<Self> {
        if h.ambient() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: h.ambient(),
            });
        }
        if !alg.is_subalgebra(&h) {
            return Err(Error::NotSubalgebra);
        }
        let n = orthogonal_complement(g, &h);
        let h_on = g.orthonormalize(h.vectors());
        let n_on = g.orthonormalize(n.vectors());
        Ok(Self { h, n, h_on, n_on })
    }

    pub fn h(&self) -> &SubspaceBasis {
        &self.h
    }

    pub fn n(&self) -> &SubspaceBasis {
        &self.n
    }

    pub fn h_orthonormal(&self) -> &[Vector] {
        &self.h_on
    }

    pub fn n_orthonormal(&self) -> &[Vector] {
        &self.n_on
    }

    pub fn h_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.len());
        for f in &self.h_on {
            out.axpy(g.inner(f, v), f, 1.0);
        }
        out
    }

    pub fn n_part(&self, g: &InnerProduct, v: &Vector) -> Vector {
        v - self.h_part(g, v)
    }

    pub fn in_h(&self, g: &InnerProduct, v: &Vector) -> bool {
        g.norm(&self.n_part(g, v)) <= MEMBER_TOL * (1.0 + g.norm(v))
    }

    pub fn in_n(&self, g: &InnerProduct, v: &Vector) -> bool {
        g.norm(&self.h_part(g, v)) <= MEMBER_TOL * (1.0 + g.norm(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{unit, Matrix};
    use approx::{assert_abs_diff_eq, AbsDiffEq};

    impl AbsDiffEq for MatrixElement {
        type Epsilon = f64;
        fn default_epsilon() -> f64 {
            f64::EPSILON
        }
        fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
            (self - other).amax() <= epsilon
        }
    }

    fn e(i: usize) -> Vector {
        unit(3, i)
    }

    fn h3() -> LiftedAlgebra {
        let alg = LieAlgebra::from_brackets(3, None, [(0, 1, 2, 1.0)]).unwrap();
        LiftedAlgebra::lift(&alg, &InnerProduct::identity(3)).unwrap()
    }

    fn m(a: Vector, b: Vector, c: Vector, d: Vector) -> MatrixElement {
        MatrixElement::new(a, b, c, d)
    }

    #[test]
    fn dimensions_and_names() {
        let l = h3();
        assert_eq!(l.dim(), 12);
        let alg = l.as_lie_algebra();
        assert_eq!(alg.dim(), 12);
        assert_eq!(alg.names()[0], "E11(e1)");
        assert_eq!(alg.names()[5], "E12(e3)");
        assert_eq!(alg.jacobi_defect(), 0.0);
        // Block-assembly oracle: four copies of [e1,e2] = e3.
        for s in 0..4 {
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        assert_eq!(
                            alg.constant(3 * s + i, 3 * s + j, 3 * s + k),
                            l.base().alg().constant(i, j, k)
                        );
                    }
                }
            }
        }
        assert_eq!(alg.constant(0, 4, 5), 0.0);
        assert_eq!(l.metric().gram(), &Matrix::identity(12, 12));
    }

    #[test]
    fn inner_examples() {
        let l = h3();
        let a = MatrixElement::single(0, &e(0));
        assert_eq!(l.inner(&a, &a), 1.0);
        assert_eq!(l.inner(&a, &MatrixElement::single(3, &e(0))), 0.0);
        let all = m(e(0), e(1), e(2), e(0));
        assert_eq!(l.inner(&all, &all), 4.0);
    }

    #[test]
    fn bracket_and_connection_examples() {
        let l = h3();
        let b = l.bracket(&MatrixElement::single(0, &e(0)), &MatrixElement::single(0, &e(1)));
        assert_eq!(b, MatrixElement::single(0, &e(2)));
        let b = l.bracket(&MatrixElement::single(0, &e(0)), &MatrixElement::single(3, &e(1)));
        assert_eq!(b, MatrixElement::zeros(3));
        let c = l.connection(&MatrixElement::single(0, &e(0)), &MatrixElement::single(0, &e(1)));
        assert_abs_diff_eq!(c.x11, e(2) * 0.5, epsilon = 1e-15);
    }

    #[test]
    fn transpose_and_star() {
        let z = Vector::zeros(3);
        let a = m(e(0), e(1), e(2), z.clone());
        assert_eq!(a.transpose(), m(e(0), e(2), e(1), z.clone()));
        assert_eq!(a.star(), m(z, -e(1), -e(2), e(0)));
        assert_eq!(a.star().star(), a);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn o_functional_and_det_form() {
        let l = h3();
        assert_eq!(l.o_functional(&MatrixElement::diagonal(&e(0), &e(0))), 1.0);
        assert_eq!(l.o_functional(&MatrixElement::zeros(3)), 0.0);
        let d = MatrixElement::diagonal(&e(0), &e(1));
        assert_eq!(l.det_form(&d, &d), 1.0);
        let row0 = m(Vector::zeros(3), Vector::zeros(3), e(1), e(2));
        let any = m(e(0), e(1), e(2), e(0));
        assert_eq!(l.det_form(&row0, &any), 0.0);
        let x = Vector::from_vec(vec![1.0, 2.0, 0.0]);
        let y = Vector::from_vec(vec![0.5, -1.0, 3.0]);
        let d = MatrixElement::diagonal(&x, &y);
        assert_abs_diff_eq!(l.det_form(&d, &d.star()), x.dot(&y).powi(2), epsilon = 1e-12);
    }

    #[test]
    fn cross_examples() {
        let l = h3();
        assert!(l.is_cross(&m(e(0), e(0), e(1), e(1)), 1e-9));
        assert!(!l.is_cross(&MatrixElement::diagonal(&e(0), &e(0)), 1e-9));
    }

    fn dec() -> (LiftedAlgebra, TypeDecomposition) {
        let l = h3();
        let d = TypeDecomposition::new(
            l.base().alg(),
            l.base().metric(),
            SubspaceBasis::coordinate(3, &[2]).unwrap(),
        )
        .unwrap();
        (l, d)
    }

    #[test]
    fn classify_examples() {
        let (l, d) = dec();
        assert_eq!(l.classify(&m(e(2), e(2), e(0), e(1)), &d), LiftType::C1);
        assert_eq!(l.classify(&m(e(2), e(0), e(1), e(2)), &d), LiftType::C2);
        assert_eq!(l.classify(&m(e(2), e(0), e(2), e(1)), &d), LiftType::C3);
        assert_eq!(l.classify(&m(e(0), e(0), e(2), e(2)), &d), LiftType::C1Swapped);
        assert_eq!(l.classify(&m(e(0), e(2), e(1), e(2)), &d), LiftType::C3Swapped);
        assert_eq!(l.classify(&m(e(0), e(0), e(0), e(0)), &d), LiftType::None);
        assert!(TypeDecomposition::new(
            l.base().alg(),
            l.base().metric(),
            SubspaceBasis::coordinate(3, &[0, 1]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn decompose_examples() {
        let (l, d) = dec();
        let a = m(e(2), e(0), e(1), e(2));
        let p = l.decompose(&a, &d);
        let z = Vector::zeros(3);
        assert_eq!(p.h, m(e(2), z.clone(), z.clone(), e(2)));
        assert_eq!(p.n, MatrixElement::zeros(3));
        assert_eq!(p.c, m(z.clone(), e(0), e(1), z.clone()));
        let over_h = MatrixElement::uniform(&e(2));
        assert_eq!(l.decompose(&over_h, &d).h, over_h);
        let over_n = m(e(0), e(1), e(0), e(1));
        let p = l.decompose(&over_n, &d);
        assert_eq!(p.n, over_n);
        assert_eq!(p.h, MatrixElement::zeros(3));
    }

    #[test]
    fn lifted_sectional_and_curvature() {
        let l = h3();
        let k = l.sectional(&MatrixElement::uniform(&e(0)), &MatrixElement::uniform(&e(1))).unwrap();
        for row in k {
            for v in row {
                assert_abs_diff_eq!(v, -0.75, epsilon = 1e-15);
            }
        }
        let a = m(e(0), e(0), e(1), e(1));
        let b = m(e(2), e(1), e(2), e(0));
        let k = l.sectional(&a, &b).unwrap();
        assert_abs_diff_eq!(k[0][0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(k[0][1], -0.75, epsilon = 1e-15);
        assert!(l.sectional(&a, &a).is_err());
        let r = l.curvature(&MatrixElement::uniform(&e(0)), &MatrixElement::uniform(&e(1)), &MatrixElement::uniform(&e(1)));
        assert_abs_diff_eq!(r.x12, e(0) * -0.75, epsilon = 1e-15);
    }

    #[test]
    fn lifted_second_fundamental_form() {
        let l = h3();
        let split = SubmanifoldSplit::for_geometry(l.base(), SubspaceBasis::coordinate(3, &[0, 2]).unwrap()).unwrap();
        let a = MatrixElement::uniform(&e(0));
        assert_abs_diff_eq!(l.lifted_h(&split, &a, &a).unwrap(), MatrixElement::zeros(3), epsilon = 1e-15);
        let h = l.lifted_h(&split, &a, &MatrixElement::uniform(&e(2))).unwrap();
        assert_abs_diff_eq!(h, MatrixElement::uniform(&(e(1) * -0.5)), epsilon = 1e-15);
        assert!(l.lifted_h(&split, &a, &MatrixElement::uniform(&e(1))).is_err());
    }

    #[test]
    fn lifted_connection_matches_koszul_on_lift() {
        let l = h3();
        let geom = l.to_geometry().unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let a = MatrixElement::from_flat(3, &unit(12, i)).unwrap();
                let b = MatrixElement::from_flat(3, &unit(12, j)).unwrap();
                let slot = l.connection(&a, &b).to_flat();
                assert_abs_diff_eq!(slot, geom.connection().get(i, j).clone(), epsilon = 1e-14);
            }
        }
    }
}
