//! Identity catalog: every checked statement with its trial generator.

use crate::algebra::{InnerProduct, LieAlgebra, SubspaceBasis};
use crate::complex::{AlmostComplexStructure, AlmostContactStructure};
use crate::error::Result;
use crate::geometry::{koszul_connection, ConnectionCoefficients, Geometry, KoszulConvention, SubmanifoldSplit};
use crate::lift::{LiftedAlgebra, MatrixElement, TypeDecomposition, SLOT_NAMES};
use crate::linalg::{self, Matrix, Vector};
use crate::nilpotent::{is_h_type, is_two_step, CenterSplit, HTypeVerdict};
use crate::report::{Entry, Trial};
use crate::specfile::Extras;

pub mod complex;
pub mod geometry;
pub mod matrix;
pub mod nilpotent;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Geometry,
    Matrix,
    Complex,
    Nilpotent,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Geometry, Suite::Matrix, Suite::Complex, Suite::Nilpotent];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Geometry => "geometry",
            Suite::Matrix => "matrix",
            Suite::Complex => "complex",
            Suite::Nilpotent => "nilpotent",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        match s {
            "all" => Some(Self::ALL.to_vec()),
            _ => Self::ALL.into_iter().find(|x| x.name() == s).map(|x| vec![x]),
        }
    }

    pub fn entries(self, ctx: &Context) -> Vec<Entry<'_>> {
        match self {
            Suite::Geometry => geometry::entries(ctx),
            Suite::Matrix => matrix::entries(ctx),
            Suite::Complex => complex::entries(ctx),
            Suite::Nilpotent => nilpotent::entries(ctx),
        }
    }
}

/// Everything the suites share, computed once per run.
pub struct Context {
    pub name: String,
    pub lift: LiftedAlgebra,
    /// Connection from the Koszul formula with the bracket sign flipped.
    pub literal: ConnectionCoefficients,
    /// The 4n-dimensional lift with its own Levi-Civita connection.
    pub lift_geometry: Geometry,
    pub center: CenterSplit,
    /// A proper subalgebra `h` with complement `n`, if one was found.
    pub dec: Option<TypeDecomposition>,
    pub dec_label: String,
    pub dec_split: Option<SubmanifoldSplit>,
    pub j_matrix: Option<Matrix>,
    pub j: Option<AlmostComplexStructure>,
    /// A proper J-invariant subalgebra.
    pub invariant_h: Option<(String, TypeDecomposition)>,
    pub contact: Option<AlmostContactStructure>,
    pub two_step: bool,
    pub h_type: Option<HTypeVerdict>,
    /// Coordinate basis of the base algebra.
    pub full: Vec<Vector>,
}

impl Context {
    pub fn new(name: &str, alg: &LieAlgebra, metric: &InnerProduct, extras: &Extras) -> Result<Self> {
        let geom = Geometry::new(alg.clone(), metric.clone())?;
        let n = alg.dim();
        let literal = koszul_connection(alg, metric, KoszulConvention::NegatedBracket)?;
        let lift = LiftedAlgebra::new(geom.clone());
        let lift_geometry = lift.to_geometry()?;
        let center = CenterSplit::of(&geom);

        let proper = |s: &SubspaceBasis| s.rank() > 0 && s.rank() < n && alg.is_subalgebra(s);
        let mut candidates: Vec<(String, SubspaceBasis)> = extras
            .subalgebras
            .iter()
            .filter(|(_, s)| proper(s))
            .cloned()
            .collect();
        candidates.push(("center".into(), alg.center()));
        candidates.push((alg.names()[0].clone(), SubspaceBasis::span(n, &[linalg::unit(n, 0)])));
        let (dec_label, dec, dec_split) = match candidates.into_iter().find(|(_, s)| proper(s)) {
            Some((label, h)) => {
                let d = TypeDecomposition::new(alg, metric, h.clone())?;
                let split = SubmanifoldSplit::for_geometry(&geom, h)?;
                (label, Some(d), Some(split))
            }
            None => ("none".into(), None, None),
        };

        let j = match &extras.complex_structure {
            Some(m) => AlmostComplexStructure::new(metric, m.clone()).ok(),
            None => None,
        };
        let invariant_h = j.as_ref().and_then(|j| invariant_subalgebra(alg, metric, j, extras, &center));

        let two_step = is_two_step(alg);
        let h_type = if two_step { is_h_type(&geom, &center).ok() } else { None };

        Ok(Self {
            name: name.to_string(),
            lift,
            literal,
            lift_geometry,
            center,
            dec,
            dec_label,
            dec_split,
            j_matrix: extras.complex_structure.clone(),
            j,
            invariant_h,
            contact: extras.contact.clone(),
            two_step,
            h_type,
            full: (0..n).map(|i| linalg::unit(n, i)).collect(),
        })
    }

    pub fn geom(&self) -> &Geometry {
        self.lift.base()
    }

    pub fn g(&self) -> &InnerProduct {
        self.lift.base().metric()
    }

    pub fn alg(&self) -> &LieAlgebra {
        self.lift.base().alg()
    }

    pub fn n(&self) -> usize {
        self.lift.base_dim()
    }
}

/// Named subalgebras first, then the J-hull of the center.
fn invariant_subalgebra(
    alg: &LieAlgebra,
    g: &InnerProduct,
    j: &AlmostComplexStructure,
    extras: &Extras,
    center: &CenterSplit,
) -> Option<(String, TypeDecomposition)> {
    let n = alg.dim();
    let invariant = |s: &SubspaceBasis| s.vectors().iter().all(|v| s.contains(&j.apply(v)));
    let mut candidates: Vec<(String, SubspaceBasis)> = extras.subalgebras.clone();
    let mut hull = center.center().vectors().to_vec();
    hull.extend(center.center().vectors().iter().map(|v| j.apply(v)));
    candidates.push(("J-hull of the center".into(), SubspaceBasis::span(n, &hull)));
    candidates
        .into_iter()
        .filter(|(_, s)| s.rank() > 0 && s.rank() < n && alg.is_subalgebra(s) && invariant(s))
        .find_map(|(name, s)| TypeDecomposition::new(alg, g, s).ok().map(|d| (name, d)))
}

/// Named coordinate vectors attached to a trial.
#[derive(Debug, Clone, Default)]
pub struct Vals(Vec<(String, Vector)>);

impl Vals {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn v(mut self, name: &str, x: &Vector) -> Self {
        self.0.push((name.to_string(), x.clone()));
        self
    }

    /// One value per slot: `A11`, `A12`, `A21`, `A22`.
    pub fn m(mut self, name: &str, a: &MatrixElement) -> Self {
        for (s, label) in SLOT_NAMES.iter().enumerate() {
            self.0.push((format!("{name}{label}"), a.slot(s).clone()));
        }
        self
    }
}

impl IntoIterator for Vals {
    type Item = (String, Vector);
    type IntoIter = std::vec::IntoIter<(String, Vector)>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Largest normalized residual among `(residual, scale)` pairs.
pub fn worst(parts: impl IntoIterator<Item = (f64, f64)>) -> f64 {
    parts
        .into_iter()
        .map(|(r, s)| r.abs() / (1.0 + s.abs()))
        .fold(0.0, |a, b| if b.is_nan() { f64::INFINITY } else { a.max(b) })
}

/// `(|a - b|, |a| + |b|)` for scalars.
pub fn scalar(a: f64, b: f64) -> (f64, f64) {
    (a - b, a.abs() + b.abs())
}

/// `(|a - b|, |a| + |b|)` for base vectors.
pub fn vector(g: &InnerProduct, a: &Vector, b: &Vector) -> (f64, f64) {
    (g.norm(&(a - b)), g.norm(a) + g.norm(b))
}

/// `(|A - B|, |A| + |B|)` in the lifted metric.
pub fn element(lift: &LiftedAlgebra, a: &MatrixElement, b: &MatrixElement) -> (f64, f64) {
    (lift.norm(&(a - b)), lift.norm(a) + lift.norm(b))
}

/// A trial whose residual is the worst of several comparisons.
pub fn all_of(parts: impl IntoIterator<Item = (f64, f64)>, vals: Vals) -> Trial {
    Trial::checked(worst(parts), 0.0, vals)
}
