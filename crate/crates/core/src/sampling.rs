//! Random vectors and constraint solvers used by the identity suites.
//!
//! Hypotheses are met by construction: free slots are drawn first and the last
//! degree of freedom is solved for, so no trial is ever rejected.

use rand::Rng;

use crate::algebra::InnerProduct;
use crate::linalg::Vector;

/// Coordinates uniform in `[-1, 1]`.
pub fn vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector {
    Vector::from_fn(n, |_, _| rng.gen_range(-1.0..=1.0))
}

/// Random combination of `basis` with coefficients in `[-1, 1]`.
pub fn in_span<R: Rng + ?Sized>(rng: &mut R, n: usize, basis: &[Vector]) -> Vector {
    let mut out = Vector::zeros(n);
    for b in basis {
        out.axpy(rng.gen_range(-1.0..=1.0), b, 1.0);
    }
    out
}

/// Random vector of `span(basis)` that is bounded away from zero.
pub fn nonzero_in<R: Rng + ?Sized>(rng: &mut R, g: &InnerProduct, basis: &[Vector]) -> Option<Vector> {
    let n = g.dim();
    if basis.is_empty() {
        return None;
    }
    for _ in 0..64 {
        let v = in_span(rng, n, basis);
        if g.norm(&v) > 1e-3 {
            return Some(v);
        }
    }
    None
}

/// g-unit vector in the span of a g-orthonormal `basis`.
pub fn unit_in<R: Rng + ?Sized>(rng: &mut R, g: &InnerProduct, basis: &[Vector]) -> Vector {
    loop {
        let v = in_span(rng, g.dim(), basis);
        let nv = g.norm(&v);
        if nv > 1e-3 {
            return v / nv;
        }
    }
}

/// Removes from `v` its components along the vectors in `against`.
pub fn orthogonalize(g: &InnerProduct, v: &Vector, against: &[Vector]) -> Vector {
    let on = g.orthonormalize(against);
    let mut w = v.clone();
    for _ in 0..2 {
        for q in &on {
            let c = g.inner(q, &w);
            w.axpy(-c, q, 1.0);
        }
    }
    w
}

/// Random vector of `span(basis)` g-orthogonal to every vector of `against`.
pub fn orthogonal_in<R: Rng + ?Sized>(
    rng: &mut R,
    g: &InnerProduct,
    basis: &[Vector],
    against: &[Vector],
) -> Option<Vector> {
    for _ in 0..64 {
        let v = orthogonalize(g, &in_span(rng, g.dim(), basis), against);
        if g.norm(&v) > 1e-3 {
            return Some(v);
        }
    }
    None
}

/// `Z` in `span(basis)` with `g(W, Z) = c` and `|Z| = r`, when feasible.
///
/// Writes `Z = (c/|W|²) W + s U` with `U` a unit vector of the span orthogonal to
/// `W` (which must itself lie in the span). When `r` is too small for the
/// prescribed pairing, or no orthogonal direction exists, `s` is clamped to 0
/// and the norm condition is given up.
pub fn with_pairing_and_norm<R: Rng + ?Sized>(
    rng: &mut R,
    g: &InnerProduct,
    basis: &[Vector],
    w: &Vector,
    c: f64,
    r: f64,
) -> Option<Vector> {
    let ww = g.norm_sq(w);
    if ww <= 1e-24 {
        return None;
    }
    let base = w * (c / ww);
    let s2 = r * r - c * c / ww;
    if s2 <= 0.0 {
        return Some(base);
    }
    match orthogonal_in(rng, g, basis, std::slice::from_ref(w)) {
        Some(u) => Some(base + u.clone() * (s2.sqrt() / g.norm(&u))),
        None => Some(base),
    }
}

/// Random vector with a prescribed pairing `g(W, Z) = c`, free otherwise.
pub fn with_pairing<R: Rng + ?Sized>(
    rng: &mut R,
    g: &InnerProduct,
    basis: &[Vector],
    w: &Vector,
    c: f64,
) -> Option<Vector> {
    let ww = g.norm_sq(w);
    if ww <= 1e-24 {
        return None;
    }
    let free = orthogonalize(g, &in_span(rng, g.dim(), basis), std::slice::from_ref(w));
    Some(w * (c / ww) + free)
}
