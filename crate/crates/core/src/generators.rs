//! Seeded random instances: two-step algebras, metrics, algebras of small
//! dimension from several families, Hermitian complex structures, subspaces.

use nalgebra::linalg::Cholesky;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{InnerProduct, LieAlgebra, SubspaceBasis};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::sampling;

/// `p` generators whose brackets land in a `q`-dimensional center with
/// coefficients uniform in `[-1, 1]`; identity metric.
pub fn random_two_step(p: usize, q: usize, seed: u64) -> Result<(LieAlgebra, InnerProduct)> {
    let pairs = p * p.saturating_sub(1) / 2;
    if q == 0 || q > pairs {
        return Err(Error::Invalid(format!(
            "need 1 <= q <= p(p-1)/2 = {pairs}, got p = {p}, q = {q}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = p + q;
    let mut entries = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            for k in 0..q {
                entries.push((i, j, p + k, rng.gen_range(-1.0..=1.0)));
            }
        }
    }
    Ok((LieAlgebra::from_brackets(n, None, entries)?, InnerProduct::identity(n)))
}

/// `B Bᵀ + ½ I` with `B` uniform in `[-1, 1]`.
pub fn random_spd_metric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> InnerProduct {
    let b = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..=1.0));
    InnerProduct::new(&b * b.transpose() + Matrix::identity(n, n) * 0.5)
        .expect("shifted Gram matrix is positive definite")
}

/// Invertible matrix with condition number kept moderate.
pub fn random_basis_change<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let p = Matrix::identity(n, n) + Matrix::from_fn(n, n, |_, _| rng.gen_range(-0.5..=0.5));
        let sv = p.clone().svd(false, false).singular_values;
        let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
        let max = sv.iter().copied().fold(0.0, f64::max);
        if min > 0.2 * max {
            return p;
        }
    }
}

fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets_unchecked(3, None, [(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0)])
        .expect("so(3)")
}

fn sl2() -> LieAlgebra {
    // h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    LieAlgebra::from_brackets_unchecked(3, None, [(0, 1, 1, 2.0), (0, 2, 2, -2.0), (1, 2, 0, 1.0)])
        .expect("sl(2)")
}

fn pad(alg: LieAlgebra, n: usize) -> LieAlgebra {
    if alg.dim() >= n {
        alg
    } else {
        alg.direct_sum(&LieAlgebra::abelian(n - alg.dim()))
    }
}

/// Algebra of dimension `2..=max_dim` drawn from abelian, two-step, Heisenberg
/// sums, compact, split and solvable families, then written in a random basis.
pub fn random_lie_algebra<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> LieAlgebra {
    let max_dim = max_dim.max(2);
    let n = rng.gen_range(2..=max_dim);
    let alg = match rng.gen_range(0..6) {
        0 => LieAlgebra::abelian(n),
        1 if n >= 3 => {
            let p = rng.gen_range(2..n.min(4) + 1).min(n - 1);
            let q = (n - p).min(p * (p - 1) / 2);
            let (two, _) = random_two_step(p, q, rng.gen()).expect("valid sizes");
            pad(two, n)
        }
        2 if n >= 3 => pad(
            LieAlgebra::from_brackets_unchecked(3, None, [(0, 1, 2, 1.0)]).expect("h3"),
            n,
        ),
        3 if n >= 3 => pad(so3(), n),
        4 if n >= 3 => pad(sl2(), n),
        _ => {
            // R acting on R^{n-1} by a random derivation
            let a = Matrix::from_fn(n - 1, n - 1, |_, _| rng.gen_range(-1.0..=1.0));
            let mut entries = Vec::new();
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    entries.push((n - 1, i, j, a[(j, i)]));
                }
            }
            LieAlgebra::from_brackets_unchecked(n, None, entries).expect("semidirect product")
        }
    };
    let p = random_basis_change(rng, alg.dim());
    alg.change_basis(&p).expect("well-conditioned change of basis")
}

/// `J = F Q J0 Qᵀ F⁻¹` with `F` a g-orthonormal frame, `Q` random orthogonal and
/// `J0` the standard block rotation. Needs even dimension.
pub fn random_hermitian_j<R: Rng + ?Sized>(rng: &mut R, g: &InnerProduct) -> Result<Matrix> {
    let n = g.dim();
    if n % 2 != 0 {
        return Err(Error::Invalid(format!("no almost complex structure in odd dimension {n}")));
    }
    let mut j0 = Matrix::zeros(n, n);
    for b in 0..n / 2 {
        j0[(2 * b + 1, 2 * b)] = 1.0;
        j0[(2 * b, 2 * b + 1)] = -1.0;
    }
    let q = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..=1.0)).qr().q();
    let l = Cholesky::new(g.gram().clone())
        .ok_or(Error::MetricNotPositiveDefinite { min_eigenvalue: 0.0 })?
        .l();
    let f = l
        .transpose()
        .try_inverse()
        .ok_or_else(|| Error::Invalid("singular Cholesky factor".into()))?;
    let f_inv = l.transpose();
    Ok(&f * q.clone() * j0 * q.transpose() * f_inv)
}

/// Span of `k` random vectors (clamped to `n`).
pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> SubspaceBasis {
    let vs: Vec<Vector> = (0..k.min(n)).map(|_| sampling::vector(rng, n)).collect();
    SubspaceBasis::span(n, &vs)
}

/// Greedy abelian subalgebra of dimension at most `k`: each new vector is drawn
/// from the common centralizer of the previous ones.
pub fn random_abelian_subalgebra<R: Rng + ?Sized>(rng: &mut R, alg: &LieAlgebra, k: usize) -> SubspaceBasis {
    let n = alg.dim();
    let mut chosen: Vec<Vector> = Vec::new();
    while chosen.len() < k.min(n) {
        let candidates = if chosen.is_empty() {
            (0..n).map(|i| linalg::unit(n, i)).collect()
        } else {
            centralizer(alg, &chosen)
        };
        let v = sampling::in_span(rng, n, &candidates);
        let mut next = chosen.clone();
        next.push(v);
        if linalg::rank(&linalg::columns(&next, n)) <= chosen.len() {
            break;
        }
        chosen = next;
    }
    SubspaceBasis::span(n, &chosen)
}

/// Vectors commuting with every element of `vs`.
pub fn centralizer(alg: &LieAlgebra, vs: &[Vector]) -> Vec<Vector> {
    let n = alg.dim();
    let mut stacked = Matrix::zeros(n * vs.len().max(1), n);
    let mut scale = 0.0_f64;
    for (i, v) in vs.iter().enumerate() {
        stacked.view_mut((i * n, 0), (n, n)).copy_from(&alg.ad(v));
        scale = scale.max(v.amax());
    }
    linalg::null_space_scaled(&stacked, alg.max_constant() * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::hermitian_check;

    #[test]
    fn two_step_is_deterministic_and_valid() {
        let (a, _) = random_two_step(4, 3, 7).unwrap();
        let (b, _) = random_two_step(4, 3, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.lower_central_series().class, Some(2));
        assert!(a.center().rank() >= 3);
        assert!(random_two_step(2, 2, 0).is_err());
        assert!(random_two_step(3, 0, 0).is_err());
    }

    #[test]
    fn random_algebras_satisfy_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let alg = random_lie_algebra(&mut rng, 6);
            assert!(alg.dim() <= 6);
            alg.validate().unwrap();
        }
    }

    #[test]
    fn hermitian_j_for_random_metric() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [2, 4, 6] {
            let g = random_spd_metric(&mut rng, n);
            let j = random_hermitian_j(&mut rng, &g).unwrap();
            assert!(hermitian_check(&g, &j).unwrap().holds);
        }
        assert!(random_hermitian_j(&mut rng, &InnerProduct::identity(3)).is_err());
    }

    #[test]
    fn abelian_subalgebras_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let alg = random_lie_algebra(&mut rng, 6);
            let m = random_abelian_subalgebra(&mut rng, &alg, 3);
            assert!(m.rank() >= 1);
            for x in m.vectors() {
                for y in m.vectors() {
                    assert!(alg.bracket(x, y).unwrap().amax() < 1e-9 * (1.0 + alg.max_constant()));
                }
            }
        }
    }
}
