//! Small dense kernels shared by the algebraic and geometric modules.
//!
//! Everything here works on `nalgebra` dynamic matrices. Numerical rank uses a
//! relative singular-value cutoff so that results do not depend on the overall
//! scale of the structure constants.

use nalgebra::{DMatrix, DVector};

pub type Vector = DVector<f64>;
pub type Matrix = DMatrix<f64>;

/// Singular values at or below this fraction of the largest are treated as zero.
pub const RANK_TOL: f64 = 1e-9;

/// Gram–Schmidt gives up on a vector whose remaining norm falls below this
/// fraction of its original norm.
pub const BREAKDOWN_TOL: f64 = 1e-12;

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = Vector::zeros(n);
    v[i] = 1.0;
    v
}

/// Stacks vectors as the columns of a matrix.
pub fn columns(vectors: &[Vector], n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        m.set_column(j, v);
    }
    m
}

fn svd_padded(m: &Matrix) -> (Vec<f64>, Matrix, Matrix) {
    // nalgebra returns min(r, c) right singular vectors; pad rows so we get all of them.
    let (r, c) = m.shape();
    let padded = if r < c {
        let mut p = Matrix::zeros(c, c);
        p.view_mut((0, 0), (r, c)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(true, true);
    let u = svd.u.expect("u requested");
    let v_t = svd.v_t.expect("v_t requested");
    (svd.singular_values.iter().copied().collect(), u, v_t)
}

fn cutoff(sv: &[f64], scale: f64) -> f64 {
    let max = sv.iter().copied().fold(0.0, f64::max);
    RANK_TOL * max.max(scale)
}

/// Numerical rank with a relative cutoff.
pub fn rank(m: &Matrix) -> usize {
    rank_scaled(m, 0.0)
}

/// Numerical rank; singular values at or below `RANK_TOL * max(σ_max, scale)`
/// count as zero, so a matrix of rounding noise relative to `scale` has rank 0.
pub fn rank_scaled(m: &Matrix, scale: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    let cut = cutoff(&sv, scale);
    sv.iter().filter(|&&s| s > cut).count()
}

/// Orthonormal (Euclidean) basis of the null space of `m`.
pub fn null_space(m: &Matrix) -> Vec<Vector> {
    null_space_scaled(m, 0.0)
}

pub fn null_space_scaled(m: &Matrix, scale: f64) -> Vec<Vector> {
    let n = m.ncols();
    if m.nrows() == 0 {
        return (0..n).map(|i| unit(n, i)).collect();
    }
    let (sv, _, v_t) = svd_padded(m);
    let cut = cutoff(&sv, scale);
    (0..sv.len())
        .filter(|&i| sv[i] <= cut)
        .map(|i| v_t.row(i).transpose())
        .collect()
}

/// Orthonormal (Euclidean) basis of the column space of `m`.
pub fn column_space(m: &Matrix) -> Vec<Vector> {
    column_space_scaled(m, 0.0)
}

pub fn column_space_scaled(m: &Matrix, scale: f64) -> Vec<Vector> {
    if m.ncols() == 0 || m.nrows() == 0 {
        return Vec::new();
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("u requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let cut = cutoff(&sv, scale);
    (0..sv.len())
        .filter(|&i| sv[i] > cut)
        .map(|i| u.column(i).into_owned())
        .collect()
}

/// Reduced row echelon form of the span of `vectors`, returned as a basis.
///
/// Used to present subspaces in a canonical, human-readable form (the center of
/// the Heisenberg algebra comes out as exactly `e3`).
pub fn canonical_basis(vectors: &[Vector], n: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<f64>> = vectors.iter().map(|v| v.iter().copied().collect()).collect();
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0_f64, |a, &b| a.max(b.abs()));
    if scale == 0.0 {
        return Vec::new();
    }
    let tol = 1e-9 * scale;
    let mut lead = 0;
    let mut out_rows = 0;
    for col in 0..n {
        if lead >= rows.len() {
            break;
        }
        let (piv, val) = (lead..rows.len())
            .map(|r| (r, rows[r][col].abs()))
            .fold((lead, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if val <= tol {
            continue;
        }
        rows.swap(lead, piv);
        let p = rows[lead][col];
        for x in rows[lead].iter_mut() {
            *x /= p;
        }
        for r in 0..rows.len() {
            if r != lead {
                let f = rows[r][col];
                if f != 0.0 {
                    for c in 0..n {
                        rows[r][c] -= f * rows[lead][c];
                    }
                }
            }
        }
        lead += 1;
        out_rows = lead;
    }
    rows.truncate(out_rows);
    rows.into_iter()
        .map(|r| {
            Vector::from_iterator(
                n,
                r.into_iter().map(|x| if x.abs() <= 1e-14 { 0.0 } else { x }),
            )
        })
        .collect()
}

/// Modified Gram–Schmidt with one re-orthogonalization pass, in the inner
/// product given by `gram`. Vectors that collapse below the breakdown threshold
/// are dropped.
pub fn gram_schmidt(vectors: &[Vector], gram: &Matrix) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let norm0 = v.dot(&(gram * v)).max(0.0).sqrt();
        if norm0 == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let c = q.dot(&(gram * &w));
                w -= q * c;
            }
        }
        let norm = w.dot(&(gram * &w)).max(0.0).sqrt();
        if norm > BREAKDOWN_TOL * norm0 {
            out.push(w / norm);
        }
    }
    out
}

/// Largest absolute entry.
pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().fold(0.0, |a, &b| a.max(b.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_is_rank_zero_against_scale() {
        let m = Matrix::from_row_slice(2, 2, &[1e-17, 0.0, 0.0, 3e-17]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_scaled(&m, 1.0), 0);
        assert_eq!(null_space_scaled(&m, 1.0).len(), 2);
        assert!(column_space_scaled(&m, 1.0).is_empty());
    }

    #[test]
    fn null_space_of_wide_matrix() {
        let m = Matrix::from_row_slice(1, 3, &[1.0, 0.0, 0.0]);
        let k = null_space(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v[0].abs() < 1e-12);
        }
    }

    #[test]
    fn canonical_basis_is_rref() {
        let v = vec![Vector::from_vec(vec![0.0, 0.0, -0.7])];
        let c = canonical_basis(&v, 3);
        assert_eq!(c, vec![Vector::from_vec(vec![0.0, 0.0, 1.0])]);
    }

    #[test]
    fn gram_schmidt_respects_metric() {
        let g = Matrix::from_diagonal(&Vector::from_vec(vec![1.0, 4.0]));
        let q = gram_schmidt(&[unit(2, 0), Vector::from_vec(vec![1.0, 1.0])], &g);
        assert_eq!(q.len(), 2);
        assert!((q[1].dot(&(&g * &q[1])) - 1.0).abs() < 1e-14);
        assert!(q[0].dot(&(&g * &q[1])).abs() < 1e-14);
    }

    #[test]
    fn dependent_vectors_are_dropped() {
        let g = Matrix::identity(2, 2);
        let q = gram_schmidt(&[unit(2, 0), unit(2, 0) * 2.0], &g);
        assert_eq!(q.len(), 1);
    }
}
