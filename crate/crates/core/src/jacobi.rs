//! One-sided (Hestenes) Jacobi SVD for dense complex matrices.
//!
//! Columns of a working copy of `A` are rotated pairwise until they are
//! mutually orthogonal; the accumulated rotations form `V`, column norms are
//! the singular values and the normalised columns are the left singular
//! vectors. Accurate and simple; cubic per sweep, which is fine for the
//! matrix sizes this crate flattens tensors into.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 80;

/// Thin factorization of a tall (`rows ≥ cols`) matrix.
pub(crate) struct TallSvd {
    /// `cols` left vectors, each of length `rows`; columns whose singular
    /// value is zero are left as zero vectors.
    pub u: Vec<Vec<Complex64>>,
    /// Non-increasing singular values, `cols` of them.
    pub s: Vec<f64>,
    /// `cols` right vectors, each of length `cols` (a full unitary basis).
    pub v: Vec<Vec<Complex64>>,
}

fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn norm_sqr(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

/// Applies the unitary column rotation
/// `[p q] ← [p q]·[[c, s·φ], [−s·φ̄, c]]` to a pair of columns.
fn rotate(cols: &mut [Vec<Complex64>], p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let (head, tail) = cols.split_at_mut(q);
    let (xp, xq) = (&mut head[p], &mut tail[0]);
    for (a, b) in xp.iter_mut().zip(xq.iter_mut()) {
        let (ap, aq) = (*a, *b);
        *a = ap * c - phase.conj() * aq * s;
        *b = phase * ap * s + aq * c;
    }
}

/// SVD of a tall matrix given in row-major order.
pub(crate) fn tall_svd(rows: usize, cols: usize, data: &[Complex64]) -> Result<TallSvd> {
    debug_assert!(rows >= cols);
    if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    let mut w: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| (0..rows).map(|i| data[i * cols + j]).collect())
        .collect();
    let mut v: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| {
            let mut e = vec![Complex64::new(0.0, 0.0); cols];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();

    let tol = f64::EPSILON * rows.max(1) as f64;
    // columns this small relative to the whole matrix count as zero
    let total: f64 = w.iter().map(|c| norm_sqr(c)).sum();
    let floor = total * (f64::EPSILON * f64::EPSILON);
    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..cols - 1 {
            for q in p + 1..cols {
                let alpha = norm_sqr(&w[p]);
                let beta = norm_sqr(&w[q]);
                let gamma = dot(&w[p], &w[q]);
                let g = gamma.norm();
                if g == 0.0 || alpha <= floor || beta <= floor || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "Jacobi SVD did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<(usize, f64)> = w.iter().map(|c| norm_sqr(c).sqrt()).enumerate().collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1));

    let mut u = Vec::with_capacity(cols);
    let mut s = Vec::with_capacity(cols);
    let mut vv = Vec::with_capacity(cols);
    for &(j, sigma) in &order {
        let col = if sigma > 0.0 {
            w[j].iter().map(|z| z / sigma).collect()
        } else {
            vec![Complex64::new(0.0, 0.0); rows]
        };
        u.push(col);
        s.push(sigma);
        vv.push(v[j].clone());
    }
    Ok(TallSvd { u, s, v: vv })
}

/// Extends orthonormal `basis` (vectors of length `dim`) to a full unitary
/// basis by Gram–Schmidt against the standard basis.
pub(crate) fn complete_basis(mut basis: Vec<Vec<Complex64>>, dim: usize) -> Vec<Vec<Complex64>> {
    let mut threshold = 0.5;
    while basis.len() < dim {
        for k in 0..dim {
            if basis.len() == dim {
                break;
            }
            let mut e = vec![Complex64::new(0.0, 0.0); dim];
            e[k] = Complex64::new(1.0, 0.0);
            // two passes keep the result orthogonal to working precision
            for _ in 0..2 {
                for b in &basis {
                    let proj = dot(b, &e);
                    for (x, y) in e.iter_mut().zip(b) {
                        *x -= proj * y;
                    }
                }
            }
            let n = norm_sqr(&e).sqrt();
            if n > threshold {
                basis.push(e.into_iter().map(|z| z / n).collect());
            }
        }
        threshold *= 0.1;
    }
    basis
}
