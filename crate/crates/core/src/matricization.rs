//! Tensor ↔ matrix isomorphism.
//!
//! `flatten` reads a tensor of shape `[I|J]` as a `|I| × |J|` matrix. Under
//! this map the Einstein product over the column group becomes the matrix
//! product, so every generalized inverse is computed on the flattened matrix
//! and mapped back.

use num_complex::Complex64;

use crate::einstein::matmul;
use crate::error::{Error, Result};
use crate::jacobi::{complete_basis, tall_svd};
use crate::shape::TensorShape;
use crate::tensor::DenseTensor;

/// Row-major complex matrix that remembers the tensor shape it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
    provenance: TensorShape,
}

impl FlatMatrix {
    /// Plain matrix; its provenance is the order-2 shape `[rows|cols]`.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        let provenance = TensorShape::from_groups(&[rows], &[cols])?;
        Self::with_provenance(data, provenance)
    }

    pub fn with_provenance(data: Vec<Complex64>, provenance: TensorShape) -> Result<Self> {
        let (rows, cols) = (provenance.row_count(), provenance.col_count());
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            data,
            provenance,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Self::new(n, n, data).expect("square identity")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols]).expect("valid dims")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn provenance(&self) -> &TensorShape {
        &self.provenance
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    /// Matrix product; the result's provenance joins `self`'s row group with
    /// `rhs`'s column group.
    pub fn matmul(&self, rhs: &FlatMatrix) -> Result<FlatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let provenance = TensorShape::from_groups(
            self.provenance.row_extents(),
            rhs.provenance.col_extents(),
        )?;
        let data = matmul(&self.data, &rhs.data, self.rows, self.cols, rhs.cols);
        FlatMatrix::with_provenance(data, provenance)
    }

    pub fn conj_transpose(&self) -> FlatMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).conj());
            }
        }
        FlatMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
            provenance: self.provenance.swapped(),
        }
    }

    /// Kronecker product of matrices; provenance groups concatenate.
    pub fn kron(&self, rhs: &FlatMatrix) -> FlatMatrix {
        let mut row_ext = self.provenance.row_extents().to_vec();
        row_ext.extend_from_slice(rhs.provenance.row_extents());
        let mut col_ext = self.provenance.col_extents().to_vec();
        col_ext.extend_from_slice(rhs.provenance.col_extents());
        let provenance = TensorShape::from_groups(&row_ext, &col_ext).expect("valid extents");
        let cols = self.cols * rhs.cols;
        let mut data = vec![Complex64::new(0.0, 0.0); self.rows * rhs.rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * rhs.get(k, l);
                    }
                }
            }
        }
        FlatMatrix::with_provenance(data, provenance).expect("length matches")
    }

    pub fn max_abs_diff(&self, rhs: &FlatMatrix) -> Result<f64> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::shape("matrix dimensions differ"));
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Reads `a` as a `row_count × col_count` matrix. No data moves.
pub fn flatten(a: &DenseTensor) -> FlatMatrix {
    FlatMatrix::with_provenance(a.data().to_vec(), a.shape().clone())
        .expect("tensor length matches its shape")
}

/// Inverse of [`flatten`] for a target `shape` whose group sizes match.
pub fn unflatten(m: &FlatMatrix, shape: TensorShape) -> Result<DenseTensor> {
    if shape.row_count() != m.rows || shape.col_count() != m.cols {
        return Err(Error::shape(format!(
            "{}×{} matrix does not fit shape {shape}",
            m.rows, m.cols
        )));
    }
    DenseTensor::new(shape, m.data.clone())
}

/// Full SVD `M = U·diag(s)·Vᴴ` with square unitary `U` and `V`.
#[derive(Clone, Debug)]
pub struct MatrixSvd {
    /// `rows × rows`, row-major.
    pub u: FlatMatrix,
    /// `min(rows, cols)` non-increasing singular values.
    pub s: Vec<f64>,
    /// `cols × cols`, row-major.
    pub v: FlatMatrix,
}

fn columns_to_matrix(cols: &[Vec<Complex64>], rows: usize) -> FlatMatrix {
    let n = cols.len();
    let mut data = vec![Complex64::new(0.0, 0.0); rows * n];
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            data[i * n + j] = z;
        }
    }
    FlatMatrix::new(rows, n, data).expect("valid dims")
}

/// Thin factors `(U columns, s, V columns)` of any matrix, with the nonzero
/// singular values first.
fn thin_svd(m: &FlatMatrix) -> Result<(Vec<Vec<Complex64>>, Vec<f64>, Vec<Vec<Complex64>>)> {
    if m.rows >= m.cols {
        let f = tall_svd(m.rows, m.cols, &m.data)?;
        Ok((f.u, f.s, f.v))
    } else {
        // Mᴴ = W·S·Zᴴ  ⇒  M = Z·S·Wᴴ
        let h = m.conj_transpose();
        let f = tall_svd(h.rows, h.cols, &h.data)?;
        Ok((f.v, f.s, f.u))
    }
}

pub fn matrix_svd(m: &FlatMatrix) -> Result<MatrixSvd> {
    let (u_cols, s, v_cols) = thin_svd(m)?;
    let smax = s.first().copied().unwrap_or(0.0);
    let cutoff = smax * m.rows.max(m.cols) as f64 * f64::EPSILON;
    let keep = s.iter().take_while(|&&x| x > cutoff && x > 0.0).count();

    let u_basis = complete_basis(u_cols[..keep].to_vec(), m.rows);
    let v_basis = complete_basis(v_cols[..keep].to_vec(), m.cols);
    Ok(MatrixSvd {
        u: columns_to_matrix(&u_basis, m.rows),
        s,
        v: columns_to_matrix(&v_basis, m.cols),
    })
}

/// Default truncation for [`matrix_pinv`]: `max(rows, cols)·ε`.
pub fn default_rank_tol(rows: usize, cols: usize) -> f64 {
    rows.max(cols) as f64 * f64::EPSILON
}

/// Moore–Penrose pseudoinverse through the SVD.
///
/// Singular values `σ ≤ rank_tol·σ_max` are treated as zero; `None` selects
/// [`default_rank_tol`]. The result carries the swapped provenance.
pub fn matrix_pinv(m: &FlatMatrix, rank_tol: Option<f64>) -> Result<FlatMatrix> {
    let rank_tol = rank_tol.unwrap_or_else(|| default_rank_tol(m.rows, m.cols));
    let (u_cols, s, v_cols) = thin_svd(m)?;
    let smax = s.first().copied().unwrap_or(0.0);
    let mut data = vec![Complex64::new(0.0, 0.0); m.cols * m.rows];
    if smax > 0.0 {
        for ((u, &sigma), v) in u_cols.iter().zip(&s).zip(&v_cols) {
            if sigma <= rank_tol * smax {
                break;
            }
            // X += v·uᴴ / σ
            for (r, vr) in v.iter().enumerate() {
                let scaled = vr / sigma;
                let row = &mut data[r * m.rows..(r + 1) * m.rows];
                for (x, uc) in row.iter_mut().zip(u) {
                    *x += scaled * uc.conj();
                }
            }
        }
    }
    FlatMatrix::with_provenance(data, m.provenance.swapped())
}
