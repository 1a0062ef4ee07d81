use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::einstein::einstein_product;
use crate::error::{Error, Result};
use crate::shape::{MultiIndexIter, TensorShape};

/// Dense complex tensor stored row-major over its full extent list.
///
/// Row-major order is exactly the one-based `t = i_N + Σ (i_K − 1)·Π I_L`
/// linearization applied to the row group and then the column group, so
/// flattening to a matrix or lining the tensor up as a column never moves
/// data. Values are immutable once built; every operation returns a new
/// tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor {
    shape: TensorShape,
    data: Vec<Complex64>,
}

impl DenseTensor {
    pub fn new(shape: TensorShape, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != shape.len() {
            return Err(Error::shape(format!(
                "{} entries supplied for shape {shape} holding {}",
                data.len(),
                shape.len()
            )));
        }
        Ok(Self { shape, data })
    }

    pub fn from_real(shape: TensorShape, data: &[f64]) -> Result<Self> {
        Self::new(shape, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a tensor from separate real and imaginary parts.
    pub fn from_parts(shape: TensorShape, re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::shape(format!(
                "real part has {} entries, imaginary part {}",
                re.len(),
                im.len()
            )));
        }
        Self::new(
            shape,
            re.iter()
                .zip(im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect(),
        )
    }

    pub fn zeros(shape: TensorShape) -> Self {
        let data = vec![Complex64::new(0.0, 0.0); shape.len()];
        Self { shape, data }
    }

    /// Unit tensor over `rows`: ones where the row and column multi-indices
    /// coincide, zeros elsewhere.
    pub fn unit(rows: &[usize]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::shape("unit tensor needs at least one axis"));
        }
        let shape = TensorShape::square(rows)?;
        let n = shape.row_count();
        let mut out = Self::zeros(shape);
        for t in 0..n {
            out.data[t * n + t] = Complex64::new(1.0, 0.0);
        }
        Ok(out)
    }

    /// Builds a tensor by evaluating `f` at every zero-based multi-index.
    pub fn from_fn(shape: TensorShape, mut f: impl FnMut(&[usize]) -> Complex64) -> Self {
        let data = MultiIndexIter::new(shape.extents())
            .map(|idx| f(&idx))
            .collect();
        Self { shape, data }
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    /// Entry at a zero-based multi-index.
    pub fn get(&self, index: &[usize]) -> Result<Complex64> {
        Ok(self.data[self.shape.linearize(index)?])
    }

    /// Same data under a different shape with the same element count.
    pub fn reshape(&self, shape: TensorShape) -> Result<Self> {
        if shape.len() != self.data.len() {
            return Err(Error::shape(format!(
                "cannot reshape {} into {shape}",
                self.shape
            )));
        }
        Ok(Self {
            shape,
            data: self.data.clone(),
        })
    }

    pub fn conj_transpose(&self) -> Self {
        self.swap_groups(true)
    }

    /// Exchanges row and column groups without conjugating.
    pub fn transpose(&self) -> Self {
        self.swap_groups(false)
    }

    fn swap_groups(&self, conjugate: bool) -> Self {
        let rows = self.shape.row_count();
        let cols = self.shape.col_count();
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..cols {
            for r in 0..rows {
                let v = self.data[r * cols + c];
                data.push(if conjugate { v.conj() } else { v });
            }
        }
        Self {
            shape: self.shape.swapped(),
            data,
        }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.require_same_shape(rhs)?;
        Ok(Self {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    fn require_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.shape != rhs.shape {
            return Err(Error::shape(format!(
                "shapes differ: {} vs {}",
                self.shape, rhs.shape
            )));
        }
        Ok(())
    }

    /// Einstein product contracting this tensor's column group against the
    /// leading axes of `rhs`.
    pub fn star(&self, rhs: &Self) -> Result<Self> {
        einstein_product(self, rhs, self.shape.col_extents().len())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        self.require_same_shape(rhs)?;
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.shape.is_square() {
            return Err(Error::shape(format!(
                "{what} needs a square tensor, got {}",
                self.shape
            )));
        }
        Ok(())
    }

    pub fn is_hermitian(&self, tol: f64) -> Result<bool> {
        self.require_square("hermitian test")?;
        Ok(self.max_abs_diff(&self.conj_transpose())? <= tol)
    }

    pub fn is_unitary(&self, tol: f64) -> Result<bool> {
        self.require_square("unitary test")?;
        let unit = Self::unit(self.shape.row_extents())?;
        let ah = self.conj_transpose();
        Ok(self.star(&ah)?.max_abs_diff(&unit)? <= tol
            && ah.star(self)?.max_abs_diff(&unit)? <= tol)
    }

    pub fn is_idempotent(&self, tol: f64) -> Result<bool> {
        self.require_square("idempotency test")?;
        Ok(self.star(self)?.max_abs_diff(self)? <= tol)
    }
}

/// `‖a − b‖_F`.
pub fn frobenius_distance(a: &DenseTensor, b: &DenseTensor) -> Result<f64> {
    a.require_same_shape(b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// `‖lhs − rhs‖_F / (1 + ‖rhs‖_F)`, the residual measure used throughout.
pub fn relative_residual(lhs: &DenseTensor, rhs: &DenseTensor) -> Result<f64> {
    Ok(frobenius_distance(lhs, rhs)? / (1.0 + rhs.frobenius_norm()))
}

// Operator forms panic on shape mismatch; use `try_add`/`try_sub` to get an
// error instead.
impl Add for &DenseTensor {
    type Output = DenseTensor;

    fn add(self, rhs: &DenseTensor) -> DenseTensor {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &DenseTensor {
    type Output = DenseTensor;

    fn sub(self, rhs: &DenseTensor) -> DenseTensor {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &DenseTensor {
    type Output = DenseTensor;

    fn neg(self) -> DenseTensor {
        self.map(|z| -z)
    }
}

impl Mul<f64> for &DenseTensor {
    type Output = DenseTensor;

    fn mul(self, s: f64) -> DenseTensor {
        self.map(|z| z * s)
    }
}
