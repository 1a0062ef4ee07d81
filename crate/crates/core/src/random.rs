//! Seeded test-tensor generators.
//!
//! Every generator draws from [`ChaCha8Rng`] seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. A uniform double is
//! `(next_u64 >> 11) · 2⁻⁵³`, scaled to `[-1, 1)`, and complex entries take
//! their real part first, then their imaginary part. Integers in `0..n` are
//! `next_u64 mod n`, so another implementation can reproduce the stream bit
//! for bit.

use num_complex::Complex64;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::shape::TensorShape;
use crate::tensor::DenseTensor;

pub struct TensorRng {
    inner: ChaCha8Rng,
}

impl TensorRng {
    pub fn seed(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform in `[-1, 1)`.
    pub fn uniform(&mut self) -> f64 {
        let unit = (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * unit - 1.0
    }

    pub fn complex(&mut self) -> Complex64 {
        let re = self.uniform();
        let im = self.uniform();
        Complex64::new(re, im)
    }

    /// Integer in `0..n`, as `next_u64 mod n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.inner.next_u64() % n as u64) as usize
    }

    /// Entries with independent uniform real and imaginary parts.
    pub fn tensor(&mut self, shape: TensorShape) -> DenseTensor {
        DenseTensor::from_fn(shape, |_| self.complex())
    }

    pub fn real_tensor(&mut self, shape: TensorShape) -> DenseTensor {
        DenseTensor::from_fn(shape, |_| Complex64::new(self.uniform(), 0.0))
    }

    /// `[rows|cols]` tensor of rank at most `rank`, built as a product of a
    /// `[rows|rank]` and a `[rank|cols]` factor.
    pub fn low_rank(&mut self, rows: &[usize], cols: &[usize], rank: usize) -> Result<DenseTensor> {
        let left = self.tensor(TensorShape::from_groups(rows, &[rank])?);
        let right = self.tensor(TensorShape::from_groups(&[rank], cols)?);
        let product = left.star(&right)?;
        product.reshape(TensorShape::from_groups(rows, cols)?)
    }

    /// `I + ε·R` with `ε = 0.1`; invertible for the extents used in tests.
    pub fn near_identity(&mut self, rows: &[usize]) -> Result<DenseTensor> {
        let unit = DenseTensor::unit(rows)?;
        let noise = self.tensor(unit.shape().clone());
        Ok(&unit + &(&noise * 0.1))
    }

    /// Random extent list with `axes` entries in `1..=max_extent`.
    pub fn extents(&mut self, axes: usize, max_extent: usize) -> Vec<usize> {
        (0..axes).map(|_| 1 + self.below(max_extent)).collect()
    }
}
