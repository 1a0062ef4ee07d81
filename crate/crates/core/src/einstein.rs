//! Einstein product, Kronecker product, `Vec` and block tensors.
//!
//! All contractions run over the canonical row-major layout: contracting the
//! last `n` axes of `A` against the first `n` axes of `B` is a plain
//! `(rows × k)·(k × cols)` matrix product on the stored data.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::shape::{offset_in, MultiIndexIter, TensorShape};
use crate::tensor::DenseTensor;

/// `(A ∗_n B)_{i…j…} = Σ_{k…} a_{i…k…} b_{k…j…}`.
///
/// The trailing `n` extents of `a` must equal the leading `n` extents of `b`.
/// The free axes of `a` form the row group of the result and the free axes
/// of `b` its column group. Either may be empty, which covers contraction
/// with a vector-shaped right operand.
pub fn einstein_product(a: &DenseTensor, b: &DenseTensor, n: usize) -> Result<DenseTensor> {
    let ae = a.shape().extents();
    let be = b.shape().extents();
    if n == 0 {
        return Err(Error::shape("Einstein product must contract at least one axis"));
    }
    if n > ae.len() || n > be.len() {
        return Err(Error::shape(format!(
            "cannot contract {n} axes of {} against {}",
            a.shape(),
            b.shape()
        )));
    }
    let free_a = ae.len() - n;
    if ae[free_a..] != be[..n] {
        return Err(Error::shape(format!(
            "contracted axes {:?} of {} do not match {:?} of {}",
            &ae[free_a..],
            a.shape(),
            &be[..n],
            b.shape()
        )));
    }
    let mut extents = ae[..free_a].to_vec();
    extents.extend_from_slice(&be[n..]);
    let shape = TensorShape::new(extents, free_a)?;

    let rows: usize = ae[..free_a].iter().product();
    let inner: usize = ae[free_a..].iter().product();
    let cols: usize = be[n..].iter().product();
    let data = matmul(a.data(), b.data(), rows, inner, cols);
    DenseTensor::new(shape, data)
}

/// Row-major `(rows × inner)·(inner × cols)` with a fixed summation order.
pub(crate) fn matmul(
    lhs: &[Complex64],
    rhs: &[Complex64],
    rows: usize,
    inner: usize,
    cols: usize,
) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); rows * cols];
    for i in 0..rows {
        let out_row = &mut out[i * cols..(i + 1) * cols];
        for k in 0..inner {
            let a = lhs[i * inner + k];
            let rhs_row = &rhs[k * cols..(k + 1) * cols];
            for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                *o += a * b;
            }
        }
    }
    out
}

/// Kronecker product `A ⊗ B` as a Kr-block tensor.
///
/// For `A` of shape `[I|J]` and `B` of shape `[K|L]` the result has shape
/// `[I,K|J,L]`; its `(t₁,t₂)` block, with `t₁`,`t₂` the linear positions of
/// `(i…)` in `I` and `(j…)` in `J`, is `a_{i…j…}·B`. Flattened, this is the
/// matrix Kronecker product of the flattened factors.
pub fn kronecker(a: &DenseTensor, b: &DenseTensor) -> DenseTensor {
    let (sa, sb) = (a.shape(), b.shape());
    let mut rows = sa.row_extents().to_vec();
    rows.extend_from_slice(sb.row_extents());
    let mut cols = sa.col_extents().to_vec();
    cols.extend_from_slice(sb.col_extents());
    let shape = TensorShape::from_groups(&rows, &cols).expect("factor extents are valid");

    let (ar, ac) = (sa.row_count(), sa.col_count());
    let (br, bc) = (sb.row_count(), sb.col_count());
    let out_cols = ac * bc;
    let mut data = vec![Complex64::new(0.0, 0.0); ar * br * out_cols];
    for t1 in 0..ar {
        for t2 in 0..ac {
            let scale = a.data()[t1 * ac + t2];
            for r in 0..br {
                let row = (t1 * br + r) * out_cols + t2 * bc;
                for c in 0..bc {
                    data[row + c] = scale * b.data()[r * bc + c];
                }
            }
        }
    }
    DenseTensor::new(shape, data).expect("length matches shape")
}

/// `Vec(A)`: the subblocks `A_{(i…|:)}` stacked in row-group order.
///
/// Storage is already in that order, so only the split moves: every axis
/// lands in the row group.
pub fn vec(a: &DenseTensor) -> DenseTensor {
    a.reshape(a.shape().as_column())
        .expect("same extents, same length")
}

/// Layout of a block tensor.
#[derive(Clone, Copy, Debug)]
pub enum BlockSpec<'a> {
    /// `[A B]`: shared row group, column extents add axis by axis.
    Row(&'a DenseTensor, &'a DenseTensor),
    /// `[C; D]`: shared column group, row extents add axis by axis.
    Column(&'a DenseTensor, &'a DenseTensor),
    /// `[[A₁ B₁]; [A₂ B₂]]`.
    TwoByTwo {
        a1: &'a DenseTensor,
        b1: &'a DenseTensor,
        a2: &'a DenseTensor,
        b2: &'a DenseTensor,
    },
}

impl BlockSpec<'_> {
    pub fn build(&self) -> Result<DenseTensor> {
        match *self {
            BlockSpec::Row(a, b) => row_block(a, b),
            BlockSpec::Column(c, d) => column_block(c, d),
            BlockSpec::TwoByTwo { a1, b1, a2, b2 } => block2x2(a1, b1, a2, b2),
        }
    }
}

/// Row block tensor `[A B]`.
///
/// `A ∈ [I|J]`, `B ∈ [I|K]` with the same number of column axes; the result
/// lives in `[I|J+K]`. An entry comes from `A` when every column index lies
/// in `J`'s range, from `B` when every column index lies past it, and is
/// zero when the column multi-index straddles the two.
pub fn row_block(a: &DenseTensor, b: &DenseTensor) -> Result<DenseTensor> {
    let (sa, sb) = (a.shape(), b.shape());
    if sa.row_extents() != sb.row_extents() {
        return Err(Error::shape(format!(
            "row block parts need the same row group: {sa} vs {sb}"
        )));
    }
    let j = sa.col_extents();
    let k = sb.col_extents();
    if j.len() != k.len() {
        return Err(Error::shape(format!(
            "row block parts need the same number of column axes: {sa} vs {sb}"
        )));
    }
    let beta: Vec<usize> = j.iter().zip(k).map(|(x, y)| x + y).collect();
    let shape = TensorShape::from_groups(sa.row_extents(), &beta)?;
    let (rows, cols) = (shape.row_count(), shape.col_count());
    let (ja, kb) = (sa.col_count(), sb.col_count());

    let mut data = vec![Complex64::new(0.0, 0.0); rows * cols];
    let mut shifted = vec![0; beta.len()];
    for (c, l) in MultiIndexIter::new(&beta).enumerate() {
        if l.iter().zip(j).all(|(li, ji)| li < ji) {
            let src = offset_in(j, &l);
            for r in 0..rows {
                data[r * cols + c] = a.data()[r * ja + src];
            }
        } else if l.iter().zip(j).all(|(li, ji)| li >= ji) {
            for ((s, li), ji) in shifted.iter_mut().zip(&l).zip(j) {
                *s = li - ji;
            }
            let src = offset_in(k, &shifted);
            for r in 0..rows {
                data[r * cols + c] = b.data()[r * kb + src];
            }
        }
    }
    DenseTensor::new(shape, data)
}

/// Column block tensor `[C; D] = [Cᵀ Dᵀ]ᵀ`.
pub fn column_block(c: &DenseTensor, d: &DenseTensor) -> Result<DenseTensor> {
    Ok(row_block(&c.transpose(), &d.transpose())?.transpose())
}

/// `[[A₁ B₁]; [A₂ B₂]]`, the column block of the row blocks `[A₁ B₁]` and
/// `[A₂ B₂]`.
pub fn block2x2(
    a1: &DenseTensor,
    b1: &DenseTensor,
    a2: &DenseTensor,
    b2: &DenseTensor,
) -> Result<DenseTensor> {
    column_block(&row_block(a1, b1)?, &row_block(a2, b2)?)
}
