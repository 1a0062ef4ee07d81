//! Small hand-checkable `2×2×2×2` tensors for the reverse-order-law
//! counterexamples, entered exactly as their four `2×2` slices are usually
//! printed.
//!
//! A slice `s_{kl}` lists the entries `t_{ijkl}` for fixed column indices
//! `(k, l)` with `i` down the rows and `j` across. Slices are given in the
//! order `(1,1), (2,1), (1,2), (2,2)`.

use crate::shape::TensorShape;
use crate::tensor::DenseTensor;

pub type Slice = [[f64; 2]; 2];

/// Assembles a real `[2,2|2,2]` tensor from its slices `s11, s21, s12, s22`.
pub fn from_slices(slices: [Slice; 4]) -> DenseTensor {
    let shape = TensorShape::square(&[2, 2]).expect("valid shape");
    let [s11, s21, s12, s22] = slices;
    let pick = |k: usize, l: usize| match (k, l) {
        (0, 0) => &s11,
        (1, 0) => &s21,
        (0, 1) => &s12,
        _ => &s22,
    };
    let mut data = vec![0.0; 16];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    data[((i * 2 + j) * 2 + k) * 2 + l] = pick(k, l)[i][j];
                }
            }
        }
    }
    DenseTensor::from_real(shape, &data).expect("16 entries")
}

/// Pair whose Moore–Penrose inverses break the reverse order law:
/// `(A∗B)† ≠ B†∗A†`.
#[derive(Clone, Debug)]
pub struct MpCounterexample {
    pub a: DenseTensor,
    pub b: DenseTensor,
    pub a_pinv: DenseTensor,
    pub b_pinv: DenseTensor,
    /// `B†∗A†`.
    pub reversed: DenseTensor,
    /// `(A∗B)†`.
    pub product_pinv: DenseTensor,
}

pub fn mp_counterexample() -> MpCounterexample {
    MpCounterexample {
        a: from_slices([
            [[0., 0.], [0., 1.]],
            [[1., -1.], [0., 0.]],
            [[0., 1.], [0., 0.]],
            [[1., 0.], [-1., 0.]],
        ]),
        b: from_slices([
            [[1., -1.], [0., 0.]],
            [[0., 1.], [0., 0.]],
            [[0., 0.], [-1., 0.]],
            [[0., 0.], [1., 0.]],
        ]),
        a_pinv: from_slices([
            [[0., 1.], [1., 0.]],
            [[0., 1.], [1., -1.]],
            [[0., 1.], [0., 0.]],
            [[1., 0.], [0., 0.]],
        ]),
        b_pinv: from_slices([
            [[1., 0.], [1., 0.]],
            [[0., -0.5], [0., 0.5]],
            [[0., 0.], [1., 0.]],
            [[0., 0.], [0., 0.]],
        ]),
        reversed: from_slices([
            [[0., -0.5], [1., 0.5]],
            [[0., -0.5], [1., 0.5]],
            [[0., 0.], [1., 0.]],
            [[1., 0.], [1., 0.]],
        ]),
        product_pinv: from_slices([
            [[0., -0.5], [1., 0.5]],
            [[0., 0.], [0., 0.]],
            [[0., 0.], [1., 0.]],
            [[1., 0.], [1., 0.]],
        ]),
    }
}

/// Pair for which `B^(λ)∗A^(λ)` is claimed to be a λ-inverse of `A∗B` even
/// though the hermitian sufficient condition fails.
#[derive(Clone, Debug)]
pub struct ConverseCounterexample {
    pub a: DenseTensor,
    pub b: DenseTensor,
    /// `A∗B`.
    pub product: DenseTensor,
    pub a_inv: DenseTensor,
    pub b_inv: DenseTensor,
    /// `B^(λ)∗A^(λ)`.
    pub reversed: DenseTensor,
    /// The tested product `A∗A^(λ)∗B*∗B`, as listed.
    pub t: DenseTensor,
    /// Its conjugate transpose, as listed.
    pub t_conj: DenseTensor,
}

/// The `{1,4}` case.
///
/// Note: the listed `reversed` tensor equals `b_inv∗a_inv` exactly and
/// satisfies Penrose equation (1) for `A∗B`, but not equation (4); the
/// listed `t` also differs from `A∗a_inv∗B*∗B` recomputed from the other
/// data. Both are kept verbatim.
pub fn one_four_counterexample() -> ConverseCounterexample {
    ConverseCounterexample {
        a: from_slices([
            [[0., 0.], [1., 0.]],
            [[0., 0.], [0., 0.]],
            [[0., -1.], [0., 0.]],
            [[0., 1.], [2., 0.]],
        ]),
        b: from_slices([
            [[1., 0.], [0., 1.]],
            [[0., 1.], [0., 0.]],
            [[0., -1.], [0., 0.]],
            [[0., 0.], [0., 1.]],
        ]),
        product: from_slices([
            [[0., 1.], [3., 0.]],
            [[0., -1.], [0., 0.]],
            [[0., 1.], [0., 0.]],
            [[0., 1.], [2., 0.]],
        ]),
        a_inv: from_slices([
            [[-4., 1.], [-1., 1.]],
            [[1. / 3., 1. / 3.], [0., 1. / 3.]],
            [[-1. / 3., -5. / 6.], [0., 1. / 6.]],
            [[0., 1.], [1., 1.]],
        ]),
        b_inv: from_slices([
            [[1., 0.], [0., -1.]],
            [[1., 1.5], [0., -2.5]],
            [[0., -0.5], [0.5, 0.]],
            [[0., 0.], [0., 1.]],
        ]),
        reversed: from_slices([
            [[-5., -2.], [0.5, 7.5]],
            [[1. / 3., -1. / 6.], [1. / 6., 0.]],
            [[-1. / 3., 5. / 12.], [-5. / 12., 0.5]],
            [[1., 1.], [0.5, -1.5]],
        ]),
        t: from_slices([
            [[0., 0.], [-2., 0.]],
            [[0., 1.], [-1., 0.]],
            [[0., -1.], [1., 0.]],
            [[0., 0.], [0., 0.]],
        ]),
        t_conj: from_slices([
            [[0., 0.], [0., 0.]],
            [[0., 1.], [-1., 0.]],
            [[-2., -1.], [1., 0.]],
            [[0., 0.], [0., 0.]],
        ]),
    }
}

/// The `{1,3}` case.
pub fn one_three_counterexample() -> ConverseCounterexample {
    ConverseCounterexample {
        a: from_slices([
            [[1., 2.], [0., 0.]],
            [[1., 0.], [0., 0.]],
            [[0., 0.], [0., 1.]],
            [[-1., 0.], [0., 0.]],
        ]),
        b: from_slices([
            [[0., 0.], [1., 0.]],
            [[0., 0.], [1., -1.]],
            [[1., 0.], [0., 0.]],
            [[0., 0.], [0., 1.]],
        ]),
        product: from_slices([
            [[1., 0.], [0., 0.]],
            [[2., 0.], [0., 0.]],
            [[1., 2.], [0., 0.]],
            [[-1., 0.], [0., 0.]],
        ]),
        a_inv: from_slices([
            [[0., 0.], [1., 0.]],
            [[0., 0.], [1., 1.]],
            [[0.5, 0.], [1., 1.5]],
            [[0., 1.], [1., 1.]],
        ]),
        b_inv: from_slices([
            [[-2., 1.], [2., 2.]],
            [[0., 0.], [1., 1.]],
            [[-1., 0.], [1., 1.]],
            [[-1., 0.], [1., 2.]],
        ]),
        reversed: from_slices([
            [[0., 0.], [1., 1.]],
            [[-1., 0.], [2., 3.]],
            [[-2.5, 0.5], [3.5, 5.]],
            [[-2., 0.], [3., 4.]],
        ]),
        t: from_slices([
            [[1., 0.], [0., 0.]],
            [[0., 1.], [0., 0.]],
            [[1., 0.], [0., -1.]],
            [[0., 0.], [0., 1.]],
        ]),
        t_conj: from_slices([
            [[1., 0.], [1., 0.]],
            [[0., 1.], [0., 0.]],
            [[0., 0.], [0., 0.]],
            [[0., 0.], [-1., 1.]],
        ]),
    }
}
