//! Generalized inverses of even-order complex tensors under the Einstein
//! product.
//!
//! Tensors are dense, stored row-major, and carry a split that divides their
//! axes into a row group and a column group. Flattening along that split
//! turns the Einstein product into a matrix product, which is how the
//! inverses here are computed.
//!
//! ```
//! use tensor_ginv::{pinv, penrose_check, DenseTensor, TensorShape};
//!
//! let shape = TensorShape::square(&[2, 2]).unwrap();
//! let a = DenseTensor::from_real(shape, &[
//!     0., 1., 0., 1., 0., 0., 1., 0., 0., 0., 0., -1., 1., -1., 0., 0.,
//! ]).unwrap();
//! let x = pinv(&a).unwrap();
//! assert!(penrose_check(&a, &x, 1e-10).unwrap().all());
//! ```

pub mod cli;
pub mod einstein;
pub mod error;
pub mod fixtures;
pub mod inverses;
pub mod io;
mod jacobi;
pub mod matricization;
pub mod random;
pub mod shape;
pub mod solver;
pub mod tensor;

pub use einstein::{
    block2x2, column_block, einstein_product, kronecker, row_block, vec, BlockSpec,
};
pub use error::{Error, Result};
pub use inverses::{
    mp_from_13_14, one_four_family, one_inverse_family, one_three_family, penrose_check, pinv,
    pinv_kronecker, pinv_with_tol, reflexive_from_two, reverse_order_diagnose,
    reverse_order_diagnose_with, svd, LambdaKind, PenroseReport, ReverseOrderReport, SvdTriple,
};
pub use matricization::{flatten, matrix_pinv, unflatten, FlatMatrix};
pub use shape::TensorShape;
pub use solver::{
    common_solution, solve_ax, solve_axb, solve_axb_via_kronecker, solve_axb_with,
    verify_unique_triple, SolutionGenerator, SolveOutcome,
};
pub use tensor::{frobenius_distance, relative_residual, DenseTensor};
