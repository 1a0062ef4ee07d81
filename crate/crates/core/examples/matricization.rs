//! Flattening turns the Einstein product into matrix multiplication.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{flatten, unflatten, TensorShape};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(7);
    let a = rng.tensor(TensorShape::from_groups(&[2, 3], &[2, 2])?);
    let b = rng.tensor(TensorShape::from_groups(&[2, 2], &[3])?);
    let (fa, fb) = (flatten(&a), flatten(&b));
    println!("{} -> {}x{}", a.shape(), fa.rows(), fa.cols());

    let via_matrix = fa.matmul(&fb)?;
    let via_tensor = flatten(&a.star(&b)?);
    println!("max entry error: {:.2e}", via_matrix.max_abs_diff(&via_tensor)?);

    let back = unflatten(&fa, a.shape().clone())?;
    println!("round trip exact: {}", back == a);
    Ok(())
}
