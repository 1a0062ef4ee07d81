use tensor_ginv::random::TensorRng;
use tensor_ginv::{relative_residual, svd};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(6);
    let a = rng.low_rank(&[2, 3], &[3, 2], 3)?;
    let f = svd(&a)?;
    println!("U {}  S {}  V {}", f.u.shape(), f.core.shape(), f.v.shape());
    println!("singular values: {:?}", f.singular_values().iter().map(|s| format!("{s:.4}")).collect::<Vec<_>>());
    println!("U, V unitary: {} {}", f.u.is_unitary(1e-10)?, f.v.is_unitary(1e-10)?);
    println!("U*S*V^* vs A: {:.2e}", relative_residual(&f.reconstruct()?, &a)?);
    Ok(())
}
