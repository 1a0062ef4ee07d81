//! Kronecker product of tensors and the identity `(A⊗B)† = A†⊗B†`.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{kronecker, pinv, pinv_kronecker, relative_residual, vec, TensorShape};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(2);
    let a = rng.low_rank(&[2, 2], &[2, 3], 2)?;
    let b = rng.tensor(TensorShape::from_groups(&[3], &[2])?);
    let k = kronecker(&a, &b);
    println!("{} ⊗ {} = {}", a.shape(), b.shape(), k.shape());

    let direct = pinv(&k)?;
    let factored = pinv_kronecker(&a, &b)?;
    println!("pinv(A⊗B) vs A+⊗B+: {:.2e}", relative_residual(&direct, &factored)?);

    // (A⊗Bᵀ)∗vec(X) = vec(A∗X∗B)
    let bb = rng.tensor(TensorShape::from_groups(&[2], &[3])?);
    let x = rng.tensor(TensorShape::from_groups(&[2, 3], &[2])?);
    let lhs = kronecker(&a, &bb.transpose()).star(&vec(&x))?;
    let rhs = vec(&a.star(&x)?.star(&bb)?);
    println!("vec identity residual: {:.2e}", relative_residual(&lhs, &rhs)?);
    Ok(())
}
