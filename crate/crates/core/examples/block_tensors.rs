//! Row, column and `2×2` block tensors. Extents add axis by axis and
//! straddling entries are zero.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{relative_residual, BlockSpec, TensorShape};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(3);
    let sq = TensorShape::square(&[2, 2])?;
    let (a1, b1, a2, b2) = (
        rng.tensor(sq.clone()),
        rng.tensor(sq.clone()),
        rng.tensor(sq.clone()),
        rng.tensor(sq.clone()),
    );
    let row = BlockSpec::Row(&a1, &b1).build()?;
    println!("[A B]: {}", row.shape());
    let m = BlockSpec::TwoByTwo { a1: &a1, b1: &b1, a2: &a2, b2: &b2 }.build()?;
    println!("[[A1 B1]; [A2 B2]]: {}", m.shape());

    let (c, d) = (rng.tensor(sq.clone()), rng.tensor(sq));
    let col = BlockSpec::Column(&c, &d).build()?;
    let lhs = m.star(&col)?;
    let top = a1.star(&c)?.try_add(&b1.star(&d)?)?;
    let bottom = a2.star(&c)?.try_add(&b2.star(&d)?)?;
    let rhs = BlockSpec::Column(&top, &bottom).build()?;
    println!("block product residual: {:.2e}", relative_residual(&lhs, &rhs)?);
    Ok(())
}
