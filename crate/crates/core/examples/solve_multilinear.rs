//! Solving `A∗X∗B = D`: consistency test, particular solution and the
//! general solution `X(Z)`, along both the direct and the Kronecker route.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{relative_residual, solve_axb, solve_axb_via_kronecker, TensorShape};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(4);
    let a = rng.low_rank(&[2, 3], &[2, 2], 2)?;
    let b = rng.low_rank(&[2], &[3, 2], 1)?;
    let planted = rng.tensor(TensorShape::from_groups(&[2, 2], &[2])?);
    let d = a.star(&planted)?.star(&b)?;

    for (route, out) in [("direct", solve_axb(&a, &b, &d)?), ("kronecker", solve_axb_via_kronecker(&a, &b, &d)?)] {
        println!("{route}: consistent {} (residual {:.2e})", out.consistent, out.residual);
        let g = out.generator.expect("consistent");
        for _ in 0..3 {
            let x = g.apply(&rng.tensor(g.free_shape().clone()))?;
            println!("  A*X(Z)*B vs D: {:.2e}", relative_residual(&a.star(&x)?.star(&b)?, &d)?);
        }
    }

    let noise = rng.tensor(d.shape().clone());
    let out = solve_axb(&a, &b, &noise)?;
    println!("random D: consistent {} (residual {:.2e})", out.consistent, out.residual);
    Ok(())
}
