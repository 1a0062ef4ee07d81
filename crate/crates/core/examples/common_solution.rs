//! A common solution of `A∗X = B` and `X∗D = F`, plus the single-sided
//! `A∗X = B`.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{common_solution, relative_residual, solve_ax, TensorShape};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(5);
    let a = rng.low_rank(&[3], &[2, 2], 2)?;
    let d = rng.low_rank(&[2], &[3, 2], 1)?;
    let x = rng.tensor(TensorShape::from_groups(&[2, 2], &[2])?);
    let (b, f) = (a.star(&x)?, x.star(&d)?);

    let ax = solve_ax(&a, &b, true)?;
    println!("A*X = B: consistent {}", ax.consistent);

    let out = common_solution(&a, &b, &d, &f)?;
    println!("common: consistent {}", out.consistent);
    let g = out.generator.expect("consistent");
    let y = g.apply(&rng.tensor(g.free_shape().clone()))?;
    println!("  A*X - B: {:.2e}", relative_residual(&a.star(&y)?, &b)?);
    println!("  X*D - F: {:.2e}", relative_residual(&y.star(&d)?, &f)?);

    let f2 = rng.tensor(x.shape().clone()).star(&d)?;
    println!("perturbed F: consistent {}", common_solution(&a, &b, &d, &f2)?.consistent);
    Ok(())
}
