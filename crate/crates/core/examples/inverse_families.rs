//! Sampling `{1}`, `{1,2}`, `{1,3}` and `{1,4}`-inverses of a rank-deficient
//! tensor, then recovering `A†` from a `{1,3}`/`{1,4}` pair.

use tensor_ginv::random::TensorRng;
use tensor_ginv::{
    mp_from_13_14, one_four_family, one_inverse_family, one_three_family, penrose_check, pinv,
    reflexive_from_two, relative_residual, DenseTensor, LambdaKind,
};

fn main() -> tensor_ginv::Result<()> {
    let mut rng = TensorRng::seed(1);
    let a = rng.low_rank(&[2, 3], &[3, 2], 3)?;
    let g = pinv(&a)?;
    let mut free = || rng.tensor(g.shape().clone());

    let one = one_inverse_family(&a, &g, &free())?;
    let other = one_inverse_family(&a, &g, &free())?;
    let samples: [(&str, LambdaKind, DenseTensor); 4] = [
        ("{1}", LambdaKind::ONE, one.clone()),
        ("{1,2}", LambdaKind::ONE_TWO, reflexive_from_two(&a, &one, &other)?),
        ("{1,3}", LambdaKind::ONE_THREE, one_three_family(&a, &g, &free())?),
        ("{1,4}", LambdaKind::ONE_FOUR, one_four_family(&a, &g, &free())?),
    ];
    for (label, kind, x) in &samples {
        let rep = penrose_check(&a, x, 1e-10)?;
        println!(
            "{label:<6} in class: {}  residuals {:?}  |X - A+| = {:.3}",
            rep.satisfies(*kind),
            rep.residuals.map(|r| format!("{r:.1e}")),
            (x - &g).frobenius_norm()
        );
    }

    let mp = mp_from_13_14(&a, &samples[3].2, &samples[2].2)?;
    println!("X(1,4) A X(1,3) vs A+: {:.2e}", relative_residual(&mp, &g)?);
    Ok(())
}
