//! Moore–Penrose inverse of a small `2×2×2×2` tensor, checked against
//! hand-listed values.

use tensor_ginv::fixtures::mp_counterexample;
use tensor_ginv::{penrose_check, pinv};

fn main() -> tensor_ginv::Result<()> {
    let ex = mp_counterexample();
    let x = pinv(&ex.a)?;
    println!("A  = {}", ex.a.shape());
    println!("A+ = {}", x.shape());
    println!("max |A+ - listed| = {:.2e}", (&x - &ex.a_pinv).max_abs());

    let report = penrose_check(&ex.a, &x, 1e-10)?;
    for (k, (r, ok)) in report.residuals.iter().zip(report.satisfied).enumerate() {
        println!("eq ({}) residual {r:.2e} {}", k + 1, if ok { "ok" } else { "FAIL" });
    }
    Ok(())
}
