//! Reverse order law `(A∗B)^(λ) = B^(λ)∗A^(λ)`: one pair where it fails for
//! Moore–Penrose inverses, and a pair meeting the sufficient `B = A*`.

use tensor_ginv::fixtures::{mp_counterexample, one_three_counterexample};
use tensor_ginv::{reverse_order_diagnose, reverse_order_diagnose_with, LambdaKind, ReverseOrderReport};

fn show(title: &str, r: &ReverseOrderReport) {
    println!("{title}: candidate {}", if r.candidate_passes { "passes" } else { "fails" });
    for c in &r.conditions {
        let res = c.residual.map_or("n/a".to_string(), |x| format!("{x:.2e}"));
        println!("  {:<24} {:<5} {res}", c.name, c.holds);
    }
    if let Some(d) = r.distance_to_pinv {
        println!("  |B+A+ - (AB)+|_F = {d:.4}");
    }
}

fn main() -> tensor_ginv::Result<()> {
    let ex = mp_counterexample();
    show("mp, listed pair", &reverse_order_diagnose(&ex.a, &ex.b, LambdaKind::MOORE_PENROSE)?);
    let ah = ex.a.conj_transpose();
    show("mp, B = A*", &reverse_order_diagnose(&ex.a, &ah, LambdaKind::MOORE_PENROSE)?);

    // the law can hold even when the sufficient condition does not
    let ex = one_three_counterexample();
    let r = reverse_order_diagnose_with(&ex.a, &ex.b, LambdaKind::ONE_THREE, &ex.a_inv, &ex.b_inv, 1e-10)?;
    show("{1,3}, listed inverses", &r);
    Ok(())
}
