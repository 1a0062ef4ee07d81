#![allow(dead_code)]

use tensor_ginv::einstein::block2x2;
use tensor_ginv::random::TensorRng;
use tensor_ginv::{
    one_four_family, one_inverse_family, one_three_family, penrose_check, pinv, relative_residual,
    reverse_order_diagnose_with, row_block, svd, DenseTensor, LambdaKind, TensorShape,
};

pub const TOL: f64 = 1e-9;

pub fn res(lhs: &DenseTensor, rhs: &DenseTensor) -> f64 {
    relative_residual(lhs, rhs).unwrap()
}

pub fn star(a: &DenseTensor, b: &DenseTensor) -> DenseTensor {
    a.star(b).unwrap()
}

pub fn star3(a: &DenseTensor, b: &DenseTensor, c: &DenseTensor) -> DenseTensor {
    star(&star(a, b), c)
}

pub fn h(a: &DenseTensor) -> DenseTensor {
    a.conj_transpose()
}

pub fn unit(rows: &[usize]) -> DenseTensor {
    DenseTensor::unit(rows).unwrap()
}

pub fn zeros(rows: &[usize], cols: &[usize]) -> DenseTensor {
    DenseTensor::zeros(TensorShape::from_groups(rows, cols).unwrap())
}

/// One or two axes with extents in `1..=3`.
pub fn group(rng: &mut TensorRng) -> Vec<usize> {
    let axes = 1 + rng.below(2);
    rng.extents(axes, 3)
}

/// Random `[rows|cols]` tensor, rank-deficient about half the time.
pub fn operand(rng: &mut TensorRng, rows: &[usize], cols: &[usize]) -> DenseTensor {
    let m: usize = rows.iter().product();
    let n: usize = cols.iter().product();
    let full = m.min(n);
    if full > 1 && rng.below(2) == 0 {
        let rank = 1 + rng.below(full - 1);
        rng.low_rank(rows, cols, rank).unwrap()
    } else {
        rng.tensor(TensorShape::from_groups(rows, cols).unwrap())
    }
}

pub fn random_pair_shape(rng: &mut TensorRng) -> DenseTensor {
    let (r, c) = (group(rng), group(rng));
    operand(rng, &r, &c)
}

/// Random member of `A{1}` generated from `A†`.
pub fn one_inverse(rng: &mut TensorRng, a: &DenseTensor) -> DenseTensor {
    let g = pinv(a).unwrap();
    let y = rng.tensor(g.shape().clone());
    one_inverse_family(a, &g, &y).unwrap()
}

pub fn one_three(rng: &mut TensorRng, a: &DenseTensor) -> DenseTensor {
    let g = pinv(a).unwrap();
    let y = rng.tensor(g.shape().clone());
    one_three_family(a, &g, &y).unwrap()
}

pub fn one_four(rng: &mut TensorRng, a: &DenseTensor) -> DenseTensor {
    let g = pinv(a).unwrap();
    let y = rng.tensor(g.shape().clone());
    one_four_family(a, &g, &y).unwrap()
}

/// Random unitary tensor on `rows`, taken from an SVD factor.
pub fn unitary(rng: &mut TensorRng, rows: &[usize]) -> DenseTensor {
    let m = rng.tensor(TensorShape::square(rows).unwrap());
    svd(&m).unwrap().u
}

fn idempotent_residual(p: &DenseTensor) -> f64 {
    res(&star(p, p), p)
}

fn hermitian_residual(p: &DenseTensor) -> f64 {
    res(&h(p), p)
}

/// 0 when the two verdicts agree, 1 otherwise.
fn agree(x: bool, y: bool) -> f64 {
    if x == y {
        0.0
    } else {
        1.0
    }
}

/// `A = diag(A0, O)` and `B = diag(O, B0)` in a common 2×2 block layout, so
/// that `A†∗B = B†∗A = O`.
pub fn orthogonal_pair(rng: &mut TensorRng) -> (DenseTensor, DenseTensor) {
    let axes = 1 + rng.below(2);
    let i = rng.extents(axes, 2);
    let l = rng.extents(axes, 2);
    let j = rng.extents(axes, 2);
    let k = rng.extents(axes, 2);
    let a0 = operand(rng, &i, &j);
    let b0 = operand(rng, &l, &k);
    let a = block2x2(&a0, &zeros(&i, &k), &zeros(&l, &j), &zeros(&l, &k)).unwrap();
    let b = block2x2(&zeros(&i, &j), &zeros(&i, &k), &zeros(&l, &j), &b0).unwrap();
    (a, b)
}

pub type Identity = fn(&mut TensorRng) -> f64;

/// `(A*∗A)† = A†∗(A*)†` and `A† = (A*∗A)†∗A*`.
pub fn star_product_pinv(rng: &mut TensorRng) -> f64 {
    let a = random_pair_shape(rng);
    let p = pinv(&a).unwrap();
    let aha = star(&h(&a), &a);
    let lhs = pinv(&aha).unwrap();
    res(&lhs, &star(&p, &pinv(&h(&a)).unwrap())).max(res(&star(&lhs, &h(&a)), &p))
}

/// Five pinv rules, including `(U∗A∗V)† = V*∗A†∗U*`.
pub fn pinv_transform_rules(rng: &mut TensorRng) -> f64 {
    let (r, c) = (group(rng), group(rng));
    let a = operand(rng, &r, &c);
    let ah = h(&a);
    let p = pinv(&a).unwrap();
    let ph = pinv(&ah).unwrap();
    let u = unitary(rng, &r);
    let v = unitary(rng, &c);
    [
        res(&p, &star(&ah, &pinv(&star(&a, &ah)).unwrap())),
        res(&ah, &star3(&ah, &a, &p)),
        res(&ah, &star3(&p, &a, &ah)),
        res(&a, &star3(&a, &ah, &ph)),
        res(&a, &star3(&ph, &ah, &a)),
        res(&pinv(&star3(&u, &a, &v)).unwrap(), &star3(&h(&v), &p, &h(&u))),
        res(&star(&p, &a), &star(&ah, &ph)),
        res(&star(&a, &p), &star(&ph, &ah)),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Hermitian idempotents are their own pinv; `A† = A*` iff `A*∗A` is
/// idempotent; the four projectors built from `A†` are idempotent.
pub fn idempotent_products(rng: &mut TensorRng) -> f64 {
    let r = group(rng);
    let a = operand(rng, &r, &r);
    let p = pinv(&a).unwrap();
    let i = unit(&r);
    let ap = star(&a, &p);
    let pa = star(&p, &a);
    let mut worst = [
        res(&pinv(&ap).unwrap(), &ap),
        idempotent_residual(&ap),
        idempotent_residual(&pa),
        idempotent_residual(&(&i - &ap)),
        idempotent_residual(&(&i - &pa)),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    // partial isometry U∗P: both sides of the equivalence hold
    let hh = operand(rng, &r, &r);
    let proj = star(&hh, &pinv(&hh).unwrap());
    let w = star(&unitary(rng, &r), &proj);
    let lhs = res(&pinv(&w).unwrap(), &h(&w));
    let rhs = idempotent_residual(&star(&h(&w), &w));
    worst = worst.max(lhs).max(rhs);
    // generic A: the two sides agree
    let lhs = res(&p, &h(&a)) <= TOL;
    let rhs = idempotent_residual(&star(&h(&a), &a)) <= TOL;
    worst.max(agree(lhs, rhs))
}

/// `A∗(A*∗A)⁽¹⁾∗A*∗A = A` with `A∗(A*∗A)⁽¹⁾∗A*` hermitian, and
/// `A* = (A*∗A)∗(A*∗A)⁽¹⁾∗A*`.
pub fn gram_one_inverse(rng: &mut TensorRng) -> f64 {
    let a = random_pair_shape(rng);
    let ah = h(&a);
    let aha = star(&ah, &a);
    let g = one_inverse(rng, &aha);
    let m = star3(&a, &g, &ah);
    [
        res(&star(&m, &a), &a),
        hermitian_residual(&m),
        res(&star3(&a, &g, &aha), &a),
        res(&star3(&aha, &g, &ah), &ah),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// If `A⁽¹⁾∗B = B⁽¹⁾∗A = O` (here with `A†`, `B†`) then any `(A+B)⁽¹⁾` is
/// a `{1}`-inverse of `B`.
pub fn sum_one_inverse(rng: &mut TensorRng) -> f64 {
    let (a, b) = orthogonal_pair(rng);
    let a1 = pinv(&a).unwrap();
    let b1 = pinv(&b).unwrap();
    let hyp = star(&a1, &b).max_abs().max(star(&b1, &a).max_abs());
    let s = &a + &b;
    let g = one_inverse(rng, &s);
    hyp.max(res(&star3(&b, &g, &b), &b))
}

/// `B = A∗A⁽¹⁾∗B` iff `B = A∗H` is solvable, with `H = A⁽¹⁾∗B`.
pub fn range_factorization(rng: &mut TensorRng) -> f64 {
    let (r, c, k) = (group(rng), group(rng), group(rng));
    let a = operand(rng, &r, &c);
    let a1 = one_inverse(rng, &a);
    let hh = rng.tensor(TensorShape::from_groups(&c, &k).unwrap());
    let inside = star(&a, &hh);
    let mut worst = res(&star3(&a, &a1, &inside), &inside);
    let h1 = star(&a1, &inside);
    worst = worst.max(res(&star(&a, &h1), &inside));

    let outside = rng.tensor(TensorShape::from_groups(&r, &k).unwrap());
    let projected = res(&star3(&a, &a1, &outside), &outside) <= TOL;
    let solvable = res(&star(&a, &star(&a1, &outside)), &outside) <= TOL;
    worst.max(agree(projected, solvable))
}

/// `T⁻¹∗G∗S⁻¹ ∈ (S∗A∗T){1}` for invertible `S`, `T`.
pub fn transformed_one_inverse(rng: &mut TensorRng) -> f64 {
    let (r, c) = (group(rng), group(rng));
    let a = operand(rng, &r, &c);
    let g = one_inverse(rng, &a);
    let s = rng.near_identity(&r).unwrap();
    let t = rng.near_identity(&c).unwrap();
    let b = star3(&s, &a, &t);
    let x = star3(&pinv(&t).unwrap(), &g, &pinv(&s).unwrap());
    penrose_check(&b, &x, TOL).unwrap().residuals[0]
}

/// `B⁽¹⁾∗A⁽¹⁾ ∈ (A∗B){1}` iff `A⁽¹⁾∗A∗B∗B⁽¹⁾` is idempotent.
pub fn one_reverse_order(rng: &mut TensorRng) -> f64 {
    let (r, c, k) = (group(rng), group(rng), group(rng));
    let a = if rng.below(2) == 0 {
        rng.near_identity(&r).unwrap()
    } else {
        operand(rng, &r, &c)
    };
    let c = a.shape().col_extents().to_vec();
    let b = operand(rng, &c, &k);
    let a1 = one_inverse(rng, &a);
    let b1 = one_inverse(rng, &b);
    let rep = reverse_order_diagnose_with(&a, &b, LambdaKind::ONE, &a1, &b1, TOL).unwrap();
    agree(rep.candidate_passes, rep.conditions[0].holds)
}

/// `[A B]∗[A B]⁽¹⁾∗A = A`; `(A∗A* + B∗B*)∗(…)⁽¹⁾∗A = A` for an orthogonal
/// pair; and the rank-update formula for `(A + U∗V)⁽¹⁾`.
pub fn block_and_update(rng: &mut TensorRng) -> f64 {
    let (r, c) = (group(rng), group(rng));
    let k = rng.extents(c.len(), 3);
    let a = operand(rng, &r, &c);
    let b = operand(rng, &r, &k);
    let rb = row_block(&a, &b).unwrap();
    let g = one_inverse(rng, &rb);
    let first = res(&star3(&rb, &g, &a), &a);

    let (p, q) = orthogonal_pair(rng);
    let s = &star(&p, &h(&p)) + &star(&q, &h(&q));
    let gs = one_inverse(rng, &s);
    let second = res(&star3(&s, &gs, &p), &p);

    let a1 = one_inverse(rng, &a);
    let m = group(rng);
    let u = star3(&a, &a1, &(&rng.tensor(TensorShape::from_groups(&r, &m).unwrap()) * 0.3));
    let v = star3(&(&rng.tensor(TensorShape::from_groups(&m, &c).unwrap()) * 0.3), &a1, &a);
    let inner = &unit(&m) + &star3(&v, &a1, &u);
    let w = pinv(&inner).unwrap();
    let x = &a1 - &star(&star3(&a1, &u, &w), &star(&v, &a1));
    let updated = &a + &star(&u, &v);
    let third = penrose_check(&updated, &x, TOL).unwrap().residuals[0];
    first.max(second).max(third)
}

/// `G ∈ A{1,4}` ⇔ `G∗A∗A* = A*` ⇔ `G∗A = A*∗(A∗A*)⁽¹⁾∗A`, and the `{1,3}`
/// dual `A*∗A∗G = A*` ⇔ `A∗G = A∗(A*∗A)⁽¹⁾∗A*`.
pub fn one_three_four_equivalences(rng: &mut TensorRng) -> f64 {
    let a = random_pair_shape(rng);
    let ah = h(&a);
    let aah1 = one_inverse(rng, &star(&a, &ah));
    let aha1 = one_inverse(rng, &star(&ah, &a));
    let check14 = |g: &DenseTensor| {
        let i = penrose_check(&a, g, TOL).unwrap().satisfies(LambdaKind::ONE_FOUR);
        let ii = res(&star3(g, &a, &ah), &ah) <= TOL;
        let iii = res(&star(g, &a), &star3(&ah, &aah1, &a)) <= TOL;
        (i, ii, iii)
    };
    let check13 = |g: &DenseTensor| {
        let i = penrose_check(&a, g, TOL).unwrap().satisfies(LambdaKind::ONE_THREE);
        let ii = res(&star3(&ah, &a, g), &ah) <= TOL;
        let iii = res(&star(&a, g), &star3(&a, &aha1, &ah)) <= TOL;
        (i, ii, iii)
    };
    let members = [(check14(&one_four(rng, &a)), true), (check13(&one_three(rng, &a)), true)];
    let mut worst: f64 = 0.0;
    for ((i, ii, iii), expect) in members {
        worst = worst.max(agree(i, expect)).max(agree(ii, expect)).max(agree(iii, expect));
    }
    // a generic {1}-inverse: all three verdicts agree, whatever they are
    let g = one_inverse(rng, &a);
    for (i, ii, iii) in [check14(&g), check13(&g)] {
        worst = worst.max(agree(i, ii)).max(agree(i, iii));
    }
    worst
}

/// When the hermitian hypotheses hold (here with `B = A*`), `B^(λ)∗A^(λ)`
/// is a λ-inverse of `A∗B` for λ = {1,4} and {1,3}.
pub fn hermitian_sufficiency(rng: &mut TensorRng) -> f64 {
    let a = random_pair_shape(rng);
    let b = h(&a);
    let mut worst: f64 = 0.0;
    for kind in [LambdaKind::ONE_FOUR, LambdaKind::ONE_THREE] {
        let (ga, gb) = if kind == LambdaKind::ONE_FOUR {
            (one_four(rng, &a), one_four(rng, &b))
        } else {
            (one_three(rng, &a), one_three(rng, &b))
        };
        let rep = reverse_order_diagnose_with(&a, &b, kind, &ga, &gb, TOL).unwrap();
        worst = worst
            .max(rep.conditions[0].residual.unwrap())
            .max(rep.candidate.max_residual(kind));
    }
    worst
}

pub fn identities() -> Vec<(&'static str, Identity)> {
    vec![
        ("pinv of A*A and A = (A*A)^+ A*", star_product_pinv as Identity),
        ("pinv transform rules", pinv_transform_rules),
        ("idempotent products", idempotent_products),
        ("{1}-inverse of A*A equivalences", gram_one_inverse),
        ("sum of orthogonal pair", sum_one_inverse),
        ("range factorization", range_factorization),
        ("S*A*T transformation", transformed_one_inverse),
        ("{1} reverse order iff idempotent", one_reverse_order),
        ("block and update formulas", block_and_update),
        ("{1,3}/{1,4} equivalences", one_three_four_equivalences),
        ("hermitian sufficiency for {1,4} and {1,3}", hermitian_sufficiency),
    ]
}
