mod common;

use common::{h, res, star, star3, unit, zeros};
use num_complex::Complex64;
use proptest::prelude::*;
use tensor_ginv::einstein::{block2x2, column_block, einstein_product, kronecker, row_block, vec};
use tensor_ginv::fixtures::{mp_counterexample, one_four_counterexample};
use tensor_ginv::random::TensorRng;
use tensor_ginv::{flatten, frobenius_distance, DenseTensor, TensorShape};

fn t(rng: &mut TensorRng, rows: &[usize], cols: &[usize]) -> DenseTensor {
    rng.tensor(TensorShape::from_groups(rows, cols).unwrap())
}

fn groups(rng: &mut TensorRng, n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|_| common::group(rng)).collect()
}

/// Same number of axes as `like`, fresh extents.
fn sibling(rng: &mut TensorRng, like: &[usize]) -> Vec<usize> {
    rng.extents(like.len(), 3)
}

#[test]
fn brute_force_contraction_oracle() {
    let mut rng = TensorRng::seed(1);
    let a = t(&mut rng, &[2, 3], &[2, 2]);
    let b = t(&mut rng, &[2, 2], &[3]);
    let c = einstein_product(&a, &b, 2).unwrap();
    assert_eq!(c.shape().extents(), &[2, 3, 3]);
    assert_eq!(c.shape().split(), 2);
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..3 {
            for l in 0..3 {
                let mut sum = Complex64::new(0.0, 0.0);
                for k1 in 0..2 {
                    for k2 in 0..2 {
                        sum += a.get(&[i, j, k1, k2]).unwrap() * b.get(&[k1, k2, l]).unwrap();
                    }
                }
                worst = worst.max((c.get(&[i, j, l]).unwrap() - sum).norm());
            }
        }
    }
    assert!(worst <= 1e-13, "{worst}");
}

#[test]
fn unit_is_neutral_for_example_tensor() {
    let a = mp_counterexample().a;
    assert_eq!(unit(&[2, 2]).star(&a).unwrap(), a);
    assert_eq!(a.star(&unit(&[2, 2])).unwrap(), a);
}

#[test]
fn example_product_matches_listed_entries() {
    let ex = one_four_counterexample();
    let c = star(&ex.a, &ex.b);
    assert_eq!(c, ex.product);
    let hom = flatten(&ex.a).matmul(&flatten(&ex.b)).unwrap();
    assert_eq!(hom.max_abs_diff(&flatten(&c)).unwrap(), 0.0);
}

#[test]
fn vec_of_example_lists_first_row_subblock_first() {
    let a = mp_counterexample().a;
    let v = vec(&a);
    assert_eq!(v.shape().split(), 4);
    // entries a_{11kl} in (k,l) order: a_{1111}, a_{1112}, a_{1121}, a_{1122}
    let first: Vec<f64> = v.data()[..4].iter().map(|z| z.re).collect();
    assert_eq!(first, vec![0.0, 0.0, 1.0, 1.0]);
}

#[test]
fn kronecker_is_not_commutative() {
    let mut rng = TensorRng::seed(2);
    let a = t(&mut rng, &[2], &[2]);
    let b = t(&mut rng, &[2], &[2]);
    assert!(frobenius_distance(&kronecker(&a, &b), &kronecker(&b, &a)).unwrap() > 0.0);
}

#[test]
fn kronecker_with_scalar_unit() {
    let mut rng = TensorRng::seed(3);
    let a = t(&mut rng, &[2, 3], &[3, 2]);
    let k = kronecker(&a, &unit(&[1]));
    assert_eq!(k.shape().extents(), &[2, 3, 1, 3, 2, 1]);
    assert_eq!(k.data(), a.data());
}

#[test]
fn zero_padding_law() {
    let mut rng = TensorRng::seed(4);
    let a = t(&mut rng, &[2, 2], &[3]);
    let i = unit(&[3]);
    let lhs = star(&row_block(&a, &zeros(&[2, 2], &[2])).unwrap(), &column_block(&i, &zeros(&[2], &[3])).unwrap());
    assert!(res(&lhs, &a) <= 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 4);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[1], &g[2]);
        let c = t(&mut rng, &g[2], &g[3]);
        prop_assert!(res(&star(&star(&a, &b), &c), &star(&a, &star(&b, &c))) <= 1e-12);
    }

    #[test]
    fn matricization_homomorphism(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 3);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[1], &g[2]);
        let lhs = flatten(&star(&a, &b));
        prop_assert!(lhs.max_abs_diff(&flatten(&a).matmul(&flatten(&b)).unwrap()).unwrap() <= 1e-13);
        prop_assert_eq!(flatten(&h(&a)), flatten(&a).conj_transpose());
    }

    #[test]
    fn conj_transpose_involution_and_product(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 3);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[1], &g[2]);
        prop_assert_eq!(&h(&h(&a)), &a);
        prop_assert!(res(&h(&star(&a, &b)), &star(&h(&b), &h(&a))) <= 1e-14);
        prop_assert!(a.transpose().conj() == h(&a));
    }

    #[test]
    fn symmetrization_is_hermitian(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let r = common::group(&mut rng);
        let a = t(&mut rng, &r, &r);
        prop_assert!((&a + &h(&a)).is_hermitian(1e-15).unwrap());
    }

    #[test]
    fn kronecker_mixed_product(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 6);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[2], &g[3]);
        let c = t(&mut rng, &g[1], &g[4]);
        let d = t(&mut rng, &g[3], &g[5]);
        let lhs = star(&kronecker(&a, &b), &kronecker(&c, &d));
        let rhs = kronecker(&star(&a, &c), &star(&b, &d));
        prop_assert!(res(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn kronecker_conj_bilinear_associative(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 6);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[2], &g[3]);
        let c = t(&mut rng, &g[2], &g[3]);
        let e = t(&mut rng, &g[4], &g[5]);
        prop_assert!(res(&h(&kronecker(&a, &b)), &kronecker(&h(&a), &h(&b))) <= 1e-15);
        prop_assert!(res(&kronecker(&a, &(&b + &c)), &(&kronecker(&a, &b) + &kronecker(&a, &c))) <= 1e-14);
        prop_assert!(res(&kronecker(&(&b + &c), &a), &(&kronecker(&b, &a) + &kronecker(&c, &a))) <= 1e-14);
        let left = kronecker(&a, &kronecker(&b, &e));
        let right = kronecker(&kronecker(&a, &b), &e);
        prop_assert!(res(&left, &right) <= 1e-15);
        prop_assert_eq!(flatten(&kronecker(&a, &b)), flatten(&a).kron(&flatten(&b)));
    }

    #[test]
    fn kronecker_vec_identity(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let g = groups(&mut rng, 4);
        let a = t(&mut rng, &g[0], &g[1]);
        let b = t(&mut rng, &g[2], &g[3]);
        let d = t(&mut rng, &g[1], &g[3]);
        let lhs = star(&kronecker(&a, &b), &vec(&d));
        let rhs = vec(&star3(&a, &d, &b.transpose()));
        prop_assert!(res(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn block_laws(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let i = common::group(&mut rng);
        let l = sibling(&mut rng, &i);
        let j = common::group(&mut rng);
        let k = sibling(&mut rng, &j);
        let q = common::group(&mut rng);
        let s = common::group(&mut rng);

        let a = t(&mut rng, &i, &j);
        let b = t(&mut rng, &i, &k);
        let c = t(&mut rng, &j, &i);
        let d = t(&mut rng, &k, &i);
        let f = t(&mut rng, &i, &i);
        let ab = row_block(&a, &b).unwrap();
        let cd = column_block(&c, &d).unwrap();
        // (a) F∗[A B] = [F∗A F∗B]
        prop_assert!(res(&star(&f, &ab), &row_block(&star(&f, &a), &star(&f, &b)).unwrap()) <= 1e-12);
        // (b) [C; D]∗F = [C∗F; D∗F]
        prop_assert!(res(&star(&cd, &f), &column_block(&star(&c, &f), &star(&d, &f)).unwrap()) <= 1e-12);
        // (c) [A B]∗[C; D] = A∗C + B∗D
        prop_assert!(res(&star(&ab, &cd), &(&star(&a, &c) + &star(&b, &d))) <= 1e-12);
        // (d) [C; D]∗[A B] = [[C∗A, C∗B], [D∗A, D∗B]]
        let rhs = block2x2(&star(&c, &a), &star(&c, &b), &star(&d, &a), &star(&d, &b)).unwrap();
        prop_assert!(res(&star(&cd, &ab), &rhs) <= 1e-12);

        let a1 = t(&mut rng, &i, &j);
        let b1 = t(&mut rng, &i, &k);
        let a2 = t(&mut rng, &l, &j);
        let b2 = t(&mut rng, &l, &k);
        let m = block2x2(&a1, &b1, &a2, &b2).unwrap();
        let c = t(&mut rng, &j, &q);
        let d = t(&mut rng, &k, &q);
        // (e) [[A1, B1], [A2, B2]]∗[C; D] = [A1∗C + B1∗D; A2∗C + B2∗D]
        let lhs = star(&m, &column_block(&c, &d).unwrap());
        let rhs = column_block(
            &(&star(&a1, &c) + &star(&b1, &d)),
            &(&star(&a2, &c) + &star(&b2, &d)),
        ).unwrap();
        prop_assert!(res(&lhs, &rhs) <= 1e-12);
        // (f) [G H]∗[[A1, B1], [A2, B2]] = [G∗A1 + H∗A2, G∗B1 + H∗B2]
        let g = t(&mut rng, &s, &i);
        let hh = t(&mut rng, &s, &l);
        let lhs = star(&row_block(&g, &hh).unwrap(), &m);
        let rhs = row_block(
            &(&star(&g, &a1) + &star(&hh, &a2)),
            &(&star(&g, &b1) + &star(&hh, &b2)),
        ).unwrap();
        prop_assert!(res(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn sylvester_block_reduction(seed in any::<u64>()) {
        let mut rng = TensorRng::seed(seed);
        let i = common::group(&mut rng);
        let j = common::group(&mut rng);
        let a = t(&mut rng, &i, &i);
        let b = t(&mut rng, &j, &j);
        let x = t(&mut rng, &i, &j);
        let left = row_block(&a, &unit(&i)).unwrap();
        let middle = block2x2(&x, &zeros(&i, &j), &zeros(&i, &j), &x).unwrap();
        let right = column_block(&unit(&j), &b).unwrap();
        let lhs = star3(&left, &middle, &right);
        prop_assert!(res(&lhs, &(&star(&a, &x) + &star(&x, &b))) <= 1e-12);
    }
}
