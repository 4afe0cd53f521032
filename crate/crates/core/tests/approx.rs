mod common;

use common::{all_tournaments, is_fvs, random_tournament, rng};
use rand::Rng;
use tfvs_core::approx::{
    greedy_3_approx, kernelize, verify_fvs, Kernel, TriangleFreeVertexRule, Verdict,
};
use tfvs_core::oracle::brute_min_fvs;
use tfvs_core::{Error, Tournament};

#[test]
fn greedy_examples() {
    let r = greedy_3_approx(&Tournament::transitive(6), 0);
    assert_eq!((r.verdict, r.fvs.len()), (Verdict::Found, 0));
    let triangle = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
    let r = greedy_3_approx(&triangle, 1);
    assert_eq!(r.verdict, Verdict::Found);
    assert_eq!(r.fvs, vec![0, 1, 2]);
    assert_eq!(r.triangles_removed(), 1);
    assert_eq!(
        greedy_3_approx(&triangle, 0).verdict,
        Verdict::NoSolutionWithinBudget
    );
}

#[test]
fn greedy_on_rotational_seven() {
    let t = Tournament::rotational(7);
    let opt = brute_min_fvs(&t).unwrap().opt_size;
    let r = greedy_3_approx(&t, 7);
    assert_eq!(r.verdict, Verdict::Found);
    assert!(is_fvs(&t, &r.fvs));
    assert!(r.fvs.len() <= 3 * opt);
}

#[test]
fn greedy_properties_random() {
    let mut r = rng(10);
    for _ in 0..500 {
        let n = r.random_range(1..=10);
        let t = random_tournament(&mut r, n);
        let k = r.random_range(0..=n);
        let res = greedy_3_approx(&t, k);
        let mut seen: Vec<usize> = res.triangles.concat();
        let total = seen.len();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), total, "triangles overlap");
        for tri in &res.triangles {
            assert!(common::is_cycle(&t, tri));
        }
        match res.verdict {
            Verdict::NoSolutionWithinBudget => {
                assert_eq!(res.triangles_removed(), k + 1);
                assert!(brute_min_fvs(&t).unwrap().opt_size > k);
            }
            Verdict::Found => {
                assert!(res.fvs.len() <= 3 * k);
                assert!(is_fvs(&t, &res.fvs));
                assert!(verify_fvs(&t, &res.fvs).unwrap());
            }
        }
    }
}

#[test]
fn kernel_examples() {
    let k = kernelize(&Tournament::transitive(5), 2);
    assert_eq!(k.reduced.len(), 0);
    assert_eq!(k.k_reduced, 2);
    // Vertex 0 beats the triangle 1 -> 2 -> 3 -> 1.
    let t = Tournament::from_fn(4, |i, j| i == 0 || !(i == 1 && j == 3));
    let k = TriangleFreeVertexRule.kernelize(&t, 1);
    assert_eq!(k.ids, vec![1, 2, 3]);
    assert_eq!(k.lift(&[0]), vec![1]);
}

#[test]
fn kernel_preserves_optimum_exhaustive() {
    for n in 0..=6 {
        for t in all_tournaments(n) {
            let k = kernelize(&t, n);
            assert!(k.reduced.len() <= t.len());
            assert_eq!(
                brute_min_fvs(&k.reduced).unwrap().opt_size,
                brute_min_fvs(&t).unwrap().opt_size
            );
        }
    }
}

#[test]
fn kernel_preserves_answers_random() {
    let mut r = rng(11);
    for _ in 0..100 {
        let t = random_tournament(&mut r, 12);
        let opt = brute_min_fvs(&t).unwrap().opt_size;
        let k = kernelize(&t, opt);
        let reduced = brute_min_fvs(&k.reduced).unwrap();
        assert_eq!(reduced.opt_size, opt);
        assert!(is_fvs(&t, &k.lift(&reduced.witness)));
    }
}

#[test]
fn verify_examples() {
    let t = Tournament::rotational(5);
    assert!(verify_fvs(&t, &[0, 1, 2, 3, 4]).unwrap());
    let triangle = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
    assert!(!verify_fvs(&triangle, &[]).unwrap());
    assert!(matches!(
        verify_fvs(&triangle, &[3]),
        Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
    ));
    let w = brute_min_fvs(&t).unwrap().witness;
    assert!(verify_fvs(&t, &w).unwrap());
}
