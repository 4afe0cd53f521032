mod common;

use common::{all_tournaments, is_fvs, random_tournament, rng};
use rand::Rng;
use tfvs_core::oracle::{
    all_fvs_up_to, brute_min_fvs, brute_min_fvs_avoiding, triangle_branch_fvs,
};
use tfvs_core::{Error, Tournament};

#[test]
fn triangle_branching_agrees_exhaustively() {
    for n in 0..=6 {
        for t in all_tournaments(n) {
            let opt = brute_min_fvs(&t).unwrap();
            assert!(is_fvs(&t, &opt.witness));
            for k in 0..=n {
                match triangle_branch_fvs(&t, k) {
                    Some(s) => {
                        assert!(k >= opt.opt_size);
                        assert!(s.len() <= k && is_fvs(&t, &s));
                    }
                    None => assert!(k < opt.opt_size),
                }
            }
        }
    }
}

#[test]
fn triangle_branching_agrees_random() {
    let mut r = rng(50);
    for _ in 0..1000 {
        let n = r.random_range(1..=14);
        let t = random_tournament(&mut r, n);
        let opt = brute_min_fvs(&t).unwrap().opt_size;
        for k in 0..=4 {
            assert_eq!(triangle_branch_fvs(&t, k).is_some(), k >= opt);
        }
    }
}

#[test]
fn brute_force_basics() {
    assert_eq!(
        brute_min_fvs(&Tournament::transitive(9)).unwrap().opt_size,
        0
    );
    assert_eq!(
        brute_min_fvs(&Tournament::rotational(3)).unwrap().opt_size,
        1
    );
    // The rotational tournament on 5 vertices needs two deletions.
    assert_eq!(
        brute_min_fvs(&Tournament::rotational(5)).unwrap().opt_size,
        2
    );
    assert!(matches!(
        brute_min_fvs(&Tournament::transitive(21)),
        Err(Error::TooLarge {
            size: 21,
            limit: 20
        })
    ));
}

#[test]
fn avoiding_and_listing() {
    let triangle = Tournament::rotational(3);
    assert!(brute_min_fvs_avoiding(&triangle, &[0, 1, 2])
        .unwrap()
        .is_none());
    assert_eq!(
        brute_min_fvs_avoiding(&triangle, &[0, 1])
            .unwrap()
            .unwrap()
            .witness,
        vec![2]
    );
    assert_eq!(
        all_fvs_up_to(&triangle, 2).unwrap(),
        vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2]
        ]
    );
    let mut r = rng(51);
    let t = random_tournament(&mut r, 9);
    for s in all_fvs_up_to(&t, 3).unwrap() {
        assert!(is_fvs(&t, &s));
    }
}
