mod common;

use common::{poly, Brute};
use matroid_ears::chow::*;
use matroid_ears::corpus;
use matroid_ears::{Limits, Matroid, Polynomial};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn corpus_all() -> Vec<corpus::NamedMatroid> {
    let mut all = corpus::uniform(5, 8);
    all.extend(corpus::small_explicit());
    all.extend(corpus::larger_explicit());
    all
}

#[test]
fn chow_series_count_fy_monomials() {
    for nm in corpus_all() {
        let m = &nm.matroid;
        let oracle = Brute::of(m);
        let series = chow_hilbert(m, &lim()).unwrap();
        assert_eq!(series.polynomial, poly(&oracle.fy_count()), "{}", nm.name);
        if !m.has_loops() {
            let aug = augmented_chow_hilbert(m, &lim()).unwrap();
            assert_eq!(
                aug.polynomial,
                poly(&oracle.augmented_fy_count()),
                "{}",
                nm.name
            );
        }
    }
}

#[test]
fn uniform_path_matches_lattice_path() {
    for n in 0..=7 {
        for d in 0..=n.min(5) {
            let u = Matroid::uniform(d, n).unwrap();
            let e = Matroid::from_bases(n, u.bases(&lim()).unwrap()).unwrap();
            assert_eq!(
                chow_hilbert(&u, &lim()).unwrap().polynomial,
                chow_hilbert(&e, &lim()).unwrap().polynomial
            );
            assert_eq!(
                augmented_chow_hilbert(&u, &lim()).unwrap().polynomial,
                augmented_chow_hilbert(&e, &lim()).unwrap().polynomial,
                "U({d},{n})"
            );
        }
    }
}

#[test]
fn loops_are_ignored_by_the_augmented_series() {
    // U(2,3) plus a loop
    let with_loop = Matroid::from_bases(4, vec![vec![1, 3], vec![1, 4], vec![3, 4]]).unwrap();
    assert!(chow_hilbert(&with_loop, &lim())
        .unwrap()
        .polynomial
        .is_zero());
    assert_eq!(
        augmented_chow_hilbert(&with_loop, &lim())
            .unwrap()
            .polynomial,
        Polynomial::from_i64s(&[1, 4, 1])
    );
    assert_eq!(
        augmented_chow_hilbert(&Matroid::uniform(0, 3).unwrap(), &lim())
            .unwrap()
            .polynomial,
        Polynomial::one()
    );
}

#[test]
fn hand_computed_series() {
    let chow = |d, n| {
        chow_hilbert(&Matroid::uniform(d, n).unwrap(), &lim())
            .unwrap()
            .polynomial
    };
    assert_eq!(chow(2, 3), Polynomial::from_i64s(&[1, 1]));
    assert_eq!(chow(3, 3), Polynomial::from_i64s(&[1, 4, 1]));
    assert_eq!(chow(3, 4), Polynomial::from_i64s(&[1, 7, 1]));
    let aug = |d, n| {
        augmented_chow_hilbert(&Matroid::uniform(d, n).unwrap(), &lim())
            .unwrap()
            .polynomial
    };
    assert_eq!(aug(2, 3), Polynomial::from_i64s(&[1, 4, 1]));
    assert_eq!(aug(1, 3), Polynomial::from_i64s(&[1, 1]));
}

#[test]
fn identities_over_the_full_range() {
    for d in 0..=5 {
        for n in d..=30 {
            if d >= 1 {
                let c = verify_thm51(d, n).unwrap();
                assert!(
                    c.holds,
                    "reversed Bergman h, U({d},{n}): {:?} vs {:?}",
                    c.lhs, c.rhs
                );
            }
            let c = verify_thm52(d, n).unwrap();
            assert!(
                c.holds,
                "reversed augmented h, U({d},{n}): {:?} vs {:?}",
                c.lhs, c.rhs
            );
        }
    }
    for (d, n) in [(4, 189), (5, 83)] {
        assert!(verify_thm51(d, n).unwrap().holds);
        assert!(verify_thm52(d, n).unwrap().holds);
    }
}

#[test]
fn identity_against_the_printed_vector() {
    let printed = Polynomial::from_i64s(&[1, 1933066, 28121900, 60710014, 28680319, 29034396]);
    let c = verify_thm52_with(5, 83, printed.reversed(5).unwrap()).unwrap();
    assert!(c.holds);
    let c = verify_thm51(3, 4).unwrap();
    assert_eq!(c.lhs, Polynomial::from_i64s(&[3, 8, 1]));
    assert_eq!(c.rhs, Polynomial::from_i64s(&[3, 8, 1]));
    assert_eq!(
        verify_thm52(2, 3).unwrap().rhs,
        Polynomial::from_i64s(&[3, 5, 1])
    );
    assert!(verify_thm52_with(2, 3, Polynomial::from_i64s(&[3, 5, 2]))
        .map(|c| !c.holds)
        .unwrap());
}

proptest! {
    #[test]
    fn fy_series_are_palindromic(i in 0usize..64) {
        let all = corpus_all();
        let nm = &all[i % all.len()];
        let series = chow_hilbert(&nm.matroid, &lim()).unwrap();
        if !nm.matroid.has_loops() {
            prop_assert!(series.is_palindromic(), "{}", nm.name);
            prop_assert_eq!(series.polynomial.degree(), Some(nm.matroid.rank().saturating_sub(1)));
        }
        let aug = augmented_chow_hilbert(&nm.matroid, &lim()).unwrap();
        prop_assert!(aug.is_palindromic(), "{}", nm.name);
    }

    #[test]
    fn uniform_fy_series_are_palindromic(d in 1usize..7, extra in 0usize..60) {
        let m = Matroid::uniform(d, d + extra).unwrap();
        prop_assert!(chow_hilbert(&m, &lim()).unwrap().is_palindromic());
        prop_assert!(augmented_chow_hilbert(&m, &lim()).unwrap().is_palindromic());
    }
}
