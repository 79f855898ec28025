mod common;

use common::p;
use windowshift::autoequiv::{cotwist_on_generator, tensor_twist, twist_on_generator};
use windowshift::bundle::{BundleLabel, GradedComplex, StackParams};
use windowshift::characters::{hom_invariant_dimension, pushforward_character, verify_exactness, HomCase};
use windowshift::resolution::{
    jshriek_jlower, pushdown_pi, pushdown_pi_bruteforce, theorem_resolution, unstable_resolution_twisted, Locus,
};
use windowshift::schur::schur_dimension;
use windowshift::window::{gamma_set, gamma_split, in_window};
use windowshift::{Partition, Side};

fn pairs(max_d: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_d).flat_map(|d| (1..d).map(move |n| (d, n)))
}

#[test]
fn conj_identity_exhaustive() {
    for (d, n) in pairs(6) {
        for delta in gamma_set(d, n).unwrap() {
            let twist = twist_on_generator(&delta, d, n).unwrap();
            let cotwist = cotwist_on_generator(&delta, d, n).unwrap();
            assert_eq!(tensor_twist(&cotwist, 1), twist, "δ={delta}, d={d}, n={n}");
        }
    }
}

#[test]
fn route_equivalence_exhaustive() {
    for (d, n) in pairs(6) {
        let (_, full) = gamma_split(d, n).unwrap();
        for delta in full {
            assert_eq!(
                cotwist_on_generator(&delta, d, n).unwrap(),
                unstable_resolution_twisted(&delta, d, n).unwrap(),
                "δ={delta}, d={d}, n={n}"
            );
        }
    }
}

#[test]
fn outputs_land_in_target_windows() {
    for (d, r) in pairs(6) {
        let (fixed, moved) = gamma_split(d, r).unwrap();
        for delta in fixed.iter().chain(&moved) {
            let twist = twist_on_generator(delta, d, r).unwrap();
            let cotwist = cotwist_on_generator(delta, d, r).unwrap();
            for label in twist.labels() {
                assert!(
                    in_window(&label.clone().with_v_shape(Partition::empty()), d, r, 0),
                    "{label}"
                );
            }
            for label in cotwist.labels() {
                assert!(
                    in_window(&label.clone().with_v_shape(Partition::empty()), d, r, -1),
                    "{label}"
                );
            }
        }
        for delta in &fixed {
            let twist = twist_on_generator(delta, d, r).unwrap();
            assert_eq!(twist, GradedComplex::single(BundleLabel::s(r, delta, 1).unwrap()));
        }
    }
}

#[test]
fn functors_preserve_rank() {
    for (d, r) in pairs(6) {
        let params = StackParams::new(d, r).unwrap();
        for delta in gamma_set(d, r).unwrap() {
            let expected = schur_dimension(&delta, r) as i64;
            assert_eq!(
                twist_on_generator(&delta, d, r).unwrap().alternating_rank(&params),
                expected
            );
            assert_eq!(
                cotwist_on_generator(&delta, d, r).unwrap().alternating_rank(&params),
                expected
            );
        }
    }
}

#[test]
fn resolutions_have_zero_generic_rank() {
    // The resolved sheaf is supported on a proper closed substack.
    for d in 1..=6 {
        for r in 1..=d.min(3) {
            let params = StackParams::new(d, r).unwrap();
            for delta in Partition::all_in_box(3, 3) {
                if delta.height() >= r || delta.width() > d - r + 1 {
                    assert!(theorem_resolution(&delta, d, r).is_err());
                    continue;
                }
                let res = theorem_resolution(&delta, d, r).unwrap();
                assert_eq!(res.complex.alternating_rank(&params), 0, "δ={delta}, d={d}, r={r}");
            }
        }
    }
}

#[test]
fn unstable_resolution_rank_matches_target() {
    for (d, r) in pairs(6) {
        let params = StackParams::new(d, r).unwrap();
        let (_, full) = gamma_split(d, r).unwrap();
        for delta in full {
            let out = unstable_resolution_twisted(&delta, d, r).unwrap();
            assert_eq!(out.alternating_rank(&params), schur_dimension(&delta, r) as i64);
        }
    }
}

#[test]
fn jshriek_terms_carry_the_bracket() {
    for (d, r) in pairs(5) {
        for delta in Partition::all_in_box(d - r + 1, r - 1) {
            let c = jshriek_jlower(&delta, d, r).unwrap();
            assert_eq!(c.len(), d - r + 2);
            if r > 1 {
                assert!(c.labels().all(|l| l.side == Side::S && l.bracket == (d - r) as i64));
            }
        }
    }
    assert!(jshriek_jlower(&p(&[3, 3, 3]), 4, 3).is_err());
}

#[test]
fn pushdown_agreement() {
    for (d, r) in [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)] {
        let mut two_term = 0;
        for gamma in Partition::all_in_box(d - r + 1, r) {
            for locus in [Locus::Stack, Locus::Open] {
                let closed = pushdown_pi(&gamma, d, r, locus).unwrap();
                assert_eq!(
                    closed,
                    pushdown_pi_bruteforce(&gamma, d, r, locus).unwrap(),
                    "γ={gamma}"
                );
                if closed.degrees().count() == 2 {
                    two_term += 1;
                }
            }
        }
        assert!(two_term > 0);
        assert!(pushdown_pi(&Partition::row_of(d - r + 2), d, r, Locus::Stack).is_err());
    }
}

#[test]
fn exactness_small_grid() {
    for (d, r) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        for delta in Partition::all_in_box(d - r + 1, r - 1) {
            assert!(verify_exactness(&delta, d, r, 4).unwrap(), "δ={delta}, d={d}, r={r}");
        }
    }
}

#[test]
fn pushforward_saturates_in_d() {
    let max_degree = 3;
    for r in 1..=3 {
        for delta in Partition::all_in_box(2, r - 1) {
            let d = r + max_degree;
            let a = pushforward_character(&delta, d, r, max_degree).unwrap();
            let b = pushforward_character(&delta, d + 1, r, max_degree).unwrap();
            let a: Vec<_> = a.iter().collect();
            let b: Vec<_> = b.iter().collect();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn hom_dimensions_stabilize() {
    let cases = [
        (HomCase::SelfMap, p(&[2, 1]), 4, 2),
        (HomCase::Tautological, p(&[1]), 3, 2),
        (HomCase::Eta, p(&[2, 2]), 4, 3),
        (HomCase::Eta, p(&[2]), 3, 2),
    ];
    for (case, delta, d, r) in cases {
        let bound = delta.size() + r * (d - r + 1);
        let a = hom_invariant_dimension(case, &delta, d, r, bound).unwrap();
        let b = hom_invariant_dimension(case, &delta, d, r, bound + 2).unwrap();
        assert_eq!((a, b), (1, 1), "{case:?} δ={delta}");
    }
}
