use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::root_data::{CartanType, Coweight, RootSystem};

fn weyl(ty: CartanType, n: usize) -> WeylGroup {
    WeylGroup::new(RootSystem::new(ty, n).unwrap())
}

fn a2() -> (WeylGroup, AffineWeylGroup) {
    let w = weyl(CartanType::A, 2);
    let a = AffineWeylGroup::new(&w);
    (w, a)
}

/// Subword oracle: all products of subwords of one reduced word.
fn subword_set<G: Coxeter>(g: &G, x: &G::Elt) -> BTreeSet<G::Elt> {
    let (tau, word) = reduced_word(g, x);
    let mut out = BTreeSet::new();
    for mask in 0..1u32 << word.len() {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        out.insert(apply_word(g, &tau, &sub));
    }
    out
}

fn leq_oracle<G: Coxeter>(g: &G, z: &G::Elt, x: &G::Elt) -> bool {
    subword_set(g, x).contains(z)
}

fn affine_ball(a: &AffineWeylGroup, max_len: usize) -> Vec<AffineElt> {
    let mut seen: BTreeSet<AffineElt> = a.omega_group().iter().map(|o| o.elt.clone()).collect();
    let mut frontier: Vec<AffineElt> = seen.iter().cloned().collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for &i in a.nodes() {
                let y = a.mul_simple_right(x, i);
                if a.length(&y) > a.length(x) && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[test]
fn affine_lengths() {
    let (_, a) = a2();
    let rs = a.rs().clone();
    let t = a.translation(&rs.highest_coroot().neg());
    assert_eq!(a.length(&t), 4);
    assert_eq!(a.length(a.simple(0)), 1);
    assert_eq!(a.length(&a.identity()), 0);
    let t1 = a.translation(&Coweight::fundamental(2, 1).neg());
    assert_eq!(a.length(&t1), 2);
    assert_eq!(
        a.length(&t1),
        rs.two_rho_pairing(&Coweight::fundamental(2, 1)) as usize
    );
}

#[test]
fn im_length_counts_affine_inversions() {
    for ty in [CartanType::A, CartanType::B, CartanType::C] {
        let w = weyl(ty, 2);
        let a = AffineWeylGroup::new(&w);
        for x in affine_ball(&a, 5) {
            assert_eq!(a.inversion_classical_roots(&x).len(), a.length(&x), "{x:?}");
        }
    }
}

#[test]
fn simple_reflections_are_involutions() {
    let (_, a) = a2();
    for &i in a.nodes() {
        let s = a.simple(i).clone();
        assert_eq!(a.mul(&s, &s), a.identity());
        assert!(a.is_right_descent(&s, i));
    }
}

#[test]
fn bruhat_examples() {
    let (w, a) = a2();
    let s1 = w.simple(1).clone();
    let s2 = w.simple(2).clone();
    let s12 = w.mul(&s1, &s2);
    assert!(bruhat_leq(&w, &s1, &s12));
    assert!(!bruhat_leq(&w, &s1, &s2));
    assert!(!bruhat_leq(&w, &s2, &s1));
    let t = a.translation(&Coweight::fundamental(2, 1).neg());
    let tau = a.omega_of(&t);
    assert_ne!(tau.label(), 0);
    let (_, word) = reduced_word(&a, &t);
    let u = apply_word(&a, &a.identity(), &word);
    assert_eq!(a.length(&u), a.length(&t));
    assert!(!bruhat_leq(&a, &u, &t));
    assert!(!bruhat_leq(&a, &t, &u));
    assert!(!bruhat_leq(&a, &a.identity(), &t));
}

#[test]
fn bruhat_matches_subword_property() {
    for ty in [CartanType::A, CartanType::B] {
        let w = weyl(ty, 2);
        for x in w.elements() {
            let cone = subword_set(&w, x);
            for z in w.elements() {
                assert_eq!(bruhat_leq(&w, z, x), cone.contains(z));
            }
        }
    }
    let (_, a) = a2();
    let ball = affine_ball(&a, 4);
    for x in &ball {
        let cone = subword_set(&a, x);
        for z in &ball {
            assert_eq!(bruhat_leq(&a, z, x), cone.contains(z), "{z:?} <= {x:?}");
        }
    }
}

#[test]
fn lower_cone_examples() {
    let (w, a) = a2();
    assert_eq!(lower_cone(&w, &w.identity()), vec![w.identity()]);
    let s12 = w.from_word(&[1, 2]).unwrap();
    let cone = lower_cone(&w, &s12);
    assert_eq!(cone.len(), 4);
    let expect: BTreeSet<WeylElt> = [vec![], vec![1], vec![2], vec![1, 2]]
        .iter()
        .map(|v| w.from_word(v).unwrap())
        .collect();
    assert_eq!(cone.into_iter().collect::<BTreeSet<_>>(), expect);
    assert_eq!(lower_cone(&w, w.longest()).len(), 6);
    for x in affine_ball(&a, 5) {
        let cone: BTreeSet<_> = lower_cone(&a, &x).into_iter().collect();
        assert_eq!(cone, subword_set(&a, &x));
    }
}

#[test]
fn reduced_word_examples() {
    let (w, a) = a2();
    let (tau, word) = reduced_word(&a, &a.identity());
    assert_eq!(tau, a.identity());
    assert!(word.is_empty());
    let (_, wo) = reduced_word(&w, w.longest());
    assert_eq!(wo.len(), 3);
    assert!(wo.iter().all(|&i| i == 1 || i == 2));
    let t = a.translation(&Coweight::fundamental(2, 1).neg());
    let (tau, word) = reduced_word(&a, &t);
    assert_ne!(tau, a.identity());
    assert_eq!(a.length(&tau), 0);
    assert_eq!(word.len(), 2);
}

#[test]
fn reduced_word_round_trip_and_json() {
    for ty in [CartanType::A, CartanType::C] {
        let w = weyl(ty, 2);
        let a = AffineWeylGroup::new(&w);
        for x in affine_ball(&a, 5) {
            let (tau, word) = reduced_word(&a, &x);
            assert_eq!(word.len(), a.length(&x));
            assert_eq!(apply_word(&a, &tau, &word), x);
            let j = a.to_json(&x);
            assert_eq!(a.from_json(&j).unwrap(), x);
        }
    }
}

#[test]
fn all_reduced_words_are_reduced() {
    let w = weyl(CartanType::B, 2);
    let (_, words) = all_reduced_words(&w, w.longest());
    assert_eq!(words.len(), 2);
    for word in words {
        assert_eq!(&w.from_word(&word).unwrap(), w.longest());
    }
}

#[test]
fn coset_rep_examples() {
    let (w, _) = a2();
    let j = NodeSet::from_iter([2]);
    let reps = coset_reps(&w, &j);
    let expect: BTreeSet<WeylElt> = [vec![], vec![1], vec![2, 1]]
        .iter()
        .map(|v| w.from_word(v).unwrap())
        .collect();
    assert_eq!(
        reps.min_right.iter().cloned().collect::<BTreeSet<_>>(),
        expect
    );
    assert_eq!(reps.min_right.len(), w.elements().len() / 2);
    let wj = longest_in_parabolic(&w, &j);
    assert_eq!(max_in_coset(&w, &w.identity(), &j, Side::Right), wj);
    let s1 = w.simple(1).clone();
    assert_eq!(
        max_in_coset(&w, &s1, &j, Side::Right),
        w.from_word(&[1, 2]).unwrap()
    );
    assert_eq!(reps.max_right.len(), 3);
    assert_eq!(reps.min_left.len(), 3);
}

fn brute_star<G: Coxeter>(g: &G, x: &G::Elt, y: &G::Elt) -> G::Elt {
    let set: BTreeSet<G::Elt> = subword_set(g, x)
        .iter()
        .flat_map(|u| subword_set(g, y).into_iter().map(move |v| (u.clone(), v)))
        .map(|(u, v)| g.mul(&u, &v))
        .collect();
    let maxes: Vec<&G::Elt> = set
        .iter()
        .filter(|m| set.iter().all(|z| leq_oracle(g, z, m)))
        .collect();
    assert_eq!(maxes.len(), 1);
    maxes[0].clone()
}

fn brute_min<G: Coxeter>(g: &G, set: BTreeSet<G::Elt>) -> G::Elt {
    let mins: Vec<&G::Elt> = set
        .iter()
        .filter(|m| set.iter().all(|z| leq_oracle(g, m, z)))
        .collect();
    assert_eq!(mins.len(), 1);
    mins[0].clone()
}

#[test]
fn demazure_products_match_definitions_finite() {
    for ty in [CartanType::A, CartanType::B] {
        let w = weyl(ty, 2);
        for x in w.elements() {
            for y in w.elements() {
                assert_eq!(demazure_star(&w, x, y), brute_star(&w, x, y));
                let trir: BTreeSet<_> = subword_set(&w, x).iter().map(|u| w.mul(u, y)).collect();
                assert_eq!(demazure_trir(&w, x, y), brute_min(&w, trir));
                let tril: BTreeSet<_> = subword_set(&w, y).iter().map(|v| w.mul(x, v)).collect();
                assert_eq!(demazure_tril(&w, x, y), brute_min(&w, tril));
            }
        }
    }
}

#[test]
fn demazure_products_match_definitions_affine() {
    let (_, a) = a2();
    let ball = affine_ball(&a, 3);
    for x in &ball {
        for y in &ball {
            assert_eq!(demazure_star(&a, x, y), brute_star(&a, x, y));
            let trir: BTreeSet<_> = subword_set(&a, x).iter().map(|u| a.mul(u, y)).collect();
            assert_eq!(demazure_trir(&a, x, y), brute_min(&a, trir));
        }
    }
}

#[test]
fn demazure_examples() {
    let (w, _) = a2();
    let e = w.identity();
    let s1 = w.simple(1).clone();
    let s21 = w.from_word(&[2, 1]).unwrap();
    assert_eq!(demazure_star(&w, &s1, &e), s1);
    assert_eq!(demazure_star(&w, &s1, &s1), s1);
    assert_eq!(&demazure_star(&w, &s1, &s21), w.longest());
    assert_eq!(demazure_trir(&w, &e, &s21), s21);
    assert_eq!(demazure_trir(&w, &s1, &s1), e);
    assert_eq!(demazure_tril(&w, &s21, &e), s21);
    assert_eq!(demazure_tril(&w, &s1, &s1), e);
    let j = NodeSet::from_iter([2]);
    let wj = longest_in_parabolic(&w, &j);
    for x in w.elements() {
        assert_eq!(
            demazure_trir(&w, &wj, x),
            min_in_coset(&w, x, &j, Side::Left)
        );
        assert_eq!(
            demazure_tril(&w, x, &wj),
            min_in_coset(&w, x, &j, Side::Right)
        );
        assert_eq!(
            demazure_star(&w, &wj, x),
            max_in_coset(&w, x, &j, Side::Left)
        );
        assert_eq!(
            demazure_star(&w, x, &wj),
            max_in_coset(&w, x, &j, Side::Right)
        );
    }
}

#[test]
fn st_conjugation() {
    let (w, _) = a2();
    assert_eq!(w.st_conjugate(&w.identity()), w.identity());
    assert_eq!(&w.st_conjugate(w.simple(1)), w.simple(2));
    assert_eq!(
        w.st_subset(&NodeSet::from_iter([1])),
        NodeSet::from_iter([2])
    );
    let b2 = weyl(CartanType::B, 2);
    for x in b2.elements() {
        assert_eq!(&b2.st_conjugate(x), x);
    }
    let a3 = weyl(CartanType::A, 3);
    for x in a3.elements() {
        assert_eq!(&a3.st_conjugate(&a3.st_conjugate(x)), x);
        for y in a3.elements() {
            assert_eq!(
                a3.st_conjugate(&a3.mul(x, y)),
                a3.mul(&a3.st_conjugate(x), &a3.st_conjugate(y))
            );
        }
    }
}

#[test]
fn omega_groups() {
    for (ty, n, ord) in [
        (CartanType::A, 2, 3),
        (CartanType::B, 2, 2),
        (CartanType::C, 3, 2),
        (CartanType::D, 4, 4),
        (CartanType::A, 3, 4),
    ] {
        let w = weyl(ty, n);
        let a = AffineWeylGroup::new(&w);
        let om = a.omega_group();
        assert_eq!(om.len(), ord);
        assert_eq!(om.len() as i64, w.rs().fundamental_group_order());
        assert_eq!(om[0].elt, a.identity());
        for o in om {
            assert_eq!(a.length(&o.elt), 0);
            // diagram automorphism: affine Cartan entries are preserved.
            let cart = |i: usize, j: usize| affine_cartan(&a, i, j);
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(cart(i, j), cart(o.perm[i], o.perm[j]));
                }
            }
            for p in om {
                let prod = a.mul(&o.elt, &p.elt);
                assert!(om.iter().any(|q| q.elt == prod));
            }
        }
        for r in a.rs().roots() {
            let ar = crate::root_data::AffineRoot::new(r.clone(), 3);
            assert_eq!(a.omega_act(&om[0], &ar), ar);
        }
    }
}

/// `<α_i∨, α_j>` on the affine diagram, read off from `s_i(α_j) = α_j - a_ij α_i`.
fn affine_cartan(a: &AffineWeylGroup, i: usize, j: usize) -> i32 {
    let aj = a.simple_affine_root(j);
    let img = a.apply(a.simple(i), &aj);
    let ai = a.simple_affine_root(i);
    let diff: Vec<i32> = aj
        .classical
        .0
        .iter()
        .zip(&img.classical.0)
        .map(|(p, q)| p - q)
        .collect();
    let k = ai.classical.0.iter().position(|&c| c != 0).unwrap();
    diff[k] / ai.classical.0[k]
}

#[test]
fn length_is_subadditive() {
    let (_, a) = a2();
    let ball = affine_ball(&a, 3);
    for x in &ball {
        for y in &ball {
            let xy = a.mul(x, y);
            assert!(a.length(&xy) <= a.length(x) + a.length(y));
            let (tx, wx) = reduced_word(&a, x);
            let (ty, wy) = reduced_word(&a, y);
            // concatenation of reduced words is reduced iff lengths add
            let conj = a.mul(
                &a.mul(&a.inverse(&ty), &apply_word(&a, &a.identity(), &wx)),
                &ty,
            );
            let (_, cw) = reduced_word(&a, &conj);
            let mut full = cw;
            full.extend(wy);
            let z = apply_word(&a, &a.mul(&tx, &ty), &full);
            assert_eq!(z, xy);
        }
    }
}

fn arb_affine() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..3, proptest::collection::vec(0usize..3, 0..8))
}

proptest! {
    #[test]
    fn affine_multiplication_is_associative(x in arb_affine(), y in arb_affine(), z in arb_affine()) {
        let (_, a) = a2();
        let mk = |(o, w): (usize, Vec<usize>)| {
            let tau = a.omega_group()[o].elt.clone();
            apply_word(&a, &tau, &w)
        };
        let (x, y, z) = (mk(x), mk(y), mk(z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(&x, &a.inverse(&x)), a.identity());
        prop_assert_eq!(a.length(&a.inverse(&x)), a.length(&x));
    }
}

#[test]
fn demazure_suites_pass() {
    for ty in [CartanType::A, CartanType::B] {
        let r = verify_demazure_finite(&weyl(ty, 2));
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.n_checked > 1000);
    }
    let (_, a) = a2();
    let r = verify_demazure_affine(&a, 200, 8, 7);
    assert!(r.passed(), "{:?}", r.failures);
}
