use std::collections::BTreeSet;

use super::*;
use crate::coxeter::{apply_word, Coxeter};
use crate::root_data::CartanType;

fn inst(ty: CartanType, n: usize, lambda: &[i32]) -> Instance {
    Instance::new(RootSystem::new(ty, n).unwrap(), Coweight(lambda.to_vec())).unwrap()
}

fn el(i: &Instance, word: &[usize]) -> WeylElt {
    i.finite().from_word(word).unwrap()
}

fn pair(i: &Instance, x: &[usize], y: &[usize]) -> QJPair {
    QJPair {
        x: el(i, x),
        y: el(i, y),
    }
}

/// Adm by scanning every element up to the top length against every translation.
fn adm_oracle(i: &Instance) -> BTreeSet<AffineElt> {
    let a = i.affine();
    let top = i.t_neg_lambda().length();
    let tops: Vec<AffineElt> = i
        .finite()
        .elements()
        .iter()
        .map(|w| i.translate(w))
        .collect();
    let mut ball: BTreeSet<AffineElt> = a.omega_group().iter().map(|o| o.elt.clone()).collect();
    let mut frontier: Vec<AffineElt> = ball.iter().cloned().collect();
    for _ in 0..top {
        let mut next = Vec::new();
        for x in &frontier {
            for &s in a.nodes() {
                let y = a.mul_simple_right(x, s);
                if y.length() > x.length() && ball.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    ball.into_iter()
        .filter(|z| tops.iter().any(|t| bruhat_leq(a, z, t)))
        .collect()
}

#[test]
fn qj_examples() {
    let i = inst(CartanType::A, 2, &[1, 0]);
    assert_eq!(i.j(), &NodeSet::from_iter([2]));
    let qj = build_qj(&i);
    assert_eq!(qj.len(), 7);
    assert!(qj.contains(&pair(&i, &[2, 1], &[2])));
    assert!(!qj.contains(&pair(&i, &[1], &[2])));

    let reg = inst(CartanType::A, 2, &[1, 1]);
    let expect: usize = reg
        .finite()
        .elements()
        .iter()
        .map(|x| lower_cone(reg.finite(), x).len())
        .sum();
    assert_eq!(build_qj(&reg).len(), expect);

    let zero = inst(CartanType::A, 2, &[0, 0]);
    assert_eq!(build_qj(&zero).len(), 1);
}

#[test]
fn non_dominant_is_rejected() {
    let rs = RootSystem::new(CartanType::A, 2).unwrap();
    assert!(Instance::new(rs.clone(), Coweight(vec![-1, 0])).is_err());
    assert!(Instance::new(rs, Coweight(vec![1])).is_err());
}

#[test]
fn preceq_examples() {
    let i = inst(CartanType::A, 2, &[1, 0]);
    let p = pair(&i, &[2, 1], &[2, 1]);
    let q = pair(&i, &[2, 1], &[]);
    assert!(preceq(&i, &p, &p));
    let pq = preceq(&i, &p, &q);
    let qp = preceq(&i, &q, &p);
    assert!(pq != qp);
    // (x, x) sits at grade 0 and (x, e) at grade ℓ(x)
    assert!(pq);
    for ty in [CartanType::A, CartanType::B] {
        let i = inst(ty, 2, &[1, 0]);
        let qj = build_qj(&i);
        assert!(qj_poset(i.finite(), i.j(), &qj).is_ok());
    }
}

#[test]
fn theta_examples() {
    let i = inst(CartanType::A, 2, &[1, 0]);
    let e = i.finite().identity();
    assert_eq!(
        &theta(
            &i,
            &QJPair {
                x: e.clone(),
                y: e.clone()
            }
        ),
        i.t_neg_lambda()
    );
    assert_eq!(theta(&i, &pair(&i, &[2, 1], &[])).length(), 0);
    for x in i.min_reps() {
        let z = theta(
            &i,
            &QJPair {
                x: x.clone(),
                y: x.clone(),
            },
        );
        assert_eq!(z, i.translate(x));
        assert_eq!(z.length(), 2);
    }
}

#[test]
fn admissible_examples() {
    let i = inst(CartanType::A, 2, &[1, 0]);
    let adm = admissible_set(&i);
    assert_eq!(adm.len(), 7);
    assert_eq!(
        adm.elements.iter().cloned().collect::<BTreeSet<_>>(),
        adm_oracle(&i)
    );
    let lens: Vec<usize> = adm.elements.iter().map(|z| z.length()).collect();
    assert_eq!(lens, vec![0, 1, 1, 1, 2, 2, 2]);
    assert_eq!(adm.mu, Coweight(vec![0, -1]).neg());

    let z = inst(CartanType::A, 2, &[0, 0]);
    let adm0 = admissible_set(&z);
    assert_eq!(adm0.elements, vec![z.affine().identity()]);

    let g24 = inst(CartanType::A, 3, &[0, 1, 0]);
    let adm = admissible_set(&g24);
    assert_eq!(adm.len(), 33);
    assert_eq!(
        adm.elements.iter().cloned().collect::<BTreeSet<_>>(),
        adm_oracle(&g24)
    );
}

#[test]
fn admissible_matches_oracle_non_cominuscule() {
    for lambda in [[1, 1], [2, 0]] {
        let i = inst(CartanType::A, 2, &lambda);
        let adm = admissible_set(&i);
        assert_eq!(
            adm.elements.iter().cloned().collect::<BTreeSet<_>>(),
            adm_oracle(&i)
        );
    }
}

#[test]
fn prop_equivalence() {
    for ty in [CartanType::A, CartanType::B] {
        let i = inst(ty, 2, &[1, 0]);
        let r = verify_prop_equiv(&i);
        assert!(r.passed(), "{:?}", r.failures);
        let n = i.min_reps().len() * i.finite().elements().len();
        assert_eq!(r.n_checked, n * n);
    }
    let i = inst(CartanType::A, 2, &[1, 0]);
    let p = pair(&i, &[1], &[2]);
    assert_eq!(prop_conditions(&i, &p, &p), [true; 3]);
}

#[test]
fn theorem_small() {
    for (ty, n, l) in [
        (CartanType::A, 2, vec![1, 0]),
        (CartanType::A, 2, vec![1, 1]),
        (CartanType::B, 2, vec![0, 1]),
    ] {
        let i = inst(ty, n, &l);
        let r = verify_theorem_combin(&i);
        assert!(r.passed(), "{}: {:?}", i.name(), r.failures);
    }
    let i = inst(CartanType::A, 2, &[1, 0]);
    let dc = double_coset(&i);
    let zmin = i.min_double_coset();
    assert!(dc.iter().all(|z| z.length() >= zmin.length()));
    assert_eq!(zmin.length(), 0);
}

#[test]
fn appendix_examples() {
    let w = WeylGroup::new(RootSystem::new(CartanType::A, 2).unwrap());
    let j = NodeSet::from_iter([2]);
    let e = w.identity();
    let s2 = w.simple(2).clone();
    let s21 = w.from_word(&[2, 1]).unwrap();
    let h = h_map(
        &w,
        &j,
        &QJPair {
            x: s21.clone(),
            y: e.clone(),
        },
    )
    .unwrap();
    assert_eq!(
        h,
        QPrimeTriple {
            a: s2.clone(),
            b: s2.clone(),
            c: s21.clone()
        }
    );
    let qj = qj_for(&w, &j);
    assert_eq!(qj.len(), 7);
    for p in &qj {
        let back = g_map(&w, &j, &f_map(&w, &j, &h_map(&w, &j, p).unwrap()).unwrap()).unwrap();
        assert_eq!(&back, p);
    }
    let empty = NodeSet::empty();
    for p in qj_for(&w, &empty) {
        let t = h_map(&w, &empty, &p).unwrap();
        assert_eq!(
            t,
            QPrimeTriple {
                a: p.y.clone(),
                b: e.clone(),
                c: p.x.clone()
            }
        );
    }
    assert!(h_map(
        &w,
        &j,
        &QJPair {
            x: w.simple(2).clone(),
            y: e.clone()
        }
    )
    .is_err());
    assert!(g_map(&w, &j, &OmegaPair { a: e.clone(), b: e }).is_err());
}

#[test]
fn appendix_suite_all_subsets() {
    for ty in [CartanType::A, CartanType::B] {
        let w = WeylGroup::new(RootSystem::new(ty, 2).unwrap());
        for j in NodeSet::all_subsets(w.nodes()) {
            let r = verify_appendix(&w, &j);
            assert!(r.passed(), "{ty}2 {j:?}: {:?}", r.failures);
        }
    }
}

#[test]
fn diagnostics_examples() {
    let c = poset_diagnostics(&PosetGraph::chain(2)).unwrap();
    assert!(!c.thin);
    let b = poset_diagnostics(&PosetGraph::boolean(2)).unwrap();
    assert!(b.thin && b.eulerian);
    assert_eq!(PosetGraph::boolean(2).hasse().len(), 4);
    let i = inst(CartanType::A, 2, &[1, 0]);
    let qj = build_qj(&i);
    let d = poset_diagnostics(&qj_poset(i.finite(), i.j(), &qj).unwrap()).unwrap();
    assert!(d.thin && d.eulerian);
    // a cover that jumps two ranks
    let bad = PosetGraph::new(vec![0, 2], |a, b| a <= b).unwrap();
    assert!(poset_diagnostics(&bad).is_err());
    assert!(PosetGraph::new(vec![0, 0], |_, _| true).is_err());
}

#[test]
fn dump_shape() {
    let i = inst(CartanType::A, 2, &[1, 0]);
    let d = poset_dump(&i).unwrap();
    assert_eq!(d.elements.len(), 7);
    assert_eq!(d.admissible.len(), 7);
    let j = serde_json::to_value(&d).unwrap();
    for key in ["lambda", "J", "elements", "hasse", "diagnostics"] {
        assert!(j.get(key).is_some(), "{key}");
    }
    let a = i.affine();
    for z in &d.admissible {
        let tau = a.omega_by_label(z.omega).unwrap().elt.clone();
        assert_eq!(apply_word(a, &tau, &z.word).length(), z.length);
    }
}
