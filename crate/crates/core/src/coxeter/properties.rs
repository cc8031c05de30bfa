//! Checks of the Demazure product properties on explicit elements.
//!
//! Existence and uniqueness of the extremal elements are checked as
//! postconditions: each product must come with the witnesses `u'`, `v'`,
//! `u''`, `v''` and the stated length identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{
    bruhat_leq, demazure_star, demazure_tril, demazure_trir, longest_in_parabolic, lower_cone,
    max_in_coset, min_in_coset, reduced_word, AffineElt, AffineWeylGroup, Coxeter, NodeSet, Side,
    WeylGroup,
};
use crate::report::{Failure, Report};

fn word<G: Coxeter>(g: &G, x: &G::Elt) -> Vec<usize> {
    reduced_word(g, x).1
}

/// Properties (1)–(3) for one pair: witnesses and length identities.
fn check_products<G: Coxeter>(
    g: &G,
    x: &G::Elt,
    y: &G::Elt,
    r: &mut Report,
    label: impl Fn(&G::Elt) -> serde_json::Value,
) {
    let l = |e: &G::Elt| g.length(e);
    let star = demazure_star(g, x, y);
    let u1 = g.mul(&star, &g.inverse(y));
    let v1 = g.mul(&g.inverse(x), &star);
    let ok1 = bruhat_leq(g, &u1, x)
        && bruhat_leq(g, &v1, y)
        && l(&star) == l(&u1) + l(y)
        && l(&star) == l(x) + l(&v1);
    r.check(ok1, || {
        Failure::new(
            "(1)",
            label(x),
            label(y),
            label(&star),
            serde_json::Value::Null,
        )
    });

    let trir = demazure_trir(g, x, y);
    let u2 = g.mul(&trir, &g.inverse(y));
    let ok2 = bruhat_leq(g, &u2, x) && l(&trir) + l(&u2) == l(y);
    r.check(ok2, || {
        Failure::new(
            "(2)",
            label(x),
            label(y),
            label(&trir),
            serde_json::Value::Null,
        )
    });

    let tril = demazure_tril(g, x, y);
    let v2 = g.mul(&g.inverse(x), &tril);
    let ok3 = bruhat_leq(g, &v2, y) && l(&tril) + l(&v2) == l(x);
    r.check(ok3, || {
        Failure::new(
            "(3)",
            label(x),
            label(y),
            label(&tril),
            serde_json::Value::Null,
        )
    });
}

/// Property (6) for one triple.
fn check_six<G: Coxeter>(
    g: &G,
    x: &G::Elt,
    y: &G::Elt,
    z: &G::Elt,
    r: &mut Report,
    label: impl Fn(&G::Elt) -> serde_json::Value,
) {
    let a = bruhat_leq(g, z, &demazure_star(g, x, y));
    let b = bruhat_leq(g, &demazure_tril(g, z, &g.inverse(y)), x);
    let c = bruhat_leq(g, &demazure_trir(g, &g.inverse(x), z), y);
    r.check(a == b && b == c, || {
        Failure::new("(6)", label(x), label(y), label(z), [a, b, c])
    });
}

/// Properties (4) and (5) for `x' ≤ x`, `y' ≤ y`.
fn check_monotone<G: Coxeter>(
    g: &G,
    (xp, x): (&G::Elt, &G::Elt),
    (yp, y): (&G::Elt, &G::Elt),
    r: &mut Report,
    label: impl Fn(&G::Elt) -> serde_json::Value,
) {
    let ok4 = bruhat_leq(g, &demazure_star(g, xp, yp), &demazure_star(g, x, y));
    r.check(ok4, || {
        Failure::new(
            "(4)",
            [label(xp), label(x)],
            [label(yp), label(y)],
            serde_json::Value::Null,
            serde_json::Value::Null,
        )
    });
    let ok5 = bruhat_leq(g, &demazure_tril(g, xp, y), &demazure_tril(g, x, y));
    r.check(ok5, || {
        Failure::new(
            "(5)",
            [label(xp), label(x)],
            label(y),
            serde_json::Value::Null,
            serde_json::Value::Null,
        )
    });
}

/// Property (7) for one element and one parabolic subset.
fn check_cosets<G: Coxeter>(
    g: &G,
    x: &G::Elt,
    j: &NodeSet,
    r: &mut Report,
    label: impl Fn(&G::Elt) -> serde_json::Value,
) {
    let wj = longest_in_parabolic(g, j);
    let pairs = [
        (
            "min(W_J x)",
            demazure_trir(g, &wj, x),
            min_in_coset(g, x, j, Side::Left),
        ),
        (
            "min(x W_J)",
            demazure_tril(g, x, &wj),
            min_in_coset(g, x, j, Side::Right),
        ),
        (
            "max(W_J x)",
            demazure_star(g, &wj, x),
            max_in_coset(g, x, j, Side::Left),
        ),
        (
            "max(x W_J)",
            demazure_star(g, x, &wj),
            max_in_coset(g, x, j, Side::Right),
        ),
    ];
    for (name, lhs, rhs) in pairs {
        r.check(lhs == rhs, || {
            Failure::new(format!("(7) {name}"), label(x), j, label(&lhs), label(&rhs))
        });
    }
}

/// Properties (1)–(7) exhaustively over a finite Weyl group.
pub fn verify_demazure_finite(w: &WeylGroup) -> Report {
    let mut r = Report::new(
        "demazure products (1)-(7)",
        format!("{}{} finite", w.rs().cartan_type(), w.rank()),
    );
    let label = |e: &crate::coxeter::WeylElt| serde_json::json!(word(w, e));
    let els = w.elements();
    let cones: Vec<Vec<_>> = els.iter().map(|x| lower_cone(w, x)).collect();
    for (ix, x) in els.iter().enumerate() {
        for (iy, y) in els.iter().enumerate() {
            check_products(w, x, y, &mut r, label);
            for z in els {
                check_six(w, x, y, z, &mut r, label);
            }
            for xp in &cones[ix] {
                for yp in &cones[iy] {
                    check_monotone(w, (xp, x), (yp, y), &mut r, label);
                }
            }
        }
        for j in NodeSet::all_subsets(w.nodes()) {
            check_cosets(w, x, &j, &mut r, label);
        }
    }
    r
}

/// A random element `τ s_{i_1} ⋯ s_{i_k}` with `k ≤ max_len` letters.
pub fn random_affine(a: &AffineWeylGroup, rng: &mut impl Rng, max_len: usize) -> AffineElt {
    let om = a.omega_group();
    let mut x = om[rng.gen_range(0..om.len())].elt.clone();
    let k = rng.gen_range(0..=max_len);
    for _ in 0..k {
        let i = rng.gen_range(0..=a.rank());
        let y = a.mul_simple_right(&x, i);
        if a.length(&y) <= max_len {
            x = y;
        }
    }
    x
}

fn random_below(g: &AffineWeylGroup, x: &AffineElt, rng: &mut impl Rng) -> AffineElt {
    let (tau, word) = reduced_word(g, x);
    word.iter().fold(tau, |acc, &i| {
        if rng.gen_bool(0.5) {
            g.mul_simple_right(&acc, i)
        } else {
            acc
        }
    })
}

/// Properties (1)–(7) on `n` seeded random triples of length at most `max_len`.
pub fn verify_demazure_affine(a: &AffineWeylGroup, n: usize, max_len: usize, seed: u64) -> Report {
    let mut r = Report::new(
        "demazure products (1)-(7)",
        format!(
            "{}{} affine, {n} triples, len<={max_len}, seed={seed}",
            a.rs().cartan_type(),
            a.rank()
        ),
    );
    let label = |e: &AffineElt| serde_json::to_value(a.to_json(e)).unwrap_or_default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let proper: Vec<NodeSet> = NodeSet::all_subsets(a.nodes())
        .into_iter()
        .filter(|j| j.len() < a.nodes().len())
        .collect();
    for _ in 0..n {
        let x = random_affine(a, &mut rng, max_len);
        let y = random_affine(a, &mut rng, max_len);
        let z = if rng.gen_bool(0.5) {
            random_below(a, &demazure_star(a, &x, &y), &mut rng)
        } else {
            random_affine(a, &mut rng, max_len)
        };
        check_products(a, &x, &y, &mut r, label);
        check_six(a, &x, &y, &z, &mut r, label);
        let xp = random_below(a, &x, &mut rng);
        let yp = random_below(a, &y, &mut rng);
        check_monotone(a, (&xp, &x), (&yp, &y), &mut r, label);
        let j = &proper[rng.gen_range(0..proper.len())];
        check_cosets(a, &x, j, &mut r, label);
    }
    r
}
