//! Two further models of `(Q_J, ⪯)` and the bijections between them.
//!
//! `W^J_max` is the set of maximal-length representatives of `W / W_J`.

use crate::coxeter::{
    bruhat_leq, coset_reps, max_in_coset, min_in_coset, parabolic_subgroup, reduced_word, Coxeter,
    NodeSet, Side, WeylElt, WeylGroup,
};
use crate::error::{invalid, Result};
use crate::report::{Failure, Report};
use crate::richardson_poset::{preceq_in, qj_for, PosetGraph, QJPair};

/// `(a, b, c) ∈ W^J_max × W_J × W^J` with `a ≤ cb`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPrimeTriple {
    pub a: WeylElt,
    pub b: WeylElt,
    pub c: WeylElt,
}

/// `(a, b) ∈ W^J_max × W` with `a ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaPair {
    pub a: WeylElt,
    pub b: WeylElt,
}

struct Ctx<'a> {
    w: &'a WeylGroup,
    j: &'a NodeSet,
    w_j: Vec<WeylElt>,
}

impl Ctx<'_> {
    fn is_max_rep(&self, a: &WeylElt) -> bool {
        self.j.iter().all(|i| self.w.is_right_descent(a, i))
    }

    fn is_min_rep(&self, c: &WeylElt) -> bool {
        self.j.iter().all(|i| !self.w.is_right_descent(c, i))
    }

    fn in_w_j(&self, b: &WeylElt) -> bool {
        self.w_j.contains(b)
    }
}

fn ctx<'a>(w: &'a WeylGroup, j: &'a NodeSet) -> Ctx<'a> {
    Ctx {
        w,
        j,
        w_j: parabolic_subgroup(w, j),
    }
}

pub fn q_prime_j(w: &WeylGroup, j: &NodeSet) -> Vec<QPrimeTriple> {
    let cx = ctx(w, j);
    let reps = coset_reps(w, j);
    let mut out = Vec::new();
    for a in &reps.max_right {
        for b in &cx.w_j {
            for c in &reps.min_right {
                if bruhat_leq(w, a, &w.mul(c, b)) {
                    out.push(QPrimeTriple {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

pub fn omega_j(w: &WeylGroup, j: &NodeSet) -> Vec<OmegaPair> {
    let reps = coset_reps(w, j);
    let mut out = Vec::new();
    for a in &reps.max_right {
        for b in w.elements() {
            if bruhat_leq(w, a, b) {
                out.push(OmegaPair {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// `(a', b', c') ≤ (a, b, c)`: some `u'_1 u'_2 = b'` in `W_J` with additive
/// length has `a b^{-1} ≤ a' u'_2^{-1} ≤ c' u'_1 ≤ c`.
pub fn q_prime_leq(w: &WeylGroup, w_j: &[WeylElt], lo: &QPrimeTriple, hi: &QPrimeTriple) -> bool {
    let abinv = w.mul(&hi.a, &w.inverse(&hi.b));
    w_j.iter().any(|u1| {
        let u2 = w.mul(&w.inverse(u1), &lo.b);
        if u1.length() + u2.length() != lo.b.length() {
            return false;
        }
        let mid = w.mul(&lo.a, &w.inverse(&u2));
        let top = w.mul(&lo.c, u1);
        bruhat_leq(w, &abinv, &mid) && bruhat_leq(w, &mid, &top) && bruhat_leq(w, &top, &hi.c)
    })
}

/// `(a', b') ≤ (a, b)`: some `z ∈ W_J` has `a ≤ a' z` and `b' z ≤ b`.
pub fn omega_leq(w: &WeylGroup, w_j: &[WeylElt], lo: &OmegaPair, hi: &OmegaPair) -> bool {
    w_j.iter()
        .any(|z| bruhat_leq(w, &hi.a, &w.mul(&lo.a, z)) && bruhat_leq(w, &w.mul(&lo.b, z), &hi.b))
}

/// `f(a, b, c) = (a, cb)`.
pub fn f_map(w: &WeylGroup, j: &NodeSet, t: &QPrimeTriple) -> Result<OmegaPair> {
    let cx = ctx(w, j);
    if !(cx.is_max_rep(&t.a)
        && cx.in_w_j(&t.b)
        && cx.is_min_rep(&t.c)
        && bruhat_leq(w, &t.a, &w.mul(&t.c, &t.b)))
    {
        return invalid("triple is outside the domain of f");
    }
    Ok(OmegaPair {
        a: t.a.clone(),
        b: w.mul(&t.c, &t.b),
    })
}

/// `g(a, b) = (min(b W_J), a b^{-1} min(b W_J))`.
pub fn g_map(w: &WeylGroup, j: &NodeSet, p: &OmegaPair) -> Result<QJPair> {
    let cx = ctx(w, j);
    if !(cx.is_max_rep(&p.a) && bruhat_leq(w, &p.a, &p.b)) {
        return invalid("pair is outside the domain of g");
    }
    let x = min_in_coset(w, &p.b, j, Side::Right);
    let y = w.mul(&w.mul(&p.a, &w.inverse(&p.b)), &x);
    Ok(QJPair { x, y })
}

/// `h(x, y) = (max(y W_J), y^{-1} max(y W_J), x)`.
pub fn h_map(w: &WeylGroup, j: &NodeSet, p: &QJPair) -> Result<QPrimeTriple> {
    let cx = ctx(w, j);
    if !(cx.is_min_rep(&p.x) && bruhat_leq(w, &p.y, &p.x)) {
        return invalid("pair is outside Q_J");
    }
    let a = max_in_coset(w, &p.y, j, Side::Right);
    let b = w.mul(&w.inverse(&p.y), &a);
    Ok(QPrimeTriple {
        a,
        b,
        c: p.x.clone(),
    })
}

fn word(w: &WeylGroup, x: &WeylElt) -> Vec<usize> {
    reduced_word(w, x).1
}

/// Mutual inverseness and order preservation of `f`, `g`, `h`.
pub fn verify_appendix(w: &WeylGroup, j: &NodeSet) -> Report {
    let mut r = Report::new(
        "appendix bijections f, g, h",
        format!("{}{} J={:?}", w.rs().cartan_type(), w.rank(), j.as_slice()),
    );
    let null = serde_json::Value::Null;
    let cx = ctx(w, j);
    let qp = q_prime_j(w, j);
    let om = omega_j(w, j);
    let qj = qj_for(w, j);
    let tw = |t: &QPrimeTriple| serde_json::json!([word(w, &t.a), word(w, &t.b), word(w, &t.c)]);
    let ow = |p: &OmegaPair| serde_json::json!([word(w, &p.a), word(w, &p.b)]);
    let qw = |p: &QJPair| serde_json::json!([word(w, &p.x), word(w, &p.y)]);

    r.check(qp.len() == qj.len() && om.len() == qj.len(), || {
        Failure::new(
            "cardinalities",
            null.clone(),
            null.clone(),
            [qp.len(), om.len()],
            qj.len(),
        )
    });

    let fs: Vec<Result<OmegaPair>> = qp.iter().map(|t| f_map(w, j, t)).collect();
    let gs: Vec<Result<QJPair>> = om.iter().map(|p| g_map(w, j, p)).collect();
    let hs: Vec<Result<QPrimeTriple>> = qj.iter().map(|p| h_map(w, j, p)).collect();

    for (t, f) in qp.iter().zip(&fs) {
        let back = f
            .as_ref()
            .ok()
            .and_then(|p| g_map(w, j, p).ok())
            .and_then(|q| h_map(w, j, &q).ok());
        r.check(back.as_ref() == Some(t), || {
            Failure::new(
                "h.g.f = id",
                tw(t),
                null.clone(),
                back.as_ref().map(tw),
                tw(t),
            )
        });
    }
    for (p, g) in om.iter().zip(&gs) {
        let back = g
            .as_ref()
            .ok()
            .and_then(|q| h_map(w, j, q).ok())
            .and_then(|t| f_map(w, j, &t).ok());
        r.check(back.as_ref() == Some(p), || {
            Failure::new(
                "f.h.g = id",
                ow(p),
                null.clone(),
                back.as_ref().map(ow),
                ow(p),
            )
        });
    }
    for (p, h) in qj.iter().zip(&hs) {
        let back = h
            .as_ref()
            .ok()
            .and_then(|t| f_map(w, j, t).ok())
            .and_then(|o| g_map(w, j, &o).ok());
        r.check(back.as_ref() == Some(p), || {
            Failure::new(
                "g.f.h = id",
                qw(p),
                null.clone(),
                back.as_ref().map(qw),
                qw(p),
            )
        });
    }

    // each relation is a partial order
    let ranks = |n: usize| vec![0i64; n];
    for (name, ok) in [
        (
            "Q'_J order",
            PosetGraph::new(ranks(qp.len()), |a, b| {
                q_prime_leq(w, &cx.w_j, &qp[a], &qp[b])
            })
            .is_ok(),
        ),
        (
            "Omega_J order",
            PosetGraph::new(ranks(om.len()), |a, b| {
                omega_leq(w, &cx.w_j, &om[a], &om[b])
            })
            .is_ok(),
        ),
        (
            "Q_J order",
            PosetGraph::new(ranks(qj.len()), |a, b| {
                preceq_in(w, &cx.w_j, &qj[a], &qj[b])
            })
            .is_ok(),
        ),
    ] {
        r.check(ok, || {
            Failure::new(
                name,
                null.clone(),
                null.clone(),
                "not a partial order",
                null.clone(),
            )
        });
    }

    // order preservation, both directions
    let idx_om = |p: &OmegaPair| om.iter().position(|q| q == p);
    let idx_qj = |p: &QJPair| qj.iter().position(|q| q == p);
    let idx_qp = |t: &QPrimeTriple| qp.iter().position(|q| q == t);
    let fi: Vec<Option<usize>> = fs
        .iter()
        .map(|f| f.as_ref().ok().and_then(idx_om))
        .collect();
    let gi: Vec<Option<usize>> = gs
        .iter()
        .map(|g| g.as_ref().ok().and_then(idx_qj))
        .collect();
    let hi: Vec<Option<usize>> = hs
        .iter()
        .map(|h| h.as_ref().ok().and_then(idx_qp))
        .collect();
    for s in 0..qp.len() {
        for t in 0..qp.len() {
            let lhs = q_prime_leq(w, &cx.w_j, &qp[s], &qp[t]);
            let rhs = match (fi[s], fi[t]) {
                (Some(a), Some(b)) => omega_leq(w, &cx.w_j, &om[a], &om[b]),
                _ => !lhs,
            };
            r.check(lhs == rhs, || {
                Failure::new(tw(&qp[s]), tw(&qp[t]), "f order", lhs, rhs)
            });
        }
    }
    for s in 0..om.len() {
        for t in 0..om.len() {
            let lhs = omega_leq(w, &cx.w_j, &om[s], &om[t]);
            let rhs = match (gi[s], gi[t]) {
                (Some(a), Some(b)) => preceq_in(w, &cx.w_j, &qj[a], &qj[b]),
                _ => !lhs,
            };
            r.check(lhs == rhs, || {
                Failure::new(ow(&om[s]), ow(&om[t]), "g order", lhs, rhs)
            });
        }
    }
    for s in 0..qj.len() {
        for t in 0..qj.len() {
            let lhs = preceq_in(w, &cx.w_j, &qj[s], &qj[t]);
            let rhs = match (hi[s], hi[t]) {
                (Some(a), Some(b)) => q_prime_leq(w, &cx.w_j, &qp[a], &qp[b]),
                _ => !lhs,
            };
            r.check(lhs == rhs, || {
                Failure::new(qw(&qj[s]), qw(&qj[t]), "h order", lhs, rhs)
            });
        }
    }
    r
}
