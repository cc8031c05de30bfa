use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{
    all_reduced_words, ball, bruhat_leq, is_min_coset_rep, parabolic_subgroup, random_affine,
    reduced_word, Coxeter, NodeSet, Side, WeylElt, WeylGroup,
};
use crate::localization::{
    lemma_q, verify_forms, Flavor, LaurentK, LocContext, LocRing, Localizable, Localizer, PolyH,
};
use crate::report::{Failure, Report};
use crate::richardson_poset::Instance;

/// Bounds for the sampled and ball-enumerated parts of the lemma suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Random affine samples for the product lemma.
    pub samples: usize,
    /// Maximal length of affine elements.
    pub max_len: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            samples: 200,
            max_len: 6,
            seed: 0x5eed,
        }
    }
}

fn tag<T: std::fmt::Debug>(x: &T) -> String {
    format!("{x:?}")
}

fn affine_ball(ctx: &LocContext, max_len: usize) -> Vec<crate::coxeter::AffineElt> {
    let aff = ctx.affine();
    let starts: Vec<_> = aff.omega_group().iter().map(|o| o.elt.clone()).collect();
    ball(aff, &starts, max_len)
}

fn diagonal_check<G: Localizable, R: LocRing>(
    loc: &Localizer<G, R>,
    elts: &[G::Elt],
    inversions: impl Fn(&G::Elt) -> Vec<crate::root_data::Root>,
    r: &mut Report,
) {
    for x in elts {
        let lhs = loc.get(x, x);
        let rhs = R::product(loc.rank(), inversions(x).iter().map(R::root_factor));
        r.check(lhs == rhs, || {
            Failure::new(tag(x), tag(x), tag(x), &lhs, &rhs)
        });
    }
}

/// `loc(x, x) = ∏_{α ∈ R⁺ ∩ x R⁻} factor(α)` on all of `W` and on the affine
/// ball of radius `max_len`.
pub fn lemma_k1<R: Flavor>(ctx: &LocContext, opts: &SuiteOptions) -> Report {
    let mut r = Report::new(
        format!(
            "{} diagonal localization is the inversion product",
            R::FLAVOR
        ),
        ctx.finite().rs().name(),
    );
    let fin = ctx.finite();
    diagonal_check(
        ctx.fin::<R>(),
        fin.elements(),
        |x| fin.inversion_roots(x),
        &mut r,
    );
    let aff = ctx.affine();
    diagonal_check(
        ctx.aff::<R>(),
        &affine_ball(ctx, opts.max_len),
        |x| aff.inversion_classical_roots(x),
        &mut r,
    );
    r
}

/// `loc((x^*)⁻¹, (y^*)⁻¹) = w_S y⁻¹ loc(x, y)` for all `x, y ∈ W`.
pub fn lemma_k2<R: Flavor>(ctx: &LocContext) -> Report {
    let mut r = Report::new(
        format!("{} diagram-automorphism symmetry", R::FLAVOR),
        ctx.finite().rs().name(),
    );
    let fin = ctx.finite();
    let loc = ctx.fin::<R>();
    let ws = fin.longest();
    for y in fin.elements() {
        let ys = fin.inverse(&fin.st_conjugate(y));
        let twist = fin.mul(ws, &fin.inverse(y));
        for x in fin.elements() {
            let lhs = loc.get(&fin.inverse(&fin.st_conjugate(x)), &ys);
            let rhs = loc.get(x, y).weyl_act(&twist);
            r.check(lhs == rhs, || Failure::new(tag(x), tag(y), "", &lhs, &rhs));
        }
    }
    r
}

/// Compares `loc(·, uv)` with `Σ loc(u', u) (u loc(v', v))` over
/// `x = u' · v'` (flavor product) for every `x` at once.
fn product_check<G: Localizable, R: LocRing>(
    loc: &Localizer<G, R>,
    u: &G::Elt,
    v: &G::Elt,
    r: &mut Report,
) {
    let g = loc.group();
    let uv = g.mul(u, v);
    let lhs = loc.row(&uv);
    let u_fin = g.classical(u);
    let left = loc.row(u);
    let right = loc.row(v);
    let mut rhs: HashMap<G::Elt, R> = HashMap::new();
    for (u1, a) in left.iter() {
        for (v1, b) in right.iter() {
            if let Some(x) = R::combine(g, u1, v1) {
                let term = a.mul(&b.weyl_act(&u_fin));
                let slot = rhs.entry(x).or_insert_with(|| R::zero(loc.rank()));
                *slot = slot.add(&term);
            }
        }
    }
    rhs.retain(|_, p| !p.is_zero());
    let mut keys: Vec<&G::Elt> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    let zero = R::zero(loc.rank());
    for x in keys {
        let a = lhs.get(x).unwrap_or(&zero);
        let b = rhs.get(x).unwrap_or(&zero);
        r.check(a == b, || Failure::new(tag(x), tag(u), tag(v), a, b));
    }
}

/// `loc(x, uv) = Σ loc(u', u) (u loc(v', v))` when `ℓ(uv) = ℓ(u) + ℓ(v)`: all
/// pairs in `W`, and `samples` random splittings of affine elements.
pub fn lemma_k3<R: Flavor>(ctx: &LocContext, opts: &SuiteOptions) -> Report {
    let mut r = Report::new(
        format!("{} product factorization", R::FLAVOR),
        ctx.finite().rs().name(),
    );
    let fin = ctx.finite();
    for u in fin.elements() {
        for v in fin.elements() {
            if fin.length(&fin.mul(u, v)) == fin.length(u) + fin.length(v) {
                product_check(ctx.fin::<R>(), u, v, &mut r);
            }
        }
    }
    let aff = ctx.affine();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        let w = random_affine(aff, &mut rng, opts.max_len);
        let (tau, word) = reduced_word(aff, &w);
        let k = rng.gen_range(0..=word.len());
        let u = word[..k]
            .iter()
            .fold(tau, |x, &i| aff.mul_simple_right(&x, i));
        let v = word[k..]
            .iter()
            .fold(aff.identity(), |x, &i| aff.mul_simple_right(&x, i));
        product_check(ctx.aff::<R>(), &u, &v, &mut r);
    }
    r
}

/// Double-coset factorization of `d_{u_1 x v_1, u_2 x v_2}` for every pair of
/// parabolic subsets `J, K`, `x ∈ ^J W^K` and all admissible `u_i, v_i`.
pub fn lemma_k4_h(ctx: &LocContext) -> Report {
    let fin = ctx.finite();
    let loc = ctx.fin::<PolyH>();
    let mut r = Report::new("H double-coset factorization", fin.rs().name());
    let subsets = NodeSet::all_subsets(fin.nodes());
    for j in &subsets {
        let wj_group = parabolic_subgroup(fin, j);
        for k in &subsets {
            let wk_group = parabolic_subgroup(fin, k);
            let xs = fin.elements().iter().filter(|x| {
                is_min_coset_rep(fin, x, j, Side::Left) && is_min_coset_rep(fin, x, k, Side::Right)
            });
            for x in xs {
                let x_inv = fin.inverse(x);
                let dxx = loc.get(x, x);
                let vs: Vec<&WeylElt> = wk_group
                    .iter()
                    .filter(|v| is_min_coset_rep(fin, &fin.mul(x, v), j, Side::Left))
                    .collect();
                let ws: Vec<&WeylElt> = wj_group
                    .iter()
                    .filter(|w| {
                        let c = fin.mul(&fin.mul(&x_inv, w), x);
                        wk_group.contains(&c)
                    })
                    .collect();
                for u1 in &wj_group {
                    for v1 in &vs {
                        let a = fin.mul(&fin.mul(u1, x), v1);
                        for u2 in &wj_group {
                            for v2 in &vs {
                                let b = fin.mul(&fin.mul(u2, x), v2);
                                let lhs = loc.get(&a, &b);
                                let u2x = fin.mul(u2, x);
                                let mut rhs = PolyH::zero(loc.rank());
                                for w in &ws {
                                    let u1w = fin.mul(u1, w);
                                    if fin.length(&u1w) + fin.length(w) != fin.length(u1) {
                                        continue;
                                    }
                                    let third =
                                        fin.mul(&fin.mul(&fin.mul(&x_inv, &fin.inverse(w)), x), v1);
                                    let term = loc
                                        .get(&u1w, u2)
                                        .mul(&dxx.weyl_act(u2))
                                        .mul(&loc.get(&third, v2).weyl_act(&u2x));
                                    rhs = rhs.add(&term);
                                }
                                r.check(lhs == rhs, || {
                                    Failure::new(tag(&a), tag(&b), tag(x), &lhs, &rhs)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// `(v⁻¹ w_S P) / P` for `P = loc(w_S, w_S)`, inverted; `None` if it is not a unit.
fn twisted_unit_inverse<R: LocRing>(fin: &WeylGroup, p: &R, v: &WeylElt) -> Option<R> {
    let g = fin.mul(&fin.inverse(v), fin.longest());
    p.weyl_act(&g).div_exact(p).ok()?.unit_inverse()
}

/// The inversion identity `Σ_{u ≤ v ≤ u'} ... = δ_{u,u'}`, multiplied through
/// by `P = loc(w_S, w_S)`. In K-theory the inner sum runs over `v ≤ u'' ≤ u'`.
fn lemma_fin<R: Flavor>(ctx: &LocContext) -> Report {
    let fin = ctx.finite();
    let loc = ctx.fin::<R>();
    let ws = fin.longest();
    let p = loc.get(ws, ws);
    let mut r = Report::new(
        format!("{} finite inversion identity", R::FLAVOR),
        fin.rs().name(),
    );
    let elts = fin.elements();
    let units: HashMap<&WeylElt, Option<R>> = elts
        .iter()
        .map(|v| (v, twisted_unit_inverse(fin, &p, v)))
        .collect();
    for u in elts {
        for u1 in elts.iter().filter(|u1| bruhat_leq(fin, u, u1)) {
            let mut lhs = R::zero(loc.rank());
            let mut ok = true;
            for v in elts
                .iter()
                .filter(|v| bruhat_leq(fin, u, v) && bruhat_leq(fin, v, u1))
            {
                let Some(unit) = units[v].clone() else {
                    ok = false;
                    break;
                };
                let ws_v = fin.mul(ws, v);
                let inner = if R::DEMAZURE {
                    elts.iter()
                        .filter(|u2| bruhat_leq(fin, v, u2) && bruhat_leq(fin, u2, u1))
                        .fold(R::zero(loc.rank()), |acc, u2| {
                            acc.add(&loc.get(&fin.mul(ws, u2), &ws_v))
                        })
                } else {
                    loc.get(&fin.mul(ws, u1), &ws_v)
                };
                let twist = fin.mul(&fin.inverse(v), ws);
                let term = loc
                    .get(&fin.inverse(u), &fin.inverse(v))
                    .mul(&inner.weyl_act(&twist))
                    .mul(&unit);
                lhs = lhs.add(&term);
            }
            let rhs = if u == u1 {
                p.clone()
            } else {
                R::zero(loc.rank())
            };
            r.check(ok && lhs == rhs, || {
                Failure::new(tag(u), tag(u1), "", &lhs, &rhs)
            });
        }
    }
    r
}

pub fn lemma_fin_h(ctx: &LocContext) -> Report {
    lemma_fin::<PolyH>(ctx)
}

pub fn lemma_fin_k(ctx: &LocContext) -> Report {
    lemma_fin::<LaurentK>(ctx)
}

/// The Bruhat matrix on the right of the K-theory matrix identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BruhatMatrix {
    /// `m_{v,w} = 1` iff `v ≥ w`.
    Order,
    /// `M⁻¹`: `(-1)^{ℓ(v)-ℓ(w)}` iff `v ≥ w`.
    Mobius,
}

/// `E^T = D B' M` entrywise on the finite Weyl group.
pub fn matrix_identity_k(ctx: &LocContext) -> Report {
    matrix_identity_k_with(ctx, BruhatMatrix::Order)
}

/// `E^T = D B' X` entrywise, with `X = M` or `X = M⁻¹`.
///
/// `F = D E⁻¹` is obtained by back substitution (E is upper triangular for any
/// length-compatible order), every division exact. Writing
/// `b'_{a,c} = a · b_{(w_S c)⁻¹, (w_S a)⁻¹}` and `B = (E⁻¹)^T`, the identity
/// reads `e_{c,a} = Σ_{b ≥ c} x_{b,c} a(F_{(w_S a)⁻¹, (w_S b)⁻¹}) · D / (a D)`.
pub fn matrix_identity_k_with(ctx: &LocContext, form: BruhatMatrix) -> Report {
    let fin = ctx.finite();
    let loc = ctx.fin::<LaurentK>();
    let n = loc.rank();
    let name = match form {
        BruhatMatrix::Order => "K matrix identity E^T = D B' M",
        BruhatMatrix::Mobius => "K matrix identity E^T = D B' M^-1",
    };
    let mut r = Report::new(name, fin.rs().name());
    let elts = fin.elements();
    let m = elts.len();
    let idx: HashMap<&WeylElt, usize> = elts.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let e: Vec<Vec<LaurentK>> = elts
        .iter()
        .map(|v| elts.iter().map(|w| loc.get(v, w)).collect())
        .collect();
    let d = LaurentK::product(
        n,
        fin.rs().positive_roots().iter().map(LaurentK::root_factor),
    );
    let mut f = vec![vec![LaurentK::zero(n); m]; m];
    for c in 0..m {
        for row in (0..=c).rev() {
            let mut acc = if row == c {
                d.clone()
            } else {
                LaurentK::zero(n)
            };
            for k in row + 1..=c {
                acc = acc.sub(&e[row][k].mul(&f[k][c]));
            }
            match acc.div_exact(&e[row][row]) {
                Ok(q) => f[row][c] = q,
                Err(err) => {
                    r.error(
                        serde_json::json!({ "row": tag(&elts[row]), "col": tag(&elts[c]) }),
                        &err,
                    );
                    return r;
                }
            }
        }
    }
    let ws = fin.longest();
    let dual = |a: &WeylElt| idx[&fin.inverse(&fin.mul(ws, a))];
    for a in elts {
        let Some(unit) = d
            .weyl_act(a)
            .div_exact(&d)
            .ok()
            .and_then(|u| u.unit_inverse())
        else {
            r.error(
                tag(a),
                &crate::Error::Verification(format!("{a:?} does not fix D up to a unit")),
            );
            continue;
        };
        let ra = dual(a);
        for c in elts {
            let mut rhs = LaurentK::zero(n);
            for b in elts.iter().filter(|b| bruhat_leq(fin, c, b)) {
                let odd = (b.length() + c.length()) % 2 == 1;
                let sign = if form == BruhatMatrix::Mobius && odd {
                    -1
                } else {
                    1
                };
                rhs = rhs.add(&f[ra][dual(b)].weyl_act(a).mul(&unit).scale(sign));
            }
            let lhs = &e[idx[c]][idx[a]];
            r.check(*lhs == rhs, || Failure::new(tag(c), tag(a), "", lhs, &rhs));
        }
    }
    r
}

fn word_independence<G: Localizable, R: LocRing>(
    loc: &Localizer<G, R>,
    elts: &[G::Elt],
    r: &mut Report,
) {
    for w in elts {
        let (tau, words) = all_reduced_words(loc.group(), w);
        let reference = loc.row(w);
        for word in &words {
            let row = loc.row_with_word(&tau, word);
            r.check(row == *reference, || {
                let diff: Vec<String> = reference
                    .iter()
                    .filter(|(v, p)| row.get(*v) != Some(*p))
                    .map(|(v, _)| tag(v))
                    .chain(row.keys().filter(|v| !reference.contains_key(*v)).map(tag))
                    .collect();
                Failure::new(tag(w), word, diff, "", "")
            });
        }
    }
}

/// Every reduced word of `w` gives the same localizations, for `ℓ(w) ≤ max_len`
/// in `W` and in the extended affine Weyl group.
pub fn reduced_word_independence<R: Flavor>(ctx: &LocContext, max_len: usize) -> Report {
    let mut r = Report::new(
        format!("{} reduced-word independence", R::FLAVOR),
        ctx.finite().rs().name(),
    );
    let fin = ctx.finite();
    let short: Vec<WeylElt> = fin
        .elements()
        .iter()
        .filter(|w| w.length() <= max_len)
        .cloned()
        .collect();
    word_independence(ctx.fin::<R>(), &short, &mut r);
    word_independence(ctx.aff::<R>(), &affine_ball(ctx, max_len), &mut r);
    r
}

fn support_degree_on<G: Localizable>(
    h: &Localizer<G, PolyH>,
    k: &Localizer<G, LaurentK>,
    elts: &[G::Elt],
    r: &mut Report,
) {
    let g = h.group();
    for w in elts {
        let dh = h.row(w);
        let ek = k.row(w);
        for v in elts {
            let below = bruhat_leq(g, v, w);
            let d = dh.get(v);
            let e = ek.get(v);
            r.check(below == d.is_some(), || {
                Failure::new(tag(v), "", tag(w), below, d)
            });
            r.check(below == e.is_some(), || {
                Failure::new(tag(v), "", tag(w), below, e)
            });
            if let Some(d) = d {
                let deg = d.homogeneous_degree();
                r.check(deg == Some(g.length(v) as i32), || {
                    Failure::new(tag(v), "", tag(w), g.length(v), deg)
                });
            }
        }
    }
}

/// `loc(v, w) ≠ 0 ⟺ v ≤ w` in both flavors, and `d_{v,w}` is homogeneous of
/// degree `ℓ(v)`; on `W` and the affine ball of radius `max_len`.
pub fn support_and_degree(ctx: &LocContext, max_len: usize) -> Report {
    let mut r = Report::new("support and degree", ctx.finite().rs().name());
    support_degree_on(
        ctx.fin::<PolyH>(),
        ctx.fin::<LaurentK>(),
        ctx.finite().elements(),
        &mut r,
    );
    support_degree_on(
        ctx.aff::<PolyH>(),
        ctx.aff::<LaurentK>(),
        &affine_ball(ctx, max_len),
        &mut r,
    );
    r
}

fn graded_on<G: Localizable>(
    h: &Localizer<G, PolyH>,
    k: &Localizer<G, LaurentK>,
    elts: &[G::Elt],
    r: &mut Report,
) {
    let g = h.group();
    for w in elts {
        let sign = if g.length(w) % 2 == 0 { 1 } else { -1 };
        for (v, e) in k.row(w).iter() {
            let lv = g.length(v) as u32;
            for deg in 0..lv {
                let part = e.graded_part_scaled(deg);
                r.check(part.is_zero(), || {
                    Failure::new(tag(v), deg, tag(w), &part, "0")
                });
            }
            let fact: i64 = (1..=lv as i64).product();
            let lhs = e.graded_part_scaled(lv);
            let rhs = h.get(v, w).scale(sign * fact);
            r.check(lhs == rhs, || Failure::new(tag(v), lv, tag(w), &lhs, &rhs));
        }
    }
}

/// Under `e^γ ↦ Σ γ^k / k!`, `e_{v,w}` has no terms of degree below `ℓ(v)` and
/// its degree-`ℓ(v)` part is `(-1)^{ℓ(w)} d_{v,w}`.
pub fn graded_comparison(ctx: &LocContext, max_len: usize) -> Report {
    let mut r = Report::new(
        "graded comparison of K-theory and cohomology",
        ctx.finite().rs().name(),
    );
    graded_on(
        ctx.fin::<PolyH>(),
        ctx.fin::<LaurentK>(),
        ctx.finite().elements(),
        &mut r,
    );
    graded_on(
        ctx.aff::<PolyH>(),
        ctx.aff::<LaurentK>(),
        &affine_ball(ctx, max_len),
        &mut r,
    );
    r
}

/// All lemma identities of one flavor: the generic ones, the flavor-specific
/// finite ones, and for each instance the affine factorization and the
/// agreement of the Richardson localization forms.
pub fn lemma_suite<R: Flavor>(
    ctx: &LocContext,
    instances: &[Instance],
    opts: &SuiteOptions,
) -> Vec<Report> {
    let mut out = vec![
        lemma_k1::<R>(ctx, opts),
        lemma_k2::<R>(ctx),
        lemma_k3::<R>(ctx, opts),
    ];
    out.extend(R::finite_lemmas(ctx));
    for inst in instances {
        out.push(lemma_q::<R>(ctx, inst));
        out.push(verify_forms::<R>(ctx, inst));
    }
    out
}
