//! The poset `Q_J` of projected Richardson strata, the admissible set and the
//! map `θ(x, y) = y t^{-λ} x^{-1}` between them.

mod appendix;
mod diagnostics;

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    apply_word, bruhat_leq, coset_reps, longest_in_parabolic, lower_cone, parabolic_subgroup,
    reduced_word, AffineElt, AffineWeylGroup, Coxeter, EltJson, NodeSet, WeylElt, WeylGroup,
};
use crate::error::Result;
use crate::report::{Failure, Report};
use crate::root_data::{Coweight, RootSystem};

pub use appendix::{
    f_map, g_map, h_map, omega_j, omega_leq, q_prime_j, q_prime_leq, verify_appendix, OmegaPair,
    QPrimeTriple,
};
pub use diagnostics::{poset_diagnostics, Diagnostics, PosetGraph};

/// `J = {i ∈ S : <λ, α_i> = 0}`.
pub fn j_of(lambda: &Coweight) -> NodeSet {
    lambda
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// A pair `(x, y)` with `x ∈ W^J`, `y ∈ W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QJPair {
    pub x: WeylElt,
    pub y: WeylElt,
}

/// Everything attached to a dominant coweight `λ`.
#[derive(Clone, Debug)]
pub struct Instance {
    fin: WeylGroup,
    aff: AffineWeylGroup,
    lambda: Coweight,
    j: NodeSet,
    wj: WeylElt,
    w_j_group: Vec<WeylElt>,
    min_reps: Vec<WeylElt>,
    t_neg_lambda: AffineElt,
}

impl Instance {
    pub fn new(rs: RootSystem, lambda: Coweight) -> Result<Instance> {
        let fin = WeylGroup::new(rs);
        let aff = AffineWeylGroup::new(&fin);
        Instance::from_groups(&aff, lambda)
    }

    pub fn from_groups(aff: &AffineWeylGroup, lambda: Coweight) -> Result<Instance> {
        let fin = aff.finite().clone();
        fin.rs().check_dominant(&lambda)?;
        let j = j_of(&lambda);
        let wj = longest_in_parabolic(&fin, &j);
        let w_j_group = parabolic_subgroup(&fin, &j);
        let min_reps = coset_reps(&fin, &j).min_right;
        let t_neg_lambda = aff.translation(&lambda.neg());
        Ok(Instance {
            fin,
            aff: aff.clone(),
            lambda,
            j,
            wj,
            w_j_group,
            min_reps,
            t_neg_lambda,
        })
    }

    pub fn finite(&self) -> &WeylGroup {
        &self.fin
    }

    pub fn affine(&self) -> &AffineWeylGroup {
        &self.aff
    }

    pub fn rs(&self) -> &RootSystem {
        self.fin.rs()
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    pub fn j(&self) -> &NodeSet {
        &self.j
    }

    /// `w_J`.
    pub fn wj(&self) -> &WeylElt {
        &self.wj
    }

    /// `W_J`, sorted by length.
    pub fn w_j_group(&self) -> &[WeylElt] {
        &self.w_j_group
    }

    /// `W^J`.
    pub fn min_reps(&self) -> &[WeylElt] {
        &self.min_reps
    }

    /// `t^{-λ}`.
    pub fn t_neg_lambda(&self) -> &AffineElt {
        &self.t_neg_lambda
    }

    /// `t^{-wλ}`.
    pub fn translate(&self, w: &WeylElt) -> AffineElt {
        self.aff.translation(&w.apply_coweight(&self.lambda).neg())
    }

    /// `t^{-λ} w_J w_S`, the minimal element of `W t^{-λ} W`.
    pub fn min_double_coset(&self) -> AffineElt {
        let wjws = self.fin.mul(&self.wj, self.fin.longest());
        self.aff
            .mul(&self.t_neg_lambda, &self.aff.from_finite(&wjws))
    }

    pub fn is_cominuscule(&self) -> bool {
        self.rs().is_cominuscule(&self.lambda)
    }

    pub fn name(&self) -> String {
        format!(
            "{}{} lambda={:?}",
            self.rs().cartan_type(),
            self.rs().rank(),
            self.lambda.0
        )
    }

    pub fn word(&self, w: &WeylElt) -> Vec<usize> {
        reduced_word(&self.fin, w).1
    }

    pub fn affine_json(&self, z: &AffineElt) -> EltJson {
        self.aff.to_json(z)
    }

    pub fn pair_json(&self, p: &QJPair) -> serde_json::Value {
        serde_json::json!({ "x": self.word(&p.x), "y": self.word(&p.y) })
    }
}

/// `Q_J` for a parabolic subset of the finite group, sorted.
pub fn qj_for(w: &WeylGroup, j: &NodeSet) -> Vec<QJPair> {
    let mut out = Vec::new();
    for x in coset_reps(w, j).min_right {
        for y in lower_cone(w, &x) {
            out.push(QJPair { x: x.clone(), y });
        }
    }
    out.sort();
    out
}

/// `Q_J = {(x, y) ∈ W^J × W : y ≤ x}`.
pub fn build_qj(inst: &Instance) -> Vec<QJPair> {
    qj_for(&inst.fin, &inst.j)
}

/// `W^J × W`.
pub fn domain(inst: &Instance) -> Vec<QJPair> {
    let mut out: Vec<QJPair> = inst
        .min_reps
        .iter()
        .flat_map(|x| {
            inst.fin.elements().iter().map(move |y| QJPair {
                x: x.clone(),
                y: y.clone(),
            })
        })
        .collect();
    out.sort();
    out
}

/// `(x', y') ⪯ (x, y)`: some `u ∈ W_J` has `x'u ≤ x` and `y'u ≥ y`.
pub fn preceq_in(w: &WeylGroup, w_j: &[WeylElt], lo: &QJPair, hi: &QJPair) -> bool {
    w_j.iter()
        .any(|u| bruhat_leq(w, &w.mul(&lo.x, u), &hi.x) && bruhat_leq(w, &hi.y, &w.mul(&lo.y, u)))
}

pub fn preceq(inst: &Instance, lo: &QJPair, hi: &QJPair) -> bool {
    preceq_in(&inst.fin, &inst.w_j_group, lo, hi)
}

/// `θ(x, y) = y t^{-λ} x^{-1}`.
pub fn theta(inst: &Instance, p: &QJPair) -> AffineElt {
    let a = &inst.aff;
    let y = a.from_finite(&p.y);
    let xinv = a.from_finite(&inst.fin.inverse(&p.x));
    a.mul(&a.mul(&y, &inst.t_neg_lambda), &xinv)
}

/// `Adm(-w_S λ)`: the union of the lower cones of the `t^{-wλ}`.
#[derive(Clone, Debug)]
pub struct AdmissibleSet {
    /// `-w_S λ`, the dominant coweight labelling the set.
    pub mu: Coweight,
    /// Sorted by length, then canonical form.
    pub elements: Vec<AffineElt>,
    index: HashSet<AffineElt>,
}

impl AdmissibleSet {
    pub fn contains(&self, z: &AffineElt) -> bool {
        self.index.contains(z)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn admissible_set(inst: &Instance) -> AdmissibleSet {
    let mut index: HashSet<AffineElt> = HashSet::new();
    for w in &inst.min_reps {
        index.extend(lower_cone(&inst.aff, &inst.translate(w)));
    }
    let mut elements: Vec<AffineElt> = index.iter().cloned().collect();
    elements.sort_by(|a, b| (a.length(), a).cmp(&(b.length(), b)));
    let mu = inst.fin.longest().apply_coweight(&inst.lambda).neg();
    AdmissibleSet {
        mu,
        elements,
        index,
    }
}

/// `W t^{-λ} W`, computed as all products `u t^{-λ} v`.
pub fn double_coset(inst: &Instance) -> Vec<AffineElt> {
    let a = &inst.aff;
    let mut set = BTreeSet::new();
    for u in inst.fin.elements() {
        let ut = a.mul(&a.from_finite(u), &inst.t_neg_lambda);
        for v in inst.fin.elements() {
            set.insert(a.mul(&ut, &a.from_finite(v)));
        }
    }
    set.into_iter().collect()
}

/// The three equivalent conditions comparing `(x', y')` with `(x, y)`.
pub fn prop_conditions(inst: &Instance, lo: &QJPair, hi: &QJPair) -> [bool; 3] {
    let w = &inst.fin;
    let c1 = bruhat_leq(&inst.aff, &theta(inst, lo), &theta(inst, hi));
    let c2 = inst.w_j_group.iter().any(|u| {
        bruhat_leq(w, &w.mul(&lo.y, u), &hi.y) && bruhat_leq(w, &w.mul(&hi.x, &w.inverse(u)), &lo.x)
    });
    let c3 = inst
        .w_j_group
        .iter()
        .any(|v| bruhat_leq(w, &lo.y, &w.mul(&hi.y, v)) && bruhat_leq(w, &w.mul(&hi.x, v), &lo.x));
    [c1, c2, c3]
}

/// Exhaustive agreement of the three conditions over `(W^J × W)²`.
pub fn verify_prop_equiv(inst: &Instance) -> Report {
    let mut r = Report::new(
        "equivalent conditions for y't^-l x'^-1 <= y t^-l x^-1",
        inst.name(),
    );
    let dom = domain(inst);
    for lo in &dom {
        for hi in &dom {
            let c = prop_conditions(inst, lo, hi);
            r.check(c[0] == c[1] && c[1] == c[2], || {
                Failure::new(
                    inst.pair_json(lo),
                    inst.pair_json(hi),
                    serde_json::Value::Null,
                    c,
                    serde_json::Value::Null,
                )
            });
        }
    }
    r
}

/// Bijection, order reversal, grading, image of `Q_J`, and the shape of
/// `W t^{-λ} W` and `Adm`.
pub fn verify_theorem_combin(inst: &Instance) -> Report {
    let mut r = Report::new(
        "theta: order-preserving graded bijection onto W t^-l W (opposite order)",
        inst.name(),
    );
    let a = &inst.aff;
    let null = serde_json::Value::Null;
    let dom = domain(inst);
    let images: Vec<AffineElt> = dom.iter().map(|p| theta(inst, p)).collect();
    let dc = double_coset(inst);
    let dc_set: HashSet<&AffineElt> = dc.iter().collect();

    // bijection onto the double coset
    let image_set: HashSet<&AffineElt> = images.iter().collect();
    r.check(image_set.len() == dom.len(), || {
        Failure::new(
            "injective",
            null.clone(),
            null.clone(),
            image_set.len(),
            dom.len(),
        )
    });
    r.check(image_set == dc_set, || {
        Failure::new(
            "onto W t^-l W",
            null.clone(),
            null.clone(),
            image_set.len(),
            dc.len(),
        )
    });

    // grading
    let lt = inst.t_neg_lambda.length() as i64;
    for (p, z) in dom.iter().zip(&images) {
        let expect = lt + p.y.length() as i64 - p.x.length() as i64;
        r.check(z.length() as i64 == expect, || {
            Failure::new(
                inst.pair_json(p),
                null.clone(),
                null.clone(),
                z.length(),
                expect,
            )
        });
    }

    // order: (x',y') ⪯ (x,y) iff θ(x,y) ≤ θ(x',y')
    for (i, lo) in dom.iter().enumerate() {
        for (k, hi) in dom.iter().enumerate() {
            let lhs = preceq(inst, lo, hi);
            let rhs = bruhat_leq(a, &images[k], &images[i]);
            r.check(lhs == rhs, || {
                Failure::new(
                    inst.pair_json(lo),
                    inst.pair_json(hi),
                    null.clone(),
                    lhs,
                    rhs,
                )
            });
        }
    }

    // extremes of the double coset
    let zmin = inst.min_double_coset();
    let zmax = a.mul(&a.from_finite(inst.fin.longest()), &inst.t_neg_lambda);
    let ok_min = dc_set.contains(&zmin) && dc.iter().all(|z| bruhat_leq(a, &zmin, z));
    let ok_max = dc_set.contains(&zmax) && dc.iter().all(|z| bruhat_leq(a, z, &zmax));
    r.check(ok_min, || {
        Failure::new(
            "min = t^-l w_J w_S",
            null.clone(),
            null.clone(),
            inst.affine_json(&zmin),
            null.clone(),
        )
    });
    r.check(ok_max, || {
        Failure::new(
            "max = w_S t^-l",
            null.clone(),
            null.clone(),
            inst.affine_json(&zmax),
            null.clone(),
        )
    });

    // Adm: contains every t^{-wλ}, downward closed, maxima are the t^{-wλ}, w ∈ W^J
    let adm = admissible_set(inst);
    for w in inst.fin.elements() {
        let t = inst.translate(w);
        r.check(adm.contains(&t), || {
            Failure::new(
                "t^-wl in Adm",
                inst.word(w),
                null.clone(),
                null.clone(),
                null.clone(),
            )
        });
    }
    let tops: BTreeSet<AffineElt> = inst.min_reps.iter().map(|w| inst.translate(w)).collect();
    r.check(tops.len() == inst.min_reps.len(), || {
        Failure::new(
            "t^-wl distinct on W^J",
            null.clone(),
            null.clone(),
            tops.len(),
            inst.min_reps.len(),
        )
    });
    let maxima: BTreeSet<AffineElt> = adm
        .elements
        .iter()
        .filter(|z| tops.iter().all(|t| *z == t || !bruhat_leq(a, z, t)))
        .cloned()
        .collect();
    // every lower cover of z is z with one letter of a reduced word deleted
    let closed = adm.elements.iter().all(|z| {
        let (tau, word) = reduced_word(a, z);
        (0..word.len()).all(|k| {
            let mut sub = word.clone();
            sub.remove(k);
            adm.contains(&apply_word(a, &tau, &sub))
        })
    });
    r.check(closed, || {
        Failure::new(
            "Adm downward closed",
            null.clone(),
            null.clone(),
            null.clone(),
            null.clone(),
        )
    });
    r.check(maxima == tops, || {
        Failure::new(
            "maxima of Adm",
            null.clone(),
            null.clone(),
            maxima.len(),
            tops.len(),
        )
    });

    // θ(Q_J) = W t^{-λ} W ∩ Adm
    let qj = build_qj(inst);
    let qj_image: BTreeSet<AffineElt> = qj.iter().map(|p| theta(inst, p)).collect();
    let meet: BTreeSet<AffineElt> = dc.iter().filter(|z| adm.contains(z)).cloned().collect();
    r.check(qj_image == meet, || {
        Failure::new(
            "theta(Q_J) = W t^-l W ∩ Adm",
            null.clone(),
            null.clone(),
            qj_image.len(),
            meet.len(),
        )
    });
    if inst.is_cominuscule() {
        let all: BTreeSet<AffineElt> = adm.elements.iter().cloned().collect();
        r.check(qj_image == all, || {
            Failure::new(
                "theta(Q_J) = Adm",
                null.clone(),
                null.clone(),
                qj_image.len(),
                all.len(),
            )
        });
        let inside = adm.elements.iter().all(|z| dc_set.contains(z));
        r.check(inside, || {
            Failure::new(
                "Adm ⊆ W t^-l W",
                null.clone(),
                null.clone(),
                null.clone(),
                null.clone(),
            )
        });
    }
    r
}

/// `Q_J` as a graded poset under `⪯`, rank `ℓ(x) - ℓ(y)`.
pub fn qj_poset(w: &WeylGroup, j: &NodeSet, qj: &[QJPair]) -> Result<PosetGraph> {
    let w_j = parabolic_subgroup(w, j);
    let rank: Vec<i64> = qj
        .iter()
        .map(|p| p.x.length() as i64 - p.y.length() as i64)
        .collect();
    PosetGraph::new(rank, |a, b| preceq_in(w, &w_j, &qj[a], &qj[b]))
}

/// `Q_J` is thin and Eulerian: `μ(a, b) = (-1)^{rk b - rk a}` for all `a ≤ b`.
pub fn verify_diagnostics(inst: &Instance) -> Report {
    let mut r = Report::new("Q_J thin and Eulerian", inst.name());
    let qj = build_qj(inst);
    let graph = match qj_poset(&inst.fin, &inst.j, &qj) {
        Ok(g) => g,
        Err(e) => {
            r.error("Q_J", &e);
            return r;
        }
    };
    match poset_diagnostics(&graph) {
        Ok(d) => {
            r.check(d.thin, || Failure::new("thin", "", "", true, false));
            for &(a, b, mu) in &d.moebius {
                let gap = graph.ranks()[b] - graph.ranks()[a];
                let expected = if gap % 2 == 0 { 1 } else { -1 };
                r.check(mu == expected, || {
                    Failure::new(
                        inst.pair_json(&qj[a]),
                        inst.pair_json(&qj[b]),
                        "",
                        mu,
                        expected,
                    )
                });
            }
        }
        Err(e) => r.error("Q_J", &e),
    }
    r
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementDump {
    pub x_word: Vec<usize>,
    pub y_word: Vec<usize>,
    pub grade: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdmDump {
    pub omega: usize,
    pub word: Vec<usize>,
    pub length: usize,
}

/// JSON dump of `Q_J`, its Hasse diagram, diagnostics and `Adm`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetDump {
    pub lambda: Vec<i32>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub elements: Vec<ElementDump>,
    pub hasse: Vec<[usize; 2]>,
    pub diagnostics: Diagnostics,
    pub admissible: Vec<AdmDump>,
}

pub fn poset_dump(inst: &Instance) -> Result<PosetDump> {
    let qj = build_qj(inst);
    let graph = qj_poset(&inst.fin, &inst.j, &qj)?;
    let diagnostics = poset_diagnostics(&graph)?;
    let elements = qj
        .iter()
        .zip(graph.ranks())
        .map(|(p, &grade)| ElementDump {
            x_word: inst.word(&p.x),
            y_word: inst.word(&p.y),
            grade,
        })
        .collect();
    let admissible = admissible_set(inst)
        .elements
        .iter()
        .map(|z| {
            let j = inst.affine_json(z);
            AdmDump {
                omega: j.omega,
                word: j.word,
                length: z.length(),
            }
        })
        .collect();
    Ok(PosetDump {
        lambda: inst.lambda.0.clone(),
        j: inst.j.as_slice().to_vec(),
        elements,
        hasse: graph.hasse().iter().map(|&(a, b)| [a, b]).collect(),
        diagnostics,
        admissible,
    })
}

#[cfg(test)]
mod tests;
