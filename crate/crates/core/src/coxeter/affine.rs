use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coxeter::{reduced_word, Coxeter, WeylElt, WeylGroup};
use crate::error::{invalid, Result};
use crate::root_data::{pairing, AffineRoot, Coweight, Root, RootSystem};

/// Element `t^χ w` of the extended affine Weyl group `P ⋊ W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElt {
    len: u32,
    chi: Coweight,
    w: WeylElt,
}

impl AffineElt {
    pub fn translation_part(&self) -> &Coweight {
        &self.chi
    }

    pub fn finite_part(&self) -> &WeylElt {
        &self.w
    }

    pub fn length(&self) -> usize {
        self.len as usize
    }

    pub fn is_finite(&self) -> bool {
        self.chi.is_zero()
    }
}

impl fmt::Debug for AffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}·{:?}", self.chi.0, self.w)
    }
}

/// A length-zero element of `~W` together with the diagram automorphism it
/// induces on the affine nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaElt {
    pub elt: AffineElt,
    /// `perm[i] = j` when `τ(α_i) = α_j`.
    pub perm: Vec<usize>,
}

impl OmegaElt {
    /// The image of node 0; identifies `τ` within `Ω`.
    pub fn label(&self) -> usize {
        self.perm[0]
    }
}

/// Wire form of a group element: `{omega, word}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EltJson {
    pub omega: usize,
    pub word: Vec<usize>,
}

struct Inner {
    fin: WeylGroup,
    simples: Vec<AffineElt>,
    nodes: Vec<usize>,
    identity: AffineElt,
    omega: OnceLock<Vec<OmegaElt>>,
}

/// The extended affine Weyl group `~W = P ⋊ W`.
///
/// Affine roots act as `t^χ w (α + nδ) = wα + (n + <χ, wα>)δ`, with
/// `α_0 = -θ + δ` and `s_0 = t^{-θ∨} s_θ`. With this convention the number of
/// positive affine roots made negative by `x` is the Iwahori–Matsumoto length.
#[derive(Clone)]
pub struct AffineWeylGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AffineWeylGroup({}{})",
            self.rs().cartan_type(),
            self.rs().rank()
        )
    }
}

impl AffineWeylGroup {
    pub fn new(fin: &WeylGroup) -> AffineWeylGroup {
        let rs = fin.rs();
        let r = rs.rank();
        let zero = Coweight::zero(r);
        let identity = AffineElt {
            len: 0,
            chi: zero.clone(),
            w: fin.identity(),
        };
        let s_theta = fin.reflection(rs.highest_root()).expect("θ is a root");
        let mut simples = Vec::with_capacity(r + 1);
        let mut s0 = AffineElt {
            len: 0,
            chi: rs.highest_coroot().neg(),
            w: s_theta,
        };
        s0.len = im_length(rs, &s0.chi, &s0.w) as u32;
        simples.push(s0);
        for i in 1..=r {
            simples.push(AffineElt {
                len: 1,
                chi: zero.clone(),
                w: fin.simple(i).clone(),
            });
        }
        AffineWeylGroup {
            inner: Arc::new(Inner {
                fin: fin.clone(),
                simples,
                nodes: (0..=r).collect(),
                identity,
                omega: OnceLock::new(),
            }),
        }
    }

    pub fn finite(&self) -> &WeylGroup {
        &self.inner.fin
    }

    pub fn rs(&self) -> &RootSystem {
        self.inner.fin.rs()
    }

    pub fn rank(&self) -> usize {
        self.rs().rank()
    }

    pub fn simple(&self, node: usize) -> &AffineElt {
        &self.inner.simples[node]
    }

    pub fn make(&self, chi: Coweight, w: WeylElt) -> AffineElt {
        let len = im_length(self.rs(), &chi, &w) as u32;
        AffineElt { len, chi, w }
    }

    pub fn translation(&self, chi: &Coweight) -> AffineElt {
        self.make(chi.clone(), self.finite().identity())
    }

    pub fn from_finite(&self, w: &WeylElt) -> AffineElt {
        AffineElt {
            len: w.length() as u32,
            chi: Coweight::zero(self.rank()),
            w: w.clone(),
        }
    }

    pub fn simple_affine_root(&self, node: usize) -> AffineRoot {
        if node == 0 {
            AffineRoot::new(self.rs().highest_root().neg(), 1)
        } else {
            AffineRoot::new(self.rs().simple_root(node), 0)
        }
    }

    pub fn apply(&self, x: &AffineElt, a: &AffineRoot) -> AffineRoot {
        let wa = x.w.apply_root(&a.classical);
        let level = a.level + pairing(&x.chi, &wa);
        AffineRoot::new(wa, level)
    }

    /// `x^{-1}(α + nδ) = w^{-1}α + (n - <χ, α>)δ`.
    pub fn apply_inv(&self, x: &AffineElt, a: &AffineRoot) -> AffineRoot {
        AffineRoot::new(
            x.w.apply_root_inv(&a.classical),
            a.level - pairing(&x.chi, &a.classical),
        )
    }

    pub fn from_word(&self, omega: &AffineElt, word: &[usize]) -> Result<AffineElt> {
        let mut x = omega.clone();
        for &i in word {
            if i > self.rank() {
                return invalid(format!("node {i} out of range 0..={}", self.rank()));
            }
            x = self.mul_simple_right(&x, i);
        }
        Ok(x)
    }

    /// Length-zero elements, indexed by [`OmegaElt::label`] order.
    pub fn omega_group(&self) -> &[OmegaElt] {
        self.inner.omega.get_or_init(|| {
            let r = self.rank();
            let mut found: Vec<AffineElt> = vec![self.identity()];
            for j in 1..=r {
                let t = self.translation(&Coweight::fundamental(r, j));
                let (tau, _) = reduced_word(self, &t);
                if !found.contains(&tau) {
                    found.push(tau);
                }
            }
            loop {
                let mut added = false;
                let snapshot = found.clone();
                for a in &snapshot {
                    for b in &snapshot {
                        let c = self.mul(a, b);
                        if !found.contains(&c) {
                            found.push(c);
                            added = true;
                        }
                    }
                }
                if !added {
                    break;
                }
            }
            let mut out: Vec<OmegaElt> = found
                .into_iter()
                .map(|elt| {
                    let perm = (0..=r)
                        .map(|i| {
                            let img = self.apply(&elt, &self.simple_affine_root(i));
                            (0..=r)
                                .find(|&j| self.simple_affine_root(j) == img)
                                .expect("length-zero elements permute simple affine roots")
                        })
                        .collect();
                    OmegaElt { elt, perm }
                })
                .collect();
            out.sort_by_key(|o| o.label());
            out
        })
    }

    pub fn omega_by_label(&self, label: usize) -> Result<&OmegaElt> {
        self.omega_group()
            .iter()
            .find(|o| o.label() == label)
            .map_or_else(
                || invalid(format!("no length-zero element with label {label}")),
                Ok,
            )
    }

    pub fn omega_act(&self, tau: &OmegaElt, a: &AffineRoot) -> AffineRoot {
        self.apply(&tau.elt, a)
    }

    /// The `Ω` component of `x = τ u`.
    pub fn omega_of(&self, x: &AffineElt) -> OmegaElt {
        let (tau, _) = reduced_word(self, x);
        self.omega_group()
            .iter()
            .find(|o| o.elt == tau)
            .cloned()
            .expect("residue lies in Ω")
    }

    pub fn to_json(&self, x: &AffineElt) -> EltJson {
        let (tau, word) = reduced_word(self, x);
        let omega = self
            .omega_group()
            .iter()
            .find(|o| o.elt == tau)
            .expect("residue lies in Ω")
            .label();
        EltJson { omega, word }
    }

    pub fn from_json(&self, e: &EltJson) -> Result<AffineElt> {
        let tau = self.omega_by_label(e.omega)?.elt.clone();
        self.from_word(&tau, &e.word)
    }

    /// Classical projection of the inversion set `R̃⁺ ∩ x R̃⁻`, computed by
    /// scanning levels directly rather than through a reduced word.
    pub fn inversion_classical_roots(&self, x: &AffineElt) -> Vec<Root> {
        let mut out = Vec::new();
        for a in self.rs().roots() {
            let k = pairing(&x.chi, a);
            let top = k.abs() + 1;
            for n in 0..=top {
                let ar = AffineRoot::new(a.clone(), n);
                if ar.is_positive() && !self.apply_inv(x, &ar).is_positive() {
                    out.push(a.clone());
                }
            }
        }
        out
    }
}

/// `ℓ(t^χ w) = Σ_{α>0, w⁻¹α>0} |<χ,α>| + Σ_{α>0, w⁻¹α<0} |<χ,α> + 1|`.
pub fn im_length(rs: &RootSystem, chi: &Coweight, w: &WeylElt) -> usize {
    rs.positive_roots()
        .iter()
        .map(|a| {
            let p = pairing(chi, a);
            if w.apply_root_inv(a).is_positive() {
                p.unsigned_abs() as usize
            } else {
                (p + 1).unsigned_abs() as usize
            }
        })
        .sum()
}

impl Coxeter for AffineWeylGroup {
    type Elt = AffineElt;

    fn nodes(&self) -> &[usize] {
        &self.inner.nodes
    }

    fn identity(&self) -> AffineElt {
        self.inner.identity.clone()
    }

    fn length(&self, x: &AffineElt) -> usize {
        x.length()
    }

    fn is_right_descent(&self, x: &AffineElt, node: usize) -> bool {
        !self.apply(x, &self.simple_affine_root(node)).is_positive()
    }

    fn is_left_descent(&self, x: &AffineElt, node: usize) -> bool {
        !self
            .apply_inv(x, &self.simple_affine_root(node))
            .is_positive()
    }

    /// `(t^{χ1} w1)(t^{χ2} w2) = t^{χ1 + w1 χ2} w1 w2`.
    fn mul(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        let chi = x.chi.add(&x.w.apply_coweight(&y.chi));
        let w = self.finite().mul(&x.w, &y.w);
        self.make(chi, w)
    }

    fn mul_simple_right(&self, x: &AffineElt, node: usize) -> AffineElt {
        let d = self.is_right_descent(x, node);
        let s = self.simple(node);
        let chi = x.chi.add(&x.w.apply_coweight(&s.chi));
        let w = self.finite().mul(&x.w, &s.w);
        let len = if d { x.len - 1 } else { x.len + 1 };
        AffineElt { len, chi, w }
    }

    fn mul_simple_left(&self, node: usize, x: &AffineElt) -> AffineElt {
        let d = self.is_left_descent(x, node);
        let s = self.simple(node);
        let chi = s.chi.add(&s.w.apply_coweight(&x.chi));
        let w = self.finite().mul(&s.w, &x.w);
        let len = if d { x.len - 1 } else { x.len + 1 };
        AffineElt { len, chi, w }
    }

    /// `(t^χ w)^{-1} = t^{-w^{-1}χ} w^{-1}`.
    fn inverse(&self, x: &AffineElt) -> AffineElt {
        let winv = self.finite().inverse(&x.w);
        let chi = winv.apply_coweight(&x.chi).neg();
        AffineElt {
            len: x.len,
            chi,
            w: winv,
        }
    }
}
