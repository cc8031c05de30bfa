//! Finite and extended affine Weyl group arithmetic.
//!
//! Everything generic (Bruhat order, reduced words, lower cones, the three
//! Demazure products, parabolic cosets) is written once against [`Coxeter`]
//! and only uses descents and multiplication by simple reflections. For the
//! extended group the length-zero part `τ` is carried as the residue of a
//! reduced word: `x = τ · s_{i_1} ⋯ s_{i_k}`.

mod affine;
mod finite;
mod properties;

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

pub use affine::{im_length, AffineElt, AffineWeylGroup, EltJson, OmegaElt};
pub use finite::{WeylElt, WeylGroup};
pub use properties::{random_affine, verify_demazure_affine, verify_demazure_finite};

/// Group operations needed by the generic algorithms.
pub trait Coxeter {
    type Elt: Clone + Eq + Hash + Ord + Debug;

    /// Labels of the simple reflections.
    fn nodes(&self) -> &[usize];
    fn identity(&self) -> Self::Elt;
    fn length(&self, x: &Self::Elt) -> usize;
    /// `x s_i < x`.
    fn is_right_descent(&self, x: &Self::Elt, node: usize) -> bool;
    /// `s_i x < x`.
    fn is_left_descent(&self, x: &Self::Elt, node: usize) -> bool;
    fn mul(&self, x: &Self::Elt, y: &Self::Elt) -> Self::Elt;
    fn mul_simple_right(&self, x: &Self::Elt, node: usize) -> Self::Elt;
    fn mul_simple_left(&self, node: usize, x: &Self::Elt) -> Self::Elt;
    fn inverse(&self, x: &Self::Elt) -> Self::Elt;
}

/// A set of nodes, kept sorted. Used for parabolic subsets `J`.
#[derive(
    Clone,
    Debug,
    Default,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    serde::Serialize,
    serde::Deserialize,
)]
pub struct NodeSet(Vec<usize>);

impl NodeSet {
    pub fn empty() -> NodeSet {
        NodeSet(Vec::new())
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.binary_search(&node).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// All subsets of `nodes`, in binary-counter order.
    pub fn all_subsets(nodes: &[usize]) -> Vec<NodeSet> {
        (0..1u32 << nodes.len())
            .map(|mask| {
                nodes
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &n)| n)
                    .collect()
            })
            .collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        NodeSet(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Cosets `x W_J`.
    Right,
    /// Cosets `W_J x`.
    Left,
}

pub fn right_descents<G: Coxeter>(g: &G, x: &G::Elt) -> Vec<usize> {
    g.nodes()
        .iter()
        .copied()
        .filter(|&i| g.is_right_descent(x, i))
        .collect()
}

pub fn left_descents<G: Coxeter>(g: &G, x: &G::Elt) -> Vec<usize> {
    g.nodes()
        .iter()
        .copied()
        .filter(|&i| g.is_left_descent(x, i))
        .collect()
}

/// Peels the smallest-index right descent until length zero.
///
/// Returns `(τ, word)` with `x = τ · s_{word[0]} ⋯ s_{word[k-1]}` and
/// `word.len() == ℓ(x)`.
pub fn reduced_word<G: Coxeter>(g: &G, x: &G::Elt) -> (G::Elt, Vec<usize>) {
    let mut cur = x.clone();
    let mut rev = Vec::with_capacity(g.length(x));
    while g.length(&cur) > 0 {
        let i = g
            .nodes()
            .iter()
            .copied()
            .find(|&i| g.is_right_descent(&cur, i))
            .expect("positive length implies a right descent");
        cur = g.mul_simple_right(&cur, i);
        rev.push(i);
    }
    rev.reverse();
    (cur, rev)
}

pub fn apply_word<G: Coxeter>(g: &G, base: &G::Elt, word: &[usize]) -> G::Elt {
    word.iter()
        .fold(base.clone(), |x, &i| g.mul_simple_right(&x, i))
}

/// Every reduced word of `x`, together with the shared length-zero residue.
pub fn all_reduced_words<G: Coxeter>(g: &G, x: &G::Elt) -> (G::Elt, Vec<Vec<usize>>) {
    fn go<G: Coxeter>(g: &G, x: &G::Elt, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if g.length(x) == 0 {
            let mut w = suffix.clone();
            w.reverse();
            out.push(w);
            return;
        }
        for &i in g.nodes() {
            if g.is_right_descent(x, i) {
                suffix.push(i);
                go(g, &g.mul_simple_right(x, i), suffix, out);
                suffix.pop();
            }
        }
    }
    let (tau, _) = reduced_word(g, x);
    let mut out = Vec::new();
    go(g, x, &mut Vec::new(), &mut out);
    (tau, out)
}

/// Bruhat order `z ≤ x` by the descent recursion: choose `s` with `sx < x`;
/// then `z ≤ x` iff `sz ≤ sx` (when `sz < z`) or `z ≤ sx` (otherwise).
/// Elements with different length-zero parts are incomparable.
pub fn bruhat_leq<G: Coxeter>(g: &G, z: &G::Elt, x: &G::Elt) -> bool {
    let mut z = z.clone();
    let mut x = x.clone();
    loop {
        let (lz, lx) = (g.length(&z), g.length(&x));
        if lz > lx {
            return false;
        }
        if lz == lx {
            return z == x;
        }
        let s = g
            .nodes()
            .iter()
            .copied()
            .find(|&i| g.is_left_descent(&x, i))
            .expect("positive length implies a left descent");
        x = g.mul_simple_left(s, &x);
        if g.is_left_descent(&z, s) {
            z = g.mul_simple_left(s, &z);
        }
    }
}

/// `{z : z ≤ x}`, sorted by length then canonical form.
///
/// Built letter by letter: the subwords of `w s` are the subwords of `w`,
/// optionally followed by `s`.
pub fn lower_cone<G: Coxeter>(g: &G, x: &G::Elt) -> Vec<G::Elt> {
    let (tau, word) = reduced_word(g, x);
    let mut set: HashSet<G::Elt> = HashSet::new();
    set.insert(tau);
    for &i in &word {
        let ext: Vec<G::Elt> = set.iter().map(|z| g.mul_simple_right(z, i)).collect();
        set.extend(ext);
    }
    let mut out: Vec<G::Elt> = set.into_iter().collect();
    out.sort_by(|a, b| (g.length(a), a).cmp(&(g.length(b), b)));
    out
}

/// All `τ u` with `τ` in `starts` and `ℓ(u) ≤ max_len`, sorted by length.
pub fn ball<G: Coxeter>(g: &G, starts: &[G::Elt], max_len: usize) -> Vec<G::Elt> {
    let mut seen: HashSet<G::Elt> = starts.iter().cloned().collect();
    let mut layer: Vec<G::Elt> = seen.iter().cloned().collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for u in &layer {
            for &i in g.nodes() {
                let us = g.mul_simple_right(u, i);
                if g.length(&us) > g.length(u) && seen.insert(us.clone()) {
                    next.push(us);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<G::Elt> = seen.into_iter().collect();
    out.sort_by(|a, b| (g.length(a), a).cmp(&(g.length(b), b)));
    out
}

/// `x ∗ y = max{uv : u ≤ x, v ≤ y}`.
pub fn demazure_star<G: Coxeter>(g: &G, x: &G::Elt, y: &G::Elt) -> G::Elt {
    let (tau, word) = reduced_word(g, y);
    let mut z = g.mul(x, &tau);
    for &i in &word {
        if !g.is_right_descent(&z, i) {
            z = g.mul_simple_right(&z, i);
        }
    }
    z
}

/// `x ▷ y = min{uy : u ≤ x}`.
pub fn demazure_trir<G: Coxeter>(g: &G, x: &G::Elt, y: &G::Elt) -> G::Elt {
    let (tau, word) = reduced_word(g, x);
    let mut z = y.clone();
    for &i in word.iter().rev() {
        if g.is_left_descent(&z, i) {
            z = g.mul_simple_left(i, &z);
        }
    }
    g.mul(&tau, &z)
}

/// `x ◁ y = min{xv : v ≤ y}`.
pub fn demazure_tril<G: Coxeter>(g: &G, x: &G::Elt, y: &G::Elt) -> G::Elt {
    let (tau, word) = reduced_word(g, y);
    let mut z = g.mul(x, &tau);
    for &i in &word {
        if g.is_right_descent(&z, i) {
            z = g.mul_simple_right(&z, i);
        }
    }
    z
}

/// Minimal element of `x W_J` (right) or `W_J x` (left), by descent peeling.
pub fn min_in_coset<G: Coxeter>(g: &G, x: &G::Elt, j: &NodeSet, side: Side) -> G::Elt {
    let mut cur = x.clone();
    loop {
        let step = match side {
            Side::Right => j.iter().find(|&i| g.is_right_descent(&cur, i)),
            Side::Left => j.iter().find(|&i| g.is_left_descent(&cur, i)),
        };
        match (step, side) {
            (Some(i), Side::Right) => cur = g.mul_simple_right(&cur, i),
            (Some(i), Side::Left) => cur = g.mul_simple_left(i, &cur),
            (None, _) => return cur,
        }
    }
}

/// Maximal element of `x W_J` (right) or `W_J x` (left). `W_J` must be finite.
pub fn max_in_coset<G: Coxeter>(g: &G, x: &G::Elt, j: &NodeSet, side: Side) -> G::Elt {
    let mut cur = x.clone();
    loop {
        let step = match side {
            Side::Right => j.iter().find(|&i| !g.is_right_descent(&cur, i)),
            Side::Left => j.iter().find(|&i| !g.is_left_descent(&cur, i)),
        };
        match (step, side) {
            (Some(i), Side::Right) => cur = g.mul_simple_right(&cur, i),
            (Some(i), Side::Left) => cur = g.mul_simple_left(i, &cur),
            (None, _) => return cur,
        }
    }
}

pub fn is_min_coset_rep<G: Coxeter>(g: &G, x: &G::Elt, j: &NodeSet, side: Side) -> bool {
    match side {
        Side::Right => j.iter().all(|i| !g.is_right_descent(x, i)),
        Side::Left => j.iter().all(|i| !g.is_left_descent(x, i)),
    }
}

/// `w_J`.
pub fn longest_in_parabolic<G: Coxeter>(g: &G, j: &NodeSet) -> G::Elt {
    max_in_coset(g, &g.identity(), j, Side::Right)
}

/// `W_J` as a list. `W_J` must be finite.
pub fn parabolic_subgroup<G: Coxeter>(g: &G, j: &NodeSet) -> Vec<G::Elt> {
    lower_cone(g, &longest_in_parabolic(g, j))
}

/// Minimal and maximal coset representatives in the finite Weyl group.
#[derive(Clone, Debug)]
pub struct CosetReps {
    /// `W^J`: minimal representatives of `W / W_J`.
    pub min_right: Vec<WeylElt>,
    /// `^J W`: minimal representatives of `W_J \ W`.
    pub min_left: Vec<WeylElt>,
    /// `W^J_max`: maximal representatives of `W / W_J`.
    pub max_right: Vec<WeylElt>,
}

pub fn coset_reps(w: &WeylGroup, j: &NodeSet) -> CosetReps {
    let els = w.elements();
    let pick =
        |f: &dyn Fn(&WeylElt) -> bool| els.iter().filter(|x| f(x)).cloned().collect::<Vec<_>>();
    CosetReps {
        min_right: pick(&|x| is_min_coset_rep(w, x, j, Side::Right)),
        min_left: pick(&|x| is_min_coset_rep(w, x, j, Side::Left)),
        max_right: pick(&|x| j.iter().all(|i| w.is_right_descent(x, i))),
    }
}

#[cfg(test)]
mod tests;
