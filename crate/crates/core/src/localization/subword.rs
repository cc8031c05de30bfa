use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coxeter::{reduced_word, AffineWeylGroup, Coxeter, WeylElt, WeylGroup};
use crate::localization::LocRing;
use crate::root_data::{Root, RootSystem};

/// A Coxeter group whose simple roots can be transported to classical roots.
pub trait Localizable: Coxeter + Clone + Send + Sync {
    fn root_system(&self) -> &RootSystem;
    /// Classical projection of `prefix(α_node)`.
    fn beta(&self, prefix: &Self::Elt, node: usize) -> Root;
    /// The finite Weyl group element through which `x` acts on classical roots.
    fn classical(&self, x: &Self::Elt) -> WeylElt;
}

impl Localizable for WeylGroup {
    fn root_system(&self) -> &RootSystem {
        self.rs()
    }

    fn beta(&self, prefix: &Self::Elt, node: usize) -> Root {
        prefix.apply_root(&self.rs().simple_root(node))
    }

    fn classical(&self, x: &Self::Elt) -> WeylElt {
        x.clone()
    }
}

impl Localizable for AffineWeylGroup {
    fn root_system(&self) -> &RootSystem {
        self.rs()
    }

    fn beta(&self, prefix: &Self::Elt, node: usize) -> Root {
        self.apply(prefix, &self.simple_affine_root(node)).classical
    }

    fn classical(&self, x: &Self::Elt) -> WeylElt {
        x.finite_part().clone()
    }
}

/// Localizations `v ↦ loc(v, w)` for every `v`, from one word `start · s_{word}`.
///
/// Subword sums are accumulated position by position, merging equal partial
/// products, so the work is bounded by the size of the lower interval rather
/// than by `2^ℓ(w)`.
pub fn row_from_word<G: Localizable, R: LocRing>(
    g: &G,
    start: &G::Elt,
    word: &[usize],
    flip: bool,
) -> HashMap<G::Elt, R> {
    let rank = g.root_system().rank();
    let mut states: HashMap<G::Elt, R> = HashMap::from([(start.clone(), R::one(rank))]);
    let mut prefix = start.clone();
    for (j, &i) in word.iter().enumerate() {
        let mut beta = g.beta(&prefix, i);
        if flip && j == 0 {
            beta = beta.neg();
        }
        let f = R::root_factor(&beta);
        let mut next: HashMap<G::Elt, R> = HashMap::with_capacity(states.len() * 2);
        let mut acc = |k: G::Elt, p: R| match next.get_mut(&k) {
            Some(v) => *v = v.add(&p),
            None => {
                next.insert(k, p);
            }
        };
        for (u, p) in &states {
            let us = g.mul_simple_right(u, i);
            let up = g.length(&us) > g.length(u);
            if R::DEMAZURE {
                acc(u.clone(), p.neg());
                acc(if up { us } else { u.clone() }, p.mul(&f));
            } else {
                acc(u.clone(), p.clone());
                if up {
                    acc(us, p.mul(&f));
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
        prefix = g.mul_simple_right(&prefix, i);
    }
    states
}

type Row<G, R> = Arc<HashMap<<G as Coxeter>::Elt, R>>;

/// Memoized localizations `loc(v, w)` in one flavor.
pub struct Localizer<G: Localizable, R: LocRing> {
    g: G,
    flip: bool,
    rows: RwLock<HashMap<G::Elt, Row<G, R>>>,
}

impl<G: Localizable, R: LocRing> Localizer<G, R> {
    pub fn new(g: G) -> Self {
        Self::with_flip(g, false)
    }

    /// Negates the first root of every word; used to confirm the verification
    /// suites detect a single sign error.
    #[doc(hidden)]
    pub fn with_flip(g: G, flip: bool) -> Self {
        Localizer {
            g,
            flip,
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &G {
        &self.g
    }

    pub fn rank(&self) -> usize {
        self.g.root_system().rank()
    }

    /// All nonzero `loc(v, w)`, keyed by `v`.
    pub fn row(&self, w: &G::Elt) -> Row<G, R> {
        if let Some(r) = self.rows.read().unwrap_or_else(|e| e.into_inner()).get(w) {
            return r.clone();
        }
        let (tau, word) = reduced_word(&self.g, w);
        let row = Arc::new(row_from_word::<G, R>(&self.g, &tau, &word, self.flip));
        self.rows
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(w.clone())
            .or_insert(row)
            .clone()
    }

    pub fn get(&self, v: &G::Elt, w: &G::Elt) -> R {
        self.row(w)
            .get(v)
            .cloned()
            .unwrap_or_else(|| R::zero(self.rank()))
    }

    /// All nonzero `loc(v, w)` through an explicitly given word for `w`.
    pub fn row_with_word(&self, start: &G::Elt, word: &[usize]) -> HashMap<G::Elt, R> {
        row_from_word::<G, R>(&self.g, start, word, self.flip)
    }

    /// `loc(v, w)` through an explicitly given word for `w`.
    pub fn get_with_word(&self, v: &G::Elt, start: &G::Elt, word: &[usize]) -> R {
        self.row_with_word(start, word)
            .remove(v)
            .unwrap_or_else(|| R::zero(self.rank()))
    }
}
