//! Equivariant localizations of Schubert classes in cohomology (`d_{v,w}`)
//! and K-theory (`e_{v,w}`) for the finite and the extended affine Weyl
//! group, the pushforward of projected Richardson classes and the comparison
//! with the affine side.
//!
//! Affine roots are projected to classical roots as soon as they appear, so
//! both flavors live in rings on the finite simple roots. For `w = τ u` with
//! `τ ∈ Ω`, the roots `β_j` are read off `τ s_{i_1} ⋯ s_{i_{j-1}} α_{i_j}` and
//! `loc(v, w) = 0` unless `v` has the same `Ω` component.

mod lemmas;
mod poly;
mod richardson;
mod subword;

use crate::coxeter::{AffineElt, AffineWeylGroup, WeylElt, WeylGroup};
use crate::report::Report;

pub use lemmas::{
    graded_comparison, lemma_fin_h, lemma_fin_k, lemma_k1, lemma_k2, lemma_k3, lemma_k4_h,
    lemma_suite, matrix_identity_k, matrix_identity_k_with, reduced_word_independence,
    support_and_degree, BruhatMatrix, SuiteOptions,
};
pub use poly::{LaurentK, LocRing, PolyH};
pub use richardson::{
    affine_side_loc, euler_normal, lemma_q, richardson_loc, richardson_loc_proof,
    richardson_loc_raw, verify_cmain, verify_forms, verify_kmain, verify_main,
};
pub use subword::{row_from_word, Localizable, Localizer};

/// Memoized localization tables for one root system, both flavors, finite and
/// affine.
pub struct LocContext {
    fin_h: Localizer<WeylGroup, PolyH>,
    fin_k: Localizer<WeylGroup, LaurentK>,
    aff_h: Localizer<AffineWeylGroup, PolyH>,
    aff_k: Localizer<AffineWeylGroup, LaurentK>,
}

impl LocContext {
    pub fn new(aff: &AffineWeylGroup) -> LocContext {
        Self::with_sign_flip(aff, false)
    }

    #[doc(hidden)]
    pub fn with_sign_flip(aff: &AffineWeylGroup, flip: bool) -> LocContext {
        let fin = aff.finite().clone();
        LocContext {
            fin_h: Localizer::with_flip(fin.clone(), flip),
            fin_k: Localizer::with_flip(fin, flip),
            aff_h: Localizer::with_flip(aff.clone(), flip),
            aff_k: Localizer::with_flip(aff.clone(), flip),
        }
    }

    pub fn finite(&self) -> &WeylGroup {
        self.fin_h.group()
    }

    pub fn affine(&self) -> &AffineWeylGroup {
        self.aff_h.group()
    }

    pub fn rank(&self) -> usize {
        self.fin_h.rank()
    }

    pub fn fin<R: Flavor>(&self) -> &Localizer<WeylGroup, R> {
        R::tables(self).0
    }

    pub fn aff<R: Flavor>(&self) -> &Localizer<AffineWeylGroup, R> {
        R::tables(self).1
    }

    /// `d_{v,w}` on the extended affine Weyl group.
    pub fn d_loc(&self, v: &AffineElt, w: &AffineElt) -> PolyH {
        self.aff_h.get(v, w)
    }

    /// `e_{v,w}` on the extended affine Weyl group.
    pub fn e_loc(&self, v: &AffineElt, w: &AffineElt) -> LaurentK {
        self.aff_k.get(v, w)
    }

    /// `d_{v,w}` on the finite Weyl group.
    pub fn d_fin(&self, v: &WeylElt, w: &WeylElt) -> PolyH {
        self.fin_h.get(v, w)
    }

    /// `e_{v,w}` on the finite Weyl group.
    pub fn e_fin(&self, v: &WeylElt, w: &WeylElt) -> LaurentK {
        self.fin_k.get(v, w)
    }
}

/// Selects the tables of a flavor.
pub trait Flavor: LocRing {
    fn tables(
        ctx: &LocContext,
    ) -> (
        &Localizer<WeylGroup, Self>,
        &Localizer<AffineWeylGroup, Self>,
    );
    /// Finite-group identities that only exist in this flavor.
    fn finite_lemmas(ctx: &LocContext) -> Vec<Report>;
}

impl Flavor for PolyH {
    fn tables(
        ctx: &LocContext,
    ) -> (
        &Localizer<WeylGroup, Self>,
        &Localizer<AffineWeylGroup, Self>,
    ) {
        (&ctx.fin_h, &ctx.aff_h)
    }

    fn finite_lemmas(ctx: &LocContext) -> Vec<Report> {
        vec![lemma_k4_h(ctx), lemma_fin_h(ctx)]
    }
}

impl Flavor for LaurentK {
    fn tables(
        ctx: &LocContext,
    ) -> (
        &Localizer<WeylGroup, Self>,
        &Localizer<AffineWeylGroup, Self>,
    ) {
        (&ctx.fin_k, &ctx.aff_k)
    }

    fn finite_lemmas(ctx: &LocContext) -> Vec<Report> {
        vec![
            lemma_fin_k(ctx),
            matrix_identity_k_with(ctx, BruhatMatrix::Mobius),
        ]
    }
}

/// `w · p`.
pub fn weyl_act<R: LocRing>(w: &WeylElt, p: &R) -> R {
    p.weyl_act(w)
}
