//! Exact combinatorics and equivariant localization for projected Richardson
//! varieties in `G/P` and admissible sets in the extended affine Weyl group.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_data`]: Cartan data for types A–D.
//! * [`coxeter`]: finite and extended affine Weyl groups, Bruhat order,
//!   Demazure products and parabolic cosets.
//! * [`richardson_poset`]: the poset `Q_J`, the admissible set, the map
//!   `θ(x, y) = y t^{-λ} x^{-1}`, the Rietsch / Goodearl–Yakimov models and
//!   poset diagnostics.
//! * [`genfun`]: length and rank generating functions and their closed forms.
//! * [`localization`]: Kostant–Kumar localizations in cohomology and
//!   K-theory, and the pushforward comparisons.
//! * [`cli`]: the `projrich` command-line driver.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod genfun;
pub mod localization;
pub mod report;
pub mod richardson_poset;
pub mod root_data;

pub use error::{Error, Result};
