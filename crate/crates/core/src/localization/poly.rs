//! Exact rings housing localization values.
//!
//! Both rings are sparse maps from exponent vectors to integer coefficients.
//! In `PolyH` the variables are the simple roots and exponents are
//! nonnegative; in `LaurentK` a term `c·e^γ` is stored under the
//! simple-root coordinates of `γ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{demazure_star, Coxeter, WeylElt};
use crate::error::{Error, Result};
use crate::root_data::Root;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
struct Sparse {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl Sparse {
    fn zero(nvars: usize) -> Sparse {
        Sparse {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    fn monomial(exp: Vec<i32>, c: i64) -> Sparse {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        Sparse { nvars, terms }
    }

    fn constant(nvars: usize, c: i64) -> Sparse {
        Sparse::monomial(vec![0; nvars], c)
    }

    fn add_term(&mut self, exp: Vec<i32>, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    fn add(&self, o: &Sparse) -> Sparse {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    fn neg(&self) -> Sparse {
        Sparse {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn sub(&self, o: &Sparse) -> Sparse {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Sparse) -> Sparse {
        let mut out = Sparse::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn shift(&self, by: &[i32]) -> Sparse {
        Sparse {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), *c))
                .collect(),
        }
    }

    fn min_exponents(&self) -> Vec<i32> {
        (0..self.nvars)
            .map(|k| self.terms.keys().map(|e| e[k]).min().unwrap_or(0))
            .collect()
    }

    /// Division with nonnegative exponents, lex leading terms.
    fn div_poly(&self, d: &Sparse) -> Result<Sparse> {
        let (lead_e, lead_c) = match d.terms.iter().next_back() {
            Some((e, c)) => (e.clone(), *c),
            None => return Err(Error::InexactDivision("division by zero".into())),
        };
        let mut rem = self.clone();
        let mut q = Sparse::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            let qe: Vec<i32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) || c % lead_c != 0 {
                return Err(Error::InexactDivision("nonzero remainder".into()));
            }
            let t = Sparse::monomial(qe, c / lead_c);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Ok(q)
    }

    /// Exact division in the Laurent ring: clear monomial factors, divide, shift back.
    fn div_laurent(&self, d: &Sparse) -> Result<Sparse> {
        let mp = self.min_exponents();
        let md = d.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let q = self.shift(&neg(&mp)).div_poly(&d.shift(&neg(&md)))?;
        let back: Vec<i32> = mp.iter().zip(&md).map(|(a, b)| a - b).collect();
        Ok(q.shift(&back))
    }

    fn unit_inverse(&self) -> Option<Sparse> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((e, &c)), None) if c == 1 || c == -1 => {
                Some(Sparse::monomial(e.iter().map(|x| -x).collect(), c))
            }
            _ => None,
        }
    }
}

impl Serialize for Sparse {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter())
    }
}

impl<'de> Deserialize<'de> for Sparse {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<(Vec<i32>, i64)> = Vec::deserialize(d)?;
        let nvars = terms.first().map_or(0, |(e, _)| e.len());
        if terms.iter().any(|(e, _)| e.len() != nvars) {
            return Err(serde::de::Error::custom(
                "exponent vectors of different lengths",
            ));
        }
        let mut out = Sparse::zero(nvars);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    p: &Sparse,
    mono: impl Fn(&[i32]) -> String,
) -> fmt::Result {
    if p.terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (e, &c)) in p.terms.iter().rev().enumerate() {
        let m = mono(e);
        let a = c.abs();
        let body = match (m.is_empty(), a) {
            (true, _) => a.to_string(),
            (false, 1) => m,
            (false, _) => format!("{a}*{m}"),
        };
        match (k, c < 0) {
            (0, true) => write!(f, "-{body}")?,
            (0, false) => write!(f, "{body}")?,
            (_, true) => write!(f, " - {body}")?,
            (_, false) => write!(f, " + {body}")?,
        }
    }
    Ok(())
}

/// Element of `H_T^*(pt) = Z[α_1, …, α_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyH(Sparse);

/// Element of `K_T^*(pt) = Z[e^{±α_1}, …, e^{±α_r}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentK(Sparse);

impl PolyH {
    /// The linear form `Σ c_i α_i` of a root.
    pub fn linear(r: &Root) -> PolyH {
        let n = r.0.len();
        let mut p = Sparse::zero(n);
        for (i, &c) in r.0.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c as i64);
        }
        PolyH(p)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> {
        self.0.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degs = self.0.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn pow(&self, k: u32) -> PolyH {
        (0..k).fold(PolyH::one(self.0.nvars), |acc, _| acc.mul(self))
    }
}

impl LaurentK {
    /// `e^γ`.
    pub fn exp(gamma: &Root) -> LaurentK {
        LaurentK(Sparse::monomial(gamma.0.clone(), 1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> {
        self.0.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    /// Degree-`k` part of the expansion `e^γ = Σ γ^k / k!`, times `k!`.
    pub fn graded_part_scaled(&self, k: u32) -> PolyH {
        let n = self.0.nvars;
        self.terms().fold(PolyH::zero(n), |acc, (e, c)| {
            acc.add(&PolyH::linear(&Root(e.to_vec())).pow(k).scale(c))
        })
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.0, |e| {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("a{}", i + 1)
                    } else {
                        format!("a{}^{x}", i + 1)
                    }
                })
                .collect();
            parts.join("*")
        })
    }
}

impl fmt::Display for LaurentK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.0, |e| {
            if e.iter().all(|&x| x == 0) {
                String::new()
            } else {
                let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("e^({})", parts.join(","))
            }
        })
    }
}

/// Ring operations shared by both flavors, plus the flavor-specific pieces of
/// the subword formulas.
pub trait LocRing:
    Clone + PartialEq + fmt::Debug + fmt::Display + Serialize + Send + Sync + 'static
{
    /// `"H"` or `"K"`.
    const FLAVOR: &'static str;
    /// Subwords are combined with the Demazure product and skipped letters
    /// contribute a sign.
    const DEMAZURE: bool;

    fn zero(rank: usize) -> Self;
    fn one(rank: usize) -> Self;
    /// `β` in cohomology, `1 - e^β` in K-theory.
    fn root_factor(beta: &Root) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Result<Self>;
    /// Inverse of `±1` (or `±e^γ` in K-theory).
    fn unit_inverse(&self) -> Option<Self>;
    /// Action of a finite Weyl group element.
    fn weyl_act(&self, w: &WeylElt) -> Self;

    /// `a · b` under the product the flavor uses for factorizations: the
    /// length-additive product in cohomology, the Demazure product in K-theory.
    fn combine<G: Coxeter>(g: &G, a: &G::Elt, b: &G::Elt) -> Option<G::Elt> {
        if Self::DEMAZURE {
            Some(demazure_star(g, a, b))
        } else {
            let ab = g.mul(a, b);
            (g.length(&ab) == g.length(a) + g.length(b)).then_some(ab)
        }
    }

    fn product(rank: usize, factors: impl IntoIterator<Item = Self>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(rank), |acc, f| acc.mul(&f))
    }
}

macro_rules! common_ops {
    () => {
        fn zero(rank: usize) -> Self {
            Self(Sparse::zero(rank))
        }
        fn one(rank: usize) -> Self {
            Self(Sparse::constant(rank, 1))
        }
        fn add(&self, o: &Self) -> Self {
            Self(self.0.add(&o.0))
        }
        fn sub(&self, o: &Self) -> Self {
            Self(self.0.sub(&o.0))
        }
        fn mul(&self, o: &Self) -> Self {
            Self(self.0.mul(&o.0))
        }
        fn neg(&self) -> Self {
            Self(self.0.neg())
        }
        fn scale(&self, c: i64) -> Self {
            Self(self.0.mul(&Sparse::constant(self.0.nvars, c)))
        }
        fn is_zero(&self) -> bool {
            self.0.terms.is_empty()
        }
        fn unit_inverse(&self) -> Option<Self> {
            self.0.unit_inverse().map(Self)
        }
    };
}

impl LocRing for PolyH {
    const FLAVOR: &'static str = "H";
    const DEMAZURE: bool = false;

    common_ops!();

    fn root_factor(beta: &Root) -> Self {
        PolyH::linear(beta)
    }

    fn div_exact(&self, d: &Self) -> Result<Self> {
        self.0.div_poly(&d.0).map(PolyH)
    }

    /// Substitutes `α_i ↦ w(α_i)`.
    fn weyl_act(&self, w: &WeylElt) -> Self {
        let n = self.0.nvars;
        let images: Vec<PolyH> = (1..=n)
            .map(|i| PolyH::linear(&w.apply_root(&Root::simple(n, i))))
            .collect();
        let mut out = PolyH::zero(n);
        for (e, &c) in &self.0.terms {
            let mut t = PolyH::one(n).scale(c);
            for (img, &k) in images.iter().zip(e) {
                t = t.mul(&img.pow(k as u32));
            }
            out = out.add(&t);
        }
        out
    }
}

impl LocRing for LaurentK {
    const FLAVOR: &'static str = "K";
    const DEMAZURE: bool = true;

    common_ops!();

    fn root_factor(beta: &Root) -> Self {
        let n = beta.0.len();
        LaurentK::one(n).sub(&LaurentK::exp(beta))
    }

    fn div_exact(&self, d: &Self) -> Result<Self> {
        self.0.div_laurent(&d.0).map(LaurentK)
    }

    /// Sends `e^γ ↦ e^{wγ}`.
    fn weyl_act(&self, w: &WeylElt) -> Self {
        let mut out = Sparse::zero(self.0.nvars);
        for (e, &c) in &self.0.terms {
            out.add_term(w.apply_vec(e), c);
        }
        LaurentK(out)
    }
}
