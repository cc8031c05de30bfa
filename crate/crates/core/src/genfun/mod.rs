//! Length generating functions of admissible sets and rank generating
//! functions of `Q_J`, with the closed formulas for the classical types.

mod qpoly;

use std::sync::Mutex;

use num_rational::Ratio;

use crate::coxeter::{NodeSet, WeylGroup};
use crate::error::{invalid, Result};
use crate::report::{Failure, Report};
use crate::richardson_poset::{admissible_set, build_qj, qj_for, Instance};
use crate::root_data::CartanType;

pub use qpoly::QPoly;

/// `F_λ(q) = Σ_{z ∈ Adm(-w_S λ)} q^{ℓ(z)}`.
pub fn f_brute(inst: &Instance) -> QPoly {
    QPoly::from_counts(admissible_set(inst).elements.iter().map(|z| z.length()))
}

/// `A_J(q) = Σ_{(x, y) ∈ Q_J} q^{ℓ(x) - ℓ(y)}`.
pub fn a_brute(inst: &Instance) -> QPoly {
    QPoly::from_counts(build_qj(inst).iter().map(|p| p.x.length() - p.y.length()))
}

/// `A_J(q)` directly from a Weyl group and `J`; works for reducible systems.
pub fn a_brute_for(w: &WeylGroup, j: &NodeSet) -> QPoly {
    QPoly::from_counts(qj_for(w, j).iter().map(|p| p.x.length() - p.y.length()))
}

/// `F(q) = q^d A(q^{-1})` coefficientwise, with `d = <λ, 2ρ>`.
pub fn check_duality(f: &QPoly, a: &QPoly, two_rho: i32, instance: &str) -> Report {
    let mut r = Report::new("F(q) = q^<l,2rho> A(1/q)", instance);
    let Ok(d) = usize::try_from(two_rho) else {
        r.check(false, || {
            Failure::new("negative degree", two_rho, serde_json::Value::Null, f, a)
        });
        return r;
    };
    if a.degree().is_some_and(|da| da > d) {
        r.check(false, || {
            Failure::new("degree mismatch", two_rho, serde_json::Value::Null, f, a)
        });
        return r;
    }
    let rev = a.reverse(d);
    r.check(&rev == f, || {
        Failure::new("coefficients", two_rho, serde_json::Value::Null, f, &rev)
    });
    r
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `F_{k,n}(q)` for the Grassmannian `Gr(k, n)`.
pub fn type_a_f(k: u32, n: u32) -> Result<QPoly> {
    if k < 1 || k >= n {
        return invalid(format!("type A formula needs 1 <= k < n, got k={k}, n={n}"));
    }
    let mut out = QPoly::zero();
    for i in 0..k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = sign * binom(n, i);
        let t1 = QPoly::q_int(k - i)
            .pow(i)
            .mul(&QPoly::q_int(k - i + 1).pow(n - i))
            .shift(i * (n - k + 1));
        let t2 = QPoly::q_int(k - i - 1)
            .pow(i)
            .mul(&QPoly::q_int(k - i).pow(n - i))
            .shift(n + n * i - k * i);
        out = out.add(&t1.sub(&t2).scale(c));
    }
    Ok(out)
}

/// `F_{k,n}(1)` from the specialized formula.
pub fn type_a_f_at_one(k: u32, n: u32) -> Result<i64> {
    if k < 1 || k >= n {
        return invalid(format!("type A formula needs 1 <= k < n, got k={k}, n={n}"));
    }
    let p = |b: i64, e: u32| b.pow(e);
    Ok((0..k)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let (a, b) = ((k - i) as i64, (k - i + 1) as i64);
            sign * binom(n, i) * (p(a, i) * p(b, n - i) - p(a - 1, i) * p(a, n - i))
        })
        .sum())
}

/// `num(x) / den(x)` with `QPoly` coefficients and `den(0) = 1`.
#[derive(Debug)]
pub struct SeriesX {
    num: Vec<QPoly>,
    den: Vec<QPoly>,
    cache: Mutex<Vec<QPoly>>,
}

impl SeriesX {
    pub fn new(num: Vec<QPoly>, den: Vec<QPoly>) -> Result<SeriesX> {
        if den.first() != Some(&QPoly::one()) {
            return invalid("denominator must have constant term 1");
        }
        Ok(SeriesX {
            num,
            den,
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn numerator(&self) -> &[QPoly] {
        &self.num
    }

    pub fn denominator(&self) -> &[QPoly] {
        &self.den
    }

    /// Coefficient of `x^n`, from `c_n = num_n - Σ_{k≥1} den_k c_{n-k}`.
    pub fn coefficient(&self, n: usize) -> QPoly {
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= n {
            let m = cache.len();
            let mut c = self.num.get(m).cloned().unwrap_or_default();
            for k in 1..=m.min(self.den.len() - 1) {
                c = c.sub(&self.den[k].mul(&cache[m - k]));
            }
            cache.push(c);
        }
        cache[n].clone()
    }
}

fn q(coeffs: &[i64]) -> QPoly {
    QPoly::new(coeffs.to_vec())
}

/// `(1 - q²x)(1 - (q+q²)x)(1 - [2]²x + q³[2]x²)`.
fn bd_denominator() -> Vec<QPoly> {
    let f1 = [QPoly::one(), q(&[0, 0, -1])];
    let f2 = [QPoly::one(), q(&[0, -1, -1])];
    let two = QPoly::q_int(2);
    let f3 = [QPoly::one(), two.mul(&two).neg(), two.shift(3)];
    mul_x(&mul_x(&f1, &f2), &f3)
}

fn mul_x(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// `Σ_n F_{B_n}(q) x^n`.
pub fn type_b_series() -> SeriesX {
    let two = QPoly::q_int(2);
    let num = vec![
        QPoly::one(),
        q(&[0, -1, -3]),
        q(&[0, -1, 0, 5, 4]),
        q(&[-2, -5, -3]).shift(4),
        two.mul(&two).shift(6),
    ];
    SeriesX::new(num, bd_denominator()).expect("unit constant term")
}

/// `Σ_n F_{D_n}(q) x^n`.
pub fn type_d_series() -> SeriesX {
    let num = vec![
        QPoly::one(),
        q(&[0, -1, -3]),
        q(&[0, 0, -1, 1, 4]),
        q(&[0, -2, -3, 2, 8, 2, -3]),
        q(&[0, 0, 0, 2, 3, -3, -9, -4, 1]),
        q(&[0, 0, 0, 0, 0, 0, -1, 0, 3, 2]),
    ];
    SeriesX::new(num, bd_denominator()).expect("unit constant term")
}

/// `<λ, 2ρ>` for the cominuscule coweight of each family.
pub fn two_rho_b(n: u32) -> usize {
    (2 * n).saturating_sub(1) as usize
}

pub fn two_rho_d(n: u32) -> usize {
    (2 * n).saturating_sub(2) as usize
}

/// `F_{C_n}(1) = Σ_{i=0}^n 2^{n-i} n!/i!`.
pub fn type_c_count(n: u32) -> i128 {
    (0..=n)
        .map(|i| {
            let falling: i128 = ((i + 1)..=n).map(|k| k as i128).product();
            (1i128 << (n - i)) * falling
        })
        .sum()
}

/// `F_{C_0}(1) = 1`, `F_{C_{n+1}}(1) = 2(n+1) F_{C_n}(1) + 1`.
pub fn type_c_recurrence(n: u32) -> i128 {
    (0..n).fold(1i128, |f, m| 2 * (m as i128 + 1) * f + 1)
}

/// `⌊2^n n! √e⌋`, from rational enclosures of `Σ (1/2)^k / k!`.
pub fn type_c_floor_sqrt_e(n: u32) -> Result<i128> {
    if n > 12 {
        return invalid("exact enclosure is limited to n <= 12");
    }
    let big_n: i128 = (1i128 << n) * (1..=n as i128).product::<i128>();
    let mut sum = Ratio::from_integer(0i128);
    let mut term = Ratio::from_integer(1i128);
    for k in 0..40i128 {
        sum += term;
        term /= 2 * (k + 1);
        // tail after this partial sum is below 2·term since later ratios are < 1/2
        let lo = (sum * big_n).floor();
        let hi = ((sum + term * 2) * big_n).floor();
        if lo == hi {
            return Ok(lo.to_integer());
        }
    }
    invalid("enclosure did not separate")
}

/// Sum formula, recurrence and the `√e` characterization agree.
pub fn type_c_check(n: u32) -> Result<bool> {
    let s = type_c_count(n);
    Ok(s == type_c_recurrence(n) && s == type_c_floor_sqrt_e(n)?)
}

/// Compares `F_brute` with the closed form of the instance's family, when
/// there is one: Grassmannians `(A_{n-1}, ω_k)`, `(B_n, ω_1)`, `(C_n, ω_n)`
/// at `q = 1`, and `(D_n, ω_1)`. Also checks the duality with `A_J`.
pub fn verify_closed_forms(inst: &Instance) -> Report {
    let name = inst.name();
    let f = f_brute(inst);
    let mut r = check_duality(
        &f,
        &a_brute(inst),
        inst.rs().two_rho_pairing(inst.lambda()),
        &name,
    );
    r.theorem = "generating functions: duality and closed forms".into();
    let n = inst.rs().rank();
    let lam = inst.lambda().coords();
    let is_fund = |k: usize| {
        lam.iter()
            .enumerate()
            .all(|(i, &c)| c == i32::from(i + 1 == k))
    };
    let mut compare = |label: &str, closed: QPoly| {
        r.check(closed == f, || Failure::new(label, &name, "", &f, &closed));
    };
    match inst.rs().cartan_type() {
        CartanType::A => {
            if let Some(k) = (1..=n).find(|&k| is_fund(k)) {
                match type_a_f(k as u32, n as u32 + 1) {
                    Ok(p) => compare("type A formula", p),
                    Err(e) => r.error("type A formula", &e),
                }
            }
        }
        CartanType::B if is_fund(1) => compare("type B series", type_b_series().coefficient(n)),
        CartanType::D if is_fund(1) => compare("type D series", type_d_series().coefficient(n)),
        CartanType::C if is_fund(n) => {
            let brute = i128::from(f.eval_one());
            let count = type_c_count(n as u32);
            r.check(count == brute, || {
                Failure::new("type C sum formula", &name, "", brute, count)
            });
            let rec = type_c_recurrence(n as u32);
            r.check(rec == brute, || {
                Failure::new("type C recurrence", &name, "", brute, rec)
            });
            match type_c_floor_sqrt_e(n as u32) {
                Ok(v) => r.check(v == brute, || {
                    Failure::new("type C floor(2^n n! sqrt e)", &name, "", brute, v)
                }),
                Err(e) => r.error("type C floor(2^n n! sqrt e)", &e),
            }
        }
        _ => {}
    }
    r
}

/// One line of the generating-function table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GenfunRow {
    #[serde(rename = "type")]
    pub family: String,
    pub params: String,
    pub f: QPoly,
    pub a: Option<QPoly>,
    pub f_at_one: i64,
}

impl GenfunRow {
    pub const CSV_HEADER: &'static str = "type,params,F,A,F(1)";

    pub fn to_csv(&self) -> String {
        let a = self.a.as_ref().map(|p| p.to_string()).unwrap_or_default();
        format!(
            "{},{},\"{}\",\"{}\",{}",
            self.family, self.params, self.f, a, self.f_at_one
        )
    }
}
