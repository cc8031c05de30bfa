use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer polynomial in `q`; coefficient `k` multiplies `q^k`.
///
/// Kept canonical: no trailing zero coefficients, so the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> QPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> QPoly {
        QPoly(Vec::new())
    }

    pub fn one() -> QPoly {
        QPoly(vec![1])
    }

    /// `[i] = 1 + q + ⋯ + q^{i-1}`; `[0] = 0`.
    pub fn q_int(i: u32) -> QPoly {
        QPoly(vec![1; i as usize])
    }

    /// `Σ q^{d}` over the given degrees.
    pub fn from_counts(degrees: impl IntoIterator<Item = usize>) -> QPoly {
        let mut c = Vec::new();
        for d in degrees {
            if c.len() <= d {
                c.resize(d + 1, 0);
            }
            c[d] += 1;
        }
        QPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: i64) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| acc.mul(self))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: u32) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![0; k as usize];
        c.extend_from_slice(&self.0);
        QPoly(c)
    }

    /// `q^d p(q^{-1})`; requires `deg p ≤ d`.
    pub fn reverse(&self, d: usize) -> QPoly {
        QPoly::new((0..=d).map(|k| self.coeff(d - k)).collect())
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Comma-separated coefficients from degree 0 up.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
