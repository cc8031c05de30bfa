//! Verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Failures beyond this many are counted but not stored.
const MAX_STORED: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub x: Value,
    pub y: Value,
    pub w: Value,
    pub lhs: Value,
    pub rhs: Value,
}

impl Failure {
    pub fn new(
        x: impl Serialize,
        y: impl Serialize,
        w: impl Serialize,
        lhs: impl Serialize,
        rhs: impl Serialize,
    ) -> Failure {
        Failure {
            x: to_value(x),
            y: to_value(y),
            w: to_value(w),
            lhs: to_value(lhs),
            rhs: to_value(rhs),
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Outcome of one verification suite on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub instance: String,
    pub n_checked: usize,
    pub n_failed: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(theorem: impl Into<String>, instance: impl Into<String>) -> Report {
        Report {
            theorem: theorem.into(),
            instance: instance.into(),
            n_checked: 0,
            n_failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.n_failed == 0
    }

    /// Records one check. `failure` is only built when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.n_checked += 1;
        if !ok {
            self.fail(failure());
        }
    }

    /// Records a failed check that was not counted through [`Report::check`].
    pub fn fail(&mut self, f: Failure) {
        self.n_failed += 1;
        if self.failures.len() < MAX_STORED {
            self.failures.push(f);
        }
    }

    /// Records an error raised while evaluating a check.
    pub fn error(&mut self, what: impl Serialize, err: &crate::Error) {
        self.n_checked += 1;
        self.fail(Failure::new(
            what,
            Value::Null,
            Value::Null,
            err.to_string(),
            Value::Null,
        ));
    }

    pub fn absorb(&mut self, other: Report) {
        self.n_checked += other.n_checked;
        self.n_failed += other.n_failed;
        for f in other.failures {
            if self.failures.len() < MAX_STORED {
                self.failures.push(f);
            }
        }
    }

    /// One-line summary: `PASS theorem [instance] n_checked=..`.
    pub fn summary_line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        format!(
            "{tag} {} [{}] checked={} failed={}",
            self.theorem, self.instance, self.n_checked, self.n_failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_caps() {
        let mut r = Report::new("t", "i");
        r.check(true, || unreachable!());
        for k in 0..100 {
            r.check(false, || Failure::new(k, 0, 0, 1, 2));
        }
        assert_eq!(r.n_checked, 101);
        assert_eq!(r.n_failed, 100);
        assert_eq!(r.failures.len(), MAX_STORED);
        assert!(!r.passed());
        let j = serde_json::to_value(&r).unwrap();
        for key in ["theorem", "instance", "n_checked", "failures"] {
            assert!(j.get(key).is_some());
        }
    }
}
