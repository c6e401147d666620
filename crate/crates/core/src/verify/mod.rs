//! Brute-force oracles and lemma checkers.
//!
//! The oracle side of every identity check enumerates dual codewords and
//! never touches a transform kernel; the transform side never enumerates a
//! dual. Character sums are evaluated exactly as [`CyclotomicSum`]s.
//!
//! [`CyclotomicSum`]: crate::cyclotomic::CyclotomicSum

mod identities;
mod lemmas;
pub mod oracles;
mod random;
mod suites;

use serde::Serialize;
use serde_json::{json, Value};

pub use identities::{check_identity, check_instance, IdentityKind, Instance};
pub use lemmas::{
    check_character_lemmas, check_duality, check_floor_decomposition, check_jkl_sums,
    check_joint_properties, check_kernel_oracles, check_kernel_vanishing, check_lee_kernel,
};
pub use random::{random_instances, MAX_AMBIENT};
pub use suites::{identity_sweep, lemma_suite, LEMMA_PAIRS, SUITE_RINGS};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assertion {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

/// Outcome of one suite on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instance: String,
    pub assertions: Vec<Assertion>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, instance: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            instance: instance.into(),
            assertions: Vec::new(),
        }
    }

    /// Records a check; the counterexample is built only on failure.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, counterexample: impl FnOnce() -> Value) {
        self.assertions.push(Assertion {
            check: name.into(),
            passed,
            counterexample: (!passed).then(counterexample),
        });
    }

    /// Records an equality, with both sides as the counterexample.
    pub fn check_eq<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, expected: &T, actual: &T) {
        self.check(name, expected == actual, || {
            json!({"expected": expected.to_string(), "actual": actual.to_string()})
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    pub fn len(&self) -> usize {
        self.assertions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assertions.is_empty()
    }

    /// One JSON object per assertion, newline separated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let mut line = json!({
                "suite": self.suite,
                "instance": self.instance,
                "check": a.check,
                "passed": a.passed,
            });
            if let Some(c) = &a.counterexample {
                line["counterexample"] = c.clone();
            }
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}
