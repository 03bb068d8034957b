use serde_json::{json, Value};

use crate::exact::Rational;
use crate::polytope::Family;

/// One named sub-check and, on failure, the witness that broke it.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: Value) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }

    pub fn equal<T: PartialEq + ToString>(name: &str, got: &T, expected: &T) -> Self {
        Self::new(
            name,
            got == expected,
            json!({ "got": got.to_string(), "expected": expected.to_string() }),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub theorem: String,
    pub family: Option<Family>,
    pub n: usize,
    pub parameters: Option<(Rational, Rational)>,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(theorem: &str, family: Option<Family>, n: usize) -> Self {
        Self {
            theorem: theorem.to_string(),
            family,
            n,
            parameters: None,
            seed: None,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        let mut v = json!({
            "theorem": self.theorem,
            "n": self.n,
            "passed": self.passed(),
            "checks": checks,
        });
        if let Some(f) = self.family {
            v["family"] = json!(f.name());
        }
        if let Some((q, t)) = &self.parameters {
            v["q"] = json!(q.to_string());
            v["t"] = json!(t.to_string());
        }
        if let Some(seed) = self.seed {
            v["seed"] = json!(seed);
        }
        v
    }
}
