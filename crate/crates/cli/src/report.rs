//! Verification reports: one row per check, printed as a table and
//! optionally written as versioned JSON.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub claim: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            schema: 1,
            suite: suite.into(),
            checks: Vec::new(),
            all_pass: true,
        }
    }

    /// Runs one check: `f` returns (expected, computed) as display strings;
    /// the row passes iff they are equal.
    pub fn check(
        &mut self,
        claim: &str,
        params: &str,
        f: impl FnOnce() -> anyhow::Result<(String, String)>,
    ) {
        let start = Instant::now();
        let (expected, computed, pass) = match f() {
            Ok((expected, computed)) => {
                let pass = expected == computed;
                (expected, computed, pass)
            }
            Err(err) => ("ok".to_string(), format!("error: {err}"), false),
        };
        self.all_pass &= pass;
        self.checks.push(Check {
            claim: claim.to_string(),
            params: params.to_string(),
            expected,
            computed,
            pass,
            millis: start.elapsed().as_millis(),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.all_pass &= other.all_pass;
        self.checks.extend(other.checks);
    }

    pub fn print_table(&self) {
        println!("suite: {}", self.suite);
        let claim_width = self
            .checks
            .iter()
            .map(|c| c.claim.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let params_width = self
            .checks
            .iter()
            .map(|c| c.params.len())
            .max()
            .unwrap_or(6)
            .max(6);
        println!(
            "{:claim_width$}  {:params_width$}  {:>10}  {:>10}  {:>4}  {:>7}",
            "claim", "params", "expected", "computed", "pass", "ms"
        );
        for c in &self.checks {
            println!(
                "{:claim_width$}  {:params_width$}  {:>10}  {:>10}  {:>4}  {:>7}",
                c.claim,
                c.params,
                c.expected,
                c.computed,
                if c.pass { "ok" } else { "FAIL" },
                c.millis
            );
        }
        println!(
            "{} of {} checks passed",
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        );
    }
}
