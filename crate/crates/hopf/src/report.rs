use exact_kernel::{format_scalar, LinearMap};

/// One named check: pass/fail plus a witness locating the first violation.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// An ordered list of named checks, as produced by every validator.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witness,
        });
    }

    /// Records an exact matrix identity check, with the first differing entry
    /// as the witness on failure.
    pub fn push_eq(&mut self, name: impl Into<String>, lhs: &LinearMap, rhs: &LinearMap) {
        match lhs.first_difference(rhs) {
            None => self.push(name, true, None),
            Some((r, c)) => {
                let witness = if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
                    format!(
                        "shape {}x{} vs {}x{}",
                        lhs.rows(),
                        lhs.cols(),
                        rhs.rows(),
                        rhs.cols()
                    )
                } else {
                    format!(
                        "entry ({r},{c}): {} vs {}",
                        format_scalar(&lhs.field(), lhs.at(r, c)),
                        format_scalar(&rhs.field(), rhs.at(r, c))
                    )
                };
                self.push(name, false, Some(witness));
            }
        }
    }

    pub fn merge(&mut self, prefix: &str, other: Report) {
        for check in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", check.name),
                pass: check.pass,
                witness: check.witness,
            });
        }
    }

    pub fn summary(&self) -> String {
        let failed = self.failures();
        if failed.is_empty() {
            format!("{} checks pass", self.checks.len())
        } else {
            let names: Vec<&str> = failed.iter().map(|c| c.name.as_str()).collect();
            format!(
                "{} of {} checks fail: {}",
                failed.len(),
                self.checks.len(),
                names.join(", ")
            )
        }
    }
}
