use std::fmt;

/// One named check of a [`ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First violating location, when the check failed.
    pub location: Option<String>,
}

/// Outcome of validating hand-entered data against the axioms it must satisfy.
///
/// The overall verdict is always the conjunction of the individual checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: true,
            location: None,
        });
    }

    pub fn fail(&mut self, name: &str, location: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: false,
            location: Some(location.into()),
        });
    }

    /// Records `name` as passed when `violation` is `None`.
    pub fn record(&mut self, name: &str, violation: Option<String>) {
        match violation {
            None => self.pass(name),
            Some(loc) => self.fail(name, loc),
        }
    }

    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match (&check.passed, &check.location) {
                (true, _) => writeln!(f, "  [pass] {}", check.name)?,
                (false, Some(loc)) => writeln!(f, "  [FAIL] {} at {}", check.name, loc)?,
                (false, None) => writeln!(f, "  [FAIL] {}", check.name)?,
            }
        }
        write!(f, "overall: {}", if self.overall() { "pass" } else { "FAIL" })
    }
}
