use std::fmt;

/// Outcome of one axiom or structural property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample found, when the check failed.
    pub witness: Option<String>,
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub(crate) fn record(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "PASS  {}", c.name)?,
                Some(w) => writeln!(f, "FAIL  {}  witness: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
