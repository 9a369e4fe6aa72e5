//! Pass/fail reports for the verification suites.

use std::fmt;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn num_failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One line per check plus a summary line.
    pub fn print_full(&self) {
        for c in &self.checks {
            println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        }
        println!("{self}");
    }

    /// Summary plus failing lines only.
    pub fn print_summary(&self) {
        for c in self.failures() {
            println!("FAIL {}", c.name);
        }
        println!("{self}");
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({}/{} checks)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len() - self.num_failed(),
            self.checks.len()
        )
    }
}
