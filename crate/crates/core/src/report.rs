//! Structured validation results.
//!
//! Every validator returns a [`ValidationReport`]: one [`CheckRecord`] per
//! identity, counting the evaluated instances and keeping a witness (index
//! tuple plus both evaluated sides) for each failing instance.

use serde::{Deserialize, Serialize};

use crate::linalg::Tensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub equation: String,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

/// Witnesses kept per record; the failure count is always exact.
const MAX_WITNESSES: usize = 64;

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one instance comparing two evaluated sides.
    pub fn compare(&mut self, index: impl FnOnce() -> Vec<String>, lhs: &Tensor, rhs: &Tensor) -> bool {
        let ok = lhs == rhs;
        self.record(ok, || Witness {
            index: index(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
        ok
    }

    /// Records one instance of a condition that has no natural two sides.
    pub fn require(
        &mut self,
        ok: bool,
        index: impl FnOnce() -> Vec<String>,
        what: impl FnOnce() -> (String, String),
    ) -> bool {
        self.record(ok, || {
            let (lhs, rhs) = what();
            Witness {
                index: index(),
                lhs,
                rhs,
            }
        });
        ok
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub records: Vec<CheckRecord>,
}

impl ValidationReport {
    pub fn new() -> ValidationReport {
        ValidationReport::default()
    }

    /// The record with the given id, created on first use.
    pub fn check(&mut self, id: &str, equation: &str) -> &mut CheckRecord {
        if let Some(pos) = self.records.iter().position(|r| r.id == id) {
            return &mut self.records[pos];
        }
        self.records.push(CheckRecord {
            id: id.to_string(),
            equation: equation.to_string(),
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        });
        self.records.last_mut().unwrap()
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.records
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.id.as_str())
            .collect()
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Whether the named record exists and failed.
    pub fn fails(&self, id: &str) -> bool {
        self.record(id).is_some_and(|r| !r.passed())
    }

    /// Appends the records of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut r in other.records {
            if !prefix.is_empty() {
                r.id = format!("{prefix}.{}", r.id);
            }
            self.records.push(r);
        }
    }

    pub fn summary(&self) -> String {
        let failed = self.failed_ids();
        if failed.is_empty() {
            format!("{} checks passed", self.records.len())
        } else {
            format!("failed: {}", failed.join(", "))
        }
    }
}

/// Labels a tuple of indices for witness output.
#[macro_export]
macro_rules! idx {
    ($($name:literal = $val:expr),* $(,)?) => {
        || vec![$(format!("{}={}", $name, $val)),*]
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn records_count_and_witness() {
        let q = Field::Rational;
        let mut r = ValidationReport::new();
        let a = Tensor::basis(q, &[2], &[0]);
        let b = Tensor::basis(q, &[2], &[1]);
        r.check("x", "a = a").compare(idx!("i" = 0), &a, &a);
        r.check("x", "a = a").compare(idx!("i" = 1), &a, &b);
        let rec = r.record("x").unwrap();
        assert_eq!((rec.instances, rec.failures), (2, 1));
        assert_eq!(rec.witnesses[0].index, vec!["i=1"]);
        assert!(!r.passed());
        assert!(r.fails("x"));
    }
}
