//! Check outcomes with witnesses.

use serde::{Deserialize, Serialize};

use crate::linalg::LinearMap;

/// Where an identity failed: tensor multi-indices of the first differing
/// entry (row factors first, then column factors) and both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// The checks run against one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.failures().map(|c| c.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.checks.push(Check { id: id.into(), passed: true, detail: None, witness: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            passed: false,
            detail: Some(detail.into()),
            witness: None,
        });
    }

    pub fn condition(&mut self, id: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> bool {
        if ok {
            self.pass(id);
        } else {
            self.fail(id, detail());
        }
        ok
    }

    /// Records `actual == expected` as a matrix identity.
    pub fn equal(&mut self, id: impl Into<String>, actual: &LinearMap, expected: &LinearMap) -> bool {
        self.equal_indexed(id, actual, expected, &[actual.rows()], &[actual.cols()])
    }

    /// As [`CheckReport::equal`], reporting witnesses as tensor multi-indices
    /// over the given factor dimensions.
    pub fn equal_indexed(
        &mut self,
        id: impl Into<String>,
        actual: &LinearMap,
        expected: &LinearMap,
        row_dims: &[usize],
        col_dims: &[usize],
    ) -> bool {
        let id = id.into();
        if actual.shape() != expected.shape() {
            self.fail(
                id,
                format!(
                    "shapes differ: {}x{} vs expected {}x{}",
                    actual.rows(),
                    actual.cols(),
                    expected.rows(),
                    expected.cols()
                ),
            );
            return false;
        }
        match actual.first_difference(expected) {
            None => {
                self.pass(id);
                true
            }
            Some((r, c, a, e)) => {
                let mut indices = unravel(r, row_dims);
                indices.extend(unravel(c, col_dims));
                self.checks.push(Check {
                    id,
                    passed: false,
                    detail: None,
                    witness: Some(Witness { indices, expected: e.to_string(), actual: a.to_string() }),
                });
                false
            }
        }
    }

    /// Appends another report's checks, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            c.id = format!("{prefix}/{}", c.id);
            self.checks.push(c);
        }
    }
}

/// The outcome of one suite run over one input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub input: String,
    pub sections: Vec<CheckReport>,
    /// Excluded from equality comparisons in determinism tests.
    pub wall_time_seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(CheckReport::passed)
    }

    /// `(passed, total)` over all checks.
    pub fn counts(&self) -> (usize, usize) {
        let all = self.sections.iter().flat_map(|s| &s.checks);
        let (mut ok, mut total) = (0, 0);
        for c in all {
            total += 1;
            ok += usize::from(c.passed);
        }
        (ok, total)
    }

    /// The report with timing removed, for comparing runs.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport { wall_time_seconds: 0.0, ..self.clone() }
    }
}

/// Splits a flat tensor index into factor indices (left factor most
/// significant). Falls back to the flat index if the dims do not cover it.
pub fn unravel(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let total: usize = dims.iter().product();
    if index >= total || dims.is_empty() {
        return vec![index];
    }
    let mut out = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = index % d;
        index /= d;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn unravel_lexicographic() {
        assert_eq!(unravel(5, &[2, 3]), vec![1, 2]);
        assert_eq!(unravel(7, &[2, 2, 2]), vec![1, 1, 1]);
        assert_eq!(unravel(9, &[2, 2]), vec![9]);
    }

    #[test]
    fn witness_records_first_difference() {
        let q = Field::Rational;
        let a = LinearMap::from_ints(q, &[&[1, 0, 0, 0]]);
        let b = LinearMap::from_ints(q, &[&[1, 0, 0, 3]]);
        let mut r = CheckReport::new("t");
        assert!(!r.equal_indexed("id", &a, &b, &[1], &[2, 2]));
        let w = r.checks[0].witness.as_ref().unwrap();
        assert_eq!(w.indices, vec![0, 1, 1]);
        assert_eq!((w.actual.as_str(), w.expected.as_str()), ("0", "3"));
    }
}
