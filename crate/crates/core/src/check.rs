//! Check results: pass/fail, numeric artifacts, and replayable witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::FiniteField;
use crate::matrix::Matrix;
use crate::module::ModuleRep;

/// Witnesses kept per check; the total count is recorded separately.
const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Artifact {
    Bool(bool),
    Int(i64),
    Text(String),
    Vector(Vec<i64>),
    Matrix(Vec<Vec<i64>>),
}

impl From<bool> for Artifact {
    fn from(b: bool) -> Self {
        Artifact::Bool(b)
    }
}

impl From<i64> for Artifact {
    fn from(n: i64) -> Self {
        Artifact::Int(n)
    }
}

impl From<usize> for Artifact {
    fn from(n: usize) -> Self {
        Artifact::Int(n as i64)
    }
}

impl From<&str> for Artifact {
    fn from(s: &str) -> Self {
        Artifact::Text(s.to_string())
    }
}

impl From<String> for Artifact {
    fn from(s: String) -> Self {
        Artifact::Text(s)
    }
}

impl From<Vec<i64>> for Artifact {
    fn from(v: Vec<i64>) -> Self {
        Artifact::Vector(v)
    }
}

impl From<&Matrix<i64>> for Artifact {
    fn from(m: &Matrix<i64>) -> Self {
        Artifact::Matrix(int_rows(m))
    }
}

pub fn int_rows(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Canonical integer representatives of a matrix over a finite field.
pub fn field_rows<F: FiniteField>(m: &Matrix<F>) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_u64() as i64).collect()).collect()
}

/// Enough data to rebuild a failing input: its dimensions and matrices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub dims: Vec<usize>,
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness { description: description.into(), seed: None, dims: Vec::new(), matrices: BTreeMap::new() }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn dims(mut self, dims: Vec<usize>) -> Self {
        self.dims = dims;
        self
    }

    pub fn matrix<F: FiniteField>(mut self, name: impl Into<String>, m: &Matrix<F>) -> Self {
        self.matrices.insert(name.into(), field_rows(m));
        self
    }

    pub fn int_matrix(mut self, name: impl Into<String>, m: &Matrix<i64>) -> Self {
        self.matrices.insert(name.into(), int_rows(m));
        self
    }

    /// Every action matrix of `m`, as `"{prefix}[i]"`.
    pub fn module<F: FiniteField>(mut self, prefix: &str, m: &ModuleRep<F>) -> Self {
        self.dims.push(m.dim());
        for (i, a) in m.actions().iter().enumerate() {
            self.matrices.insert(format!("{prefix}[{i}]"), field_rows(a));
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub artifacts: BTreeMap<String, Artifact>,
    pub counterexamples: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            status: Status::Pass,
            artifacts: BTreeMap::new(),
            counterexamples: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Artifact>) {
        self.artifacts.insert(key.to_string(), value.into());
    }

    /// Record a failure; only the first few witnesses are kept.
    pub fn fail(&mut self, w: Witness) {
        self.status = Status::Fail;
        self.counterexamples += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Fail without a witness when `ok` is false.
    pub fn require(&mut self, ok: bool, what: &str) {
        if !ok {
            self.fail(Witness::new(what));
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn artifact(&self, key: &str) -> Option<&Artifact> {
        self.artifacts.get(key)
    }

    /// Fold `other` into this record, prefixing its artifact keys.
    pub fn absorb(&mut self, other: CheckRecord, prefix: &str) {
        if !other.passed() {
            self.status = Status::Fail;
        }
        for (k, v) in other.artifacts {
            self.artifacts.insert(format!("{prefix}{k}"), v);
        }
        self.counterexamples += other.counterexamples;
        self.witnesses.extend(other.witnesses);
        self.witnesses.truncate(MAX_WITNESSES);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorb_merges_failures_and_prefixes_keys() {
        let mut a = CheckRecord::new("a");
        a.set("rank", 1usize);
        let mut b = CheckRecord::new("b");
        b.set("rank", 2usize);
        for i in 0..7 {
            b.fail(Witness::new(format!("w{i}")));
        }
        a.absorb(b, "b_");
        assert_eq!(a.status, Status::Fail);
        assert_eq!(a.counterexamples, 7);
        assert_eq!(a.witnesses.len(), MAX_WITNESSES);
        assert_eq!(a.artifact("b_rank"), Some(&Artifact::Int(2)));
        assert_eq!(a.artifact("rank"), Some(&Artifact::Int(1)));
    }
}
