//! Checking the basic-set axioms on a multiplicity matrix.
//!
//! Given `d[F][E] = [S(F) : D(E)]` with columns `E` drawn from the rows and
//! an ordering function `f`, each column must have `d[E][E] = 1` and every
//! other nonzero entry must sit in a row with `f(F) > f(E)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::crystal::uglov_multipartitions;
use crate::error::{Error, Result};
use crate::kappa::a_function;
use crate::multipartition::Multipartition;
use crate::params::ChargeParams;
use crate::rational::{self, Rational};
use crate::report::SCHEMA;

/// Completeness of the simple modules cannot be read off the matrix.
pub const EXTERNAL_ASSUMPTION: &str =
    "the simple modules labelled by the columns form a complete set of pairwise non-isomorphic irreducibles";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompMatrix {
    rows: Vec<Multipartition>,
    cols: Vec<Multipartition>,
    entries: Vec<Vec<u64>>,
}

impl DecompMatrix {
    pub fn new(rows: Vec<Multipartition>, cols: Vec<Multipartition>, entries: Vec<Vec<u64>>) -> Result<Self> {
        if rows.iter().collect::<BTreeSet<_>>().len() != rows.len() {
            return Err(Error::Matrix("duplicate row label".into()));
        }
        if cols.iter().collect::<BTreeSet<_>>().len() != cols.len() {
            return Err(Error::Matrix("duplicate column label".into()));
        }
        if let Some(c) = cols.iter().find(|c| !rows.contains(c)) {
            return Err(Error::Matrix(format!("column {c} is not a row label")));
        }
        if entries.len() != rows.len() {
            return Err(Error::Matrix(format!("{} rows of entries for {} row labels", entries.len(), rows.len())));
        }
        if let Some((i, r)) = entries.iter().enumerate().find(|(_, r)| r.len() != cols.len()) {
            return Err(Error::Matrix(format!("row {i} has {} entries, expected {}", r.len(), cols.len())));
        }
        Ok(DecompMatrix { rows, cols, entries })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Repr {
            rows: Vec<Multipartition>,
            cols: Vec<Multipartition>,
            entries: Vec<Vec<u64>>,
        }
        let r: Repr = serde_json::from_str(text).map_err(|e| Error::Matrix(e.to_string()))?;
        Self::new(r.rows, r.cols, r.entries)
    }

    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row][col]
    }

    /// Drops rows that are zero and not also column labels.
    pub fn without_zero_rows(&self) -> Self {
        let keep: Vec<usize> = (0..self.rows.len())
            .filter(|&i| self.cols.contains(&self.rows[i]) || self.entries[i].iter().any(|&x| x != 0))
            .collect();
        DecompMatrix {
            rows: keep.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: self.cols.clone(),
            entries: keep.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }
}

/// Rational-valued ordering function on labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderingFunction {
    values: BTreeMap<Multipartition, Rational>,
}

impl OrderingFunction {
    pub fn new(values: BTreeMap<Multipartition, Rational>) -> Self {
        OrderingFunction { values }
    }

    /// The a-function on every row label.
    pub fn a_function(matrix: &DecompMatrix, params: &ChargeParams) -> Result<Self> {
        let values = matrix.rows().iter().map(|m| Ok((m.clone(), a_function(m, params)?))).collect::<Result<_>>()?;
        Ok(OrderingFunction { values })
    }

    /// Parses `[{"label": [[...]], "value": "p/q"}, ...]`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Entry {
            label: Multipartition,
            #[serde(with = "rational::as_string")]
            value: Rational,
        }
        let entries: Vec<Entry> = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let mut values = BTreeMap::new();
        for e in entries {
            if values.insert(e.label.clone(), e.value).is_some() {
                return Err(Error::Input(format!("label {} given twice", e.label)));
            }
        }
        Ok(OrderingFunction { values })
    }

    pub fn get(&self, label: &Multipartition) -> Option<Rational> {
        self.values.get(label).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `f(E) < f(F)`.
    #[default]
    Less,
    /// `f(F) - f(E)` is a positive integer.
    IntegerGap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: Multipartition,
    pub col: Multipartition,
    pub entry: u64,
    #[serde(with = "rational::as_string")]
    pub f_row: Rational,
    #[serde(with = "rational::as_string")]
    pub f_col: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicSetReport {
    pub schema: &'static str,
    pub check: &'static str,
    pub comparison: Comparison,
    pub passed: bool,
    /// Columns `E` with `d[E][E] != 1`, with the entry found.
    pub diagonal_violations: Vec<(Multipartition, u64)>,
    pub order_violations: Vec<Violation>,
    pub assumptions: Vec<&'static str>,
}

pub fn verify_basic_set(d: &DecompMatrix, f: &OrderingFunction, comparison: Comparison) -> Result<BasicSetReport> {
    if let Some(m) = d.rows().iter().find(|m| f.get(m).is_none()) {
        return Err(Error::Input(format!("ordering function has no value for {m}")));
    }
    let mut diagonal_violations = Vec::new();
    let mut order_violations = Vec::new();
    for (j, col) in d.cols().iter().enumerate() {
        let f_col = f.get(col).expect("checked above");
        for (i, row) in d.rows().iter().enumerate() {
            let entry = d.entry(i, j);
            if row == col {
                if entry != 1 {
                    diagonal_violations.push((col.clone(), entry));
                }
                continue;
            }
            if entry == 0 {
                continue;
            }
            let f_row = f.get(row).expect("checked above");
            let gap = f_row - f_col;
            let ok = match comparison {
                Comparison::Less => gap > Rational::zero(),
                Comparison::IntegerGap => gap.is_integer() && gap > Rational::zero(),
            };
            if !ok {
                order_violations.push(Violation { row: row.clone(), col: col.clone(), entry, f_row, f_col });
            }
        }
    }
    Ok(BasicSetReport {
        schema: SCHEMA,
        check: "basic-set",
        comparison,
        passed: diagonal_violations.is_empty() && order_violations.is_empty(),
        diagonal_violations,
        order_violations,
        assumptions: vec![EXTERNAL_ASSUMPTION],
    })
}

/// The Uglov multipartitions, which label the predicted basic set.
pub fn predicted_basic_set(n: usize, params: &ChargeParams) -> Result<Vec<Multipartition>> {
    Ok(uglov_multipartitions(n, params)?.elements)
}
