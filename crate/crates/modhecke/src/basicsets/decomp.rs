use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::BasicSetError;
use crate::schur::{Bipartition, Partition};

/// Row label of a decomposition matrix: a bipartition `[[..],[..]]`, a partition `[..]`,
/// or a character name such as `"E+"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RowLabel {
    Bipartition(Bipartition),
    Partition(Partition),
    Name(String),
}

impl RowLabel {
    /// Dominance `self ⊴ other`; names compare only by equality.
    pub fn dominated_by(&self, other: &RowLabel) -> bool {
        match (self, other) {
            (RowLabel::Bipartition(x), RowLabel::Bipartition(y)) => x.dominance_leq(y),
            (RowLabel::Partition(x), RowLabel::Partition(y)) => x.dominance_leq(y),
            _ => self == other,
        }
    }

    /// Degree of the corresponding irreducible character, when computable.
    pub fn dim(&self) -> Option<BigUint> {
        match self {
            RowLabel::Bipartition(x) => Some(x.dim()),
            RowLabel::Partition(x) => Some(x.dim()),
            RowLabel::Name(_) => None,
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Bipartition(x) => write!(f, "{x}"),
            RowLabel::Partition(x) => write!(f, "{x}"),
            RowLabel::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompRow {
    pub label: RowLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    pub entries: Vec<u64>,
}

/// Decomposition numbers `[E:M]`, one row per ordinary character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompMatrix {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: u32,
    pub a: u64,
    pub b: u64,
    pub xi_order: u64,
    pub char: u64,
    pub rows: Vec<DecompRow>,
}

impl DecompMatrix {
    pub fn from_json(s: &str) -> Result<Self, BasicSetError> {
        let d: DecompMatrix = serde_json::from_str(s).map_err(|e| BasicSetError::InvalidMatrix(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.entries.len())
    }

    pub fn validate(&self) -> Result<(), BasicSetError> {
        let c = self.columns();
        if let Some(k) = self.rows.iter().position(|r| r.entries.len() != c) {
            return Err(BasicSetError::InvalidMatrix(format!(
                "row {k} has {} entries, expected {c}",
                self.rows[k].entries.len()
            )));
        }
        if let Some(j) = (0..c).find(|&j| self.rows.iter().all(|r| r.entries[j] == 0)) {
            return Err(BasicSetError::InvalidMatrix(format!("column {j} is zero")));
        }
        Ok(())
    }

    fn alphas(&self) -> Result<Vec<u64>, BasicSetError> {
        self.rows.iter().enumerate().map(|(k, r)| r.alpha.ok_or(BasicSetError::MissingAlpha(k))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// `rows[j]` is the row `E(M_j)` selected for column `j`; `order` lists columns by increasing `ᾰ`.
    Exists { rows: Vec<usize>, order: Vec<usize> },
    /// Column (0-based) without a unique row of minimal `α` carrying entry 1, and its candidates.
    Fails { column: usize, candidates: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicSetResult {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub breve_alpha: Vec<u64>,
}

impl BasicSetResult {
    pub fn exists(&self) -> bool {
        matches!(self.verdict, Verdict::Exists { .. })
    }

    /// Labels of the extracted basic set, ordered by `ᾰ`.
    pub fn labels(&self, d: &DecompMatrix) -> Vec<RowLabel> {
        match &self.verdict {
            Verdict::Exists { rows, order } => order.iter().map(|&j| d.rows[rows[j]].label.clone()).collect(),
            Verdict::Fails { .. } => Vec::new(),
        }
    }
}

/// Checks the canonical basic set conditions: for each column `M`, exactly one row `E`
/// with `[E:M] != 0` and `α_E = ᾰ_M`, that entry is 1, and `M -> E` is injective.
pub fn verify_decomp(d: &DecompMatrix) -> Result<BasicSetResult, BasicSetError> {
    d.validate()?;
    let alpha = d.alphas()?;
    let cols = d.columns();
    let breve: Vec<u64> = (0..cols)
        .map(|j| d.rows.iter().zip(&alpha).filter(|(r, _)| r.entries[j] != 0).map(|(_, &a)| a).min().unwrap())
        .collect();
    let mut rows = Vec::with_capacity(cols);
    let mut used = BTreeMap::new();
    for j in 0..cols {
        let candidates: Vec<usize> =
            (0..d.rows.len()).filter(|&k| d.rows[k].entries[j] != 0 && alpha[k] == breve[j]).collect();
        let fail = || Verdict::Fails { column: j, candidates: candidates.clone() };
        if candidates.len() != 1 || d.rows[candidates[0]].entries[j] != 1 {
            return Ok(BasicSetResult { verdict: fail(), breve_alpha: breve });
        }
        if used.insert(candidates[0], j).is_some() {
            return Ok(BasicSetResult { verdict: fail(), breve_alpha: breve });
        }
        rows.push(candidates[0]);
    }
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by_key(|&j| (breve[j], rows[j]));
    Ok(BasicSetResult { verdict: Verdict::Exists { rows, order }, breve_alpha: breve })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result")]
pub enum Triangularity {
    Pass,
    /// `[E_row : M_column] != 0` but the row label is not dominated by the column's label.
    Fail {
        row: usize,
        column: usize,
    },
}

/// With column `j` identified with row `col_rows[j]`, checks that every nonzero
/// entry `(λ, μ)` has `λ ⊴ μ` and that the diagonal entries are 1.
pub fn check_dominance_triangularity(d: &DecompMatrix, col_rows: &[usize]) -> Triangularity {
    for (j, &cr) in col_rows.iter().enumerate() {
        if d.rows[cr].entries[j] != 1 {
            return Triangularity::Fail { row: cr, column: j };
        }
        let mu = &d.rows[cr].label;
        for (k, r) in d.rows.iter().enumerate() {
            if r.entries[j] != 0 && !r.label.dominated_by(mu) {
                return Triangularity::Fail { row: k, column: j };
            }
        }
    }
    Triangularity::Pass
}

/// Compares supplied dimensions with the hook length formula; returns the first mismatching row.
pub fn check_dims(d: &DecompMatrix) -> Result<(), usize> {
    for (k, r) in d.rows.iter().enumerate() {
        if let (Some(given), Some(exact)) = (r.dim, r.label.dim()) {
            if BigUint::from(given) != exact {
                return Err(k);
            }
        }
    }
    Ok(())
}

pub const FIXTURE_NAMES: [&str; 4] = ["table3_b0", "table3_b2", "table3_b4", "g2_char2"];

/// Shipped matrices: `B_3` at `ξ = -1`, `a = 1`, `b ∈ {0, 2, 4}`, and `G_2` in characteristic 2.
pub fn builtin_fixture(name: &str) -> Option<DecompMatrix> {
    let src = match name {
        "table3_b0" => include_str!("../../fixtures/decomp/table3_b0.json"),
        "table3_b2" => include_str!("../../fixtures/decomp/table3_b2.json"),
        "table3_b4" => include_str!("../../fixtures/decomp/table3_b4.json"),
        "g2_char2" => include_str!("../../fixtures/decomp/g2_char2.json"),
        _ => return None,
    };
    Some(DecompMatrix::from_json(src).expect("shipped fixture parses"))
}
