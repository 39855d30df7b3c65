use std::sync::OnceLock;

use serde::Deserialize;

use super::{InvariantPair, SchurError};
use crate::laurent::{poly, LaurentPoly};

#[derive(Debug, Deserialize)]
struct Linear {
    a: i64,
    b: i64,
}

#[derive(Debug, Deserialize)]
struct Cell {
    f: u64,
    alpha: Linear,
}

#[derive(Debug, Deserialize)]
struct Row {
    label: String,
    cells: Vec<Cell>,
}

#[derive(Debug, Deserialize)]
struct Table {
    regimes: Vec<String>,
    rows: Vec<Row>,
}

fn g2_table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| serde_json::from_str(include_str!("../../fixtures/g2_invariants.json")).expect("G2 fixture"))
}

fn f4_table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| serde_json::from_str(include_str!("../../fixtures/f4_invariants.json")).expect("F4 fixture"))
}

/// Column of a table matching `(a, b)`, by the regime predicates used as column headers.
fn regime(table: &Table, a: u32, b: u32) -> Result<usize, SchurError> {
    let (a, b) = (u64::from(a), u64::from(b));
    let holds = |r: &str| match r {
        "b>a>0" => b > a && a > 0,
        "b=a>0" => b == a && a > 0,
        "b>a=0" => b > a && a == 0,
        "b>2a>0" => b > 2 * a && a > 0,
        "b=2a>0" => b == 2 * a && a > 0,
        "2a>b>a>0" => 2 * a > b && b > a && a > 0,
        _ => false,
    };
    table.regimes.iter().position(|r| holds(r)).ok_or(SchurError::RegimeNotCovered { a: a as u32, b: b as u32 })
}

fn lookup(table: &Table, label: &str, a: u32, b: u32) -> Result<InvariantPair, SchurError> {
    let col = regime(table, a, b)?;
    let row =
        table.rows.iter().find(|r| r.label == label).ok_or_else(|| SchurError::UnknownCharacter(label.to_string()))?;
    let cell = &row.cells[col];
    let alpha = cell.alpha.a * i64::from(a) + cell.alpha.b * i64::from(b);
    Ok(InvariantPair { alpha: alpha as u64, f: cell.f })
}

fn table_all(table: &Table, a: u32, b: u32) -> Result<Vec<(String, InvariantPair)>, SchurError> {
    table.rows.iter().map(|r| Ok((r.label.clone(), lookup(table, &r.label, a, b)?))).collect()
}

/// Labels of the irreducible characters of `W(G_2)`.
pub const G2_LABELS: [&str; 6] = ["1", "eps", "eps1", "eps2", "E+", "E-"];

/// Accepts ASCII labels and the symbols `ε`, `ε₁`, `E₊`, ...
pub fn g2_label(s: &str) -> Result<&'static str, SchurError> {
    let t: String = s
        .trim()
        .chars()
        .map(|c| match c {
            'ε' => "eps".to_string(),
            '₁' => "1".to_string(),
            '₂' => "2".to_string(),
            '₊' => "+".to_string(),
            '₋' | '−' => "-".to_string(),
            '𝟏' => "1".to_string(),
            c => c.to_string(),
        })
        .collect();
    G2_LABELS
        .iter()
        .find(|l| l.eq_ignore_ascii_case(&t))
        .copied()
        .ok_or_else(|| SchurError::UnknownCharacter(s.to_string()))
}

/// Closed-form Schur elements for `G_2` with `L(s) = a`, `L(t) = b`.
///
/// The two-dimensional characters are labelled so that `E+` has `f = 6` at `a = b`.
pub fn g2_schur(label: &str, a: u32, b: u32) -> Result<LaurentPoly, SchurError> {
    let (a, b) = (i64::from(a), i64::from(b));
    let label = g2_label(label)?;
    let c1 = &(&poly(&[(2 * a, 1), (0, 1)]) * &poly(&[(2 * b, 1), (0, 1)]))
        * &poly(&[(4 * a + 4 * b, 1), (2 * a + 2 * b, 1), (0, 1)]);
    let ce1 = (&(&poly(&[(2 * a, 1), (0, 1)]) * &poly(&[(2 * b, 1), (0, 1)]))
        * &poly(&[(4 * a, 1), (2 * a + 2 * b, 1), (4 * b, 1)]))
        .shift(-6 * b);
    let two_dim = |sign: i64| {
        (&poly(&[(2 * a + 2 * b, 1), (a + b, sign), (0, 1)]) * &poly(&[(2 * a, 1), (a + b, -sign), (2 * b, 1)]))
            .scale(&2.into())
            .shift(-2 * a - 2 * b)
    };
    Ok(match label {
        "1" => c1,
        "eps" => c1.shift(-6 * a - 6 * b),
        "eps1" => ce1,
        "eps2" => ce1.shift(6 * b - 6 * a),
        "E+" => two_dim(-1),
        "E-" => two_dim(1),
        _ => unreachable!(),
    })
}

/// Invariants of a `G_2` character from the embedded table.
pub fn g2_invariants(label: &str, a: u32, b: u32) -> Result<InvariantPair, SchurError> {
    lookup(g2_table(), g2_label(label)?, a, b)
}

pub fn g2_table_at(a: u32, b: u32) -> Result<Vec<(String, InvariantPair)>, SchurError> {
    table_all(g2_table(), a, b)
}

/// Invariants of an `F_4` character (labels such as `12_1`) from the embedded table.
pub fn f4_invariants(label: &str, a: u32, b: u32) -> Result<InvariantPair, SchurError> {
    lookup(f4_table(), label.trim(), a, b)
}

pub fn f4_table_at(a: u32, b: u32) -> Result<Vec<(String, InvariantPair)>, SchurError> {
    table_all(f4_table(), a, b)
}

pub fn f4_labels() -> Vec<&'static str> {
    f4_table().rows.iter().map(|r| r.label.as_str()).collect()
}
