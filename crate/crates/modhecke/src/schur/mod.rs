//! Partitions, symbols and Schur elements; the invariants `α_E`, `f_E` for types
//! `A`, `B`, `D` (computed) and `G_2`, `F_4` (tables).

mod partition;
mod tables;
mod typeb;

pub use partition::{default_m, symbol_of, Bipartition, Partition, Symbol};
pub use tables::{f4_invariants, f4_labels, f4_table_at, g2_invariants, g2_label, g2_schur, g2_table_at, G2_LABELS};
pub use typeb::{
    invariants_a, invariants_asymptotic, invariants_azero, invariants_b, schur_element_a, schur_element_b,
    schur_element_b_with_m, typed_invariants, DLabel,
};

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterType;
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("{0:?} is not a partition")]
    InvalidPartition(Vec<u32>),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("symbol size m = {m} is too small for this bipartition")]
    MTooSmall { m: usize },
    #[error("{0}")]
    DomainError(String),
    #[error("parameters a = {a}, b = {b} are not covered by the table")]
    RegimeNotCovered { a: u32, b: u32 },
    #[error("unknown character {0:?}")]
    UnknownCharacter(String),
    #[error("diagnostic: {0}")]
    Diagnostic(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `f_E` and `α_E` for one character at fixed parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantPair {
    pub alpha: u64,
    pub f: u64,
}

/// Reads `(α, f)` off the lowest term `f v^{-2α}` of a Schur element.
pub fn invariants_of(c: &LaurentPoly) -> Result<InvariantPair, SchurError> {
    let ext = c.extremal()?;
    if ext.mindeg % 2 != 0 || ext.mindeg > 0 || !ext.mincoeff.is_positive() {
        return Err(SchurError::Diagnostic(format!("unexpected lowest term {}·v^{}", ext.mincoeff, ext.mindeg)));
    }
    let f = ext.mincoeff.to_u64().ok_or_else(|| SchurError::Diagnostic("f overflows u64".into()))?;
    Ok(InvariantPair { alpha: (-ext.mindeg / 2) as u64, f })
}

/// Invariants of every irreducible character, labelled as strings.
///
/// Parameters: `A_{n-1}`, `D_n`: `L = a · length`; `B_n`: `L(t) = b`, `L(s_i) = a`;
/// `G_2`: `L(s) = a`, `L(t) = b`; `F_4`: `L(s_1) = L(s_2) = a`, `L(s_3) = L(s_4) = b`.
pub fn invariant_table(ct: CoxeterType, a: u32, b: u32) -> Result<Vec<(String, InvariantPair)>, SchurError> {
    match ct {
        CoxeterType::A(n) => {
            Partition::all(n as u32 + 1).into_iter().map(|nu| Ok((nu.to_string(), invariants_a(&nu, a)?))).collect()
        }
        CoxeterType::B(n) => {
            Bipartition::all(n as u32).into_iter().map(|bp| Ok((bp.to_string(), invariants_b(&bp, a, b)?))).collect()
        }
        CoxeterType::D(n) => {
            DLabel::all(n as u32).into_iter().map(|l| Ok((l.to_string(), typed_invariants(&l, a)?))).collect()
        }
        CoxeterType::G2 => g2_table_at(a, b),
        CoxeterType::F4 => f4_table_at(a, b),
    }
}

/// `p` is `L`-good when it divides no `f_E`.
pub fn l_good(p: u64, ct: CoxeterType, a: u32, b: u32) -> Result<bool, SchurError> {
    Ok(invariant_table(ct, a, b)?.iter().all(|(_, inv)| inv.f % p != 0))
}
