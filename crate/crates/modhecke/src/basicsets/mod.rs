//! Specializations `v^2 -> ξ`, dispatch of canonical basic sets for types
//! `A`, `B`, `D`, and verification of basic-set conditions on decomposition matrices.

mod decomp;

pub use decomp::{
    builtin_fixture, check_dims, check_dominance_triangularity, verify_decomp, BasicSetResult, DecompMatrix, DecompRow,
    RowLabel, Triangularity, Verdict, FIXTURE_NAMES,
};

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::fock::{uryu_set, FockError, FockParams, Multipartition, NodeOrder};
use crate::schur::{Bipartition, DLabel, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasicSetError {
    #[error("invalid specialization: {0}")]
    InvalidParams(String),
    #[error("characteristic 2 is not supported")]
    CharTwoUnsupported,
    #[error("no canonical basic set description covers a = {a}, b = {b} (f_n = 0, a != b, b != 0, not asymptotic)")]
    CaseNotCovered { a: u64, b: u64 },
    #[error("ξ must have even order, got {0}")]
    OddOrderUnsupported(u64),
    #[error("row {0} has no alpha value")]
    MissingAlpha(usize),
    #[error("malformed decomposition matrix: {0}")]
    InvalidMatrix(String),
    #[error(transparent)]
    Fock(#[from] FockError),
}

/// A specialization: characteristic of `k`, order `m` of `ξ = θ(v^2)`, and the weights `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecParams {
    pub char: u64,
    pub xi_order: u64,
    pub a: u64,
    pub b: u64,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl SpecParams {
    pub fn new(char: u64, xi_order: u64, a: u64, b: u64) -> Result<Self, BasicSetError> {
        if xi_order == 0 {
            return Err(BasicSetError::InvalidParams("the order of ξ must be at least 1".into()));
        }
        if char != 0 && !is_prime(char) {
            return Err(BasicSetError::InvalidParams(format!("characteristic {char} is not 0 or a prime")));
        }
        if char != 0 && xi_order.is_multiple_of(char) {
            return Err(BasicSetError::InvalidParams(format!(
                "no element of order {xi_order} exists in characteristic {char}"
            )));
        }
        Ok(Self { char, xi_order, a, b })
    }

    /// `ξ^k = 1`
    pub fn is_one(&self, k: i64) -> bool {
        k.rem_euclid(self.xi_order as i64) == 0
    }

    /// `ξ^k = -1`; needs even order (characteristic is not 2).
    pub fn is_minus_one(&self, k: i64) -> bool {
        let m = self.xi_order as i64;
        m % 2 == 0 && k.rem_euclid(m) == m / 2
    }

    /// Multiplicative order of `ξ^k`.
    pub fn order_of_power(&self, k: u64) -> u64 {
        self.xi_order / self.xi_order.gcd(&k)
    }

    fn require_odd_char(&self) -> Result<(), BasicSetError> {
        if self.char == 2 {
            Err(BasicSetError::CharTwoUnsupported)
        } else {
            Ok(())
        }
    }
}

/// `e = min{i >= 2 | 1 + ξ^a + ... + ξ^{(i-1)a} = 0}`; `None` is `e = ∞`.
pub fn e_value(p: &SpecParams) -> Option<u64> {
    if !p.is_one(p.a as i64) {
        Some(p.order_of_power(p.a))
    } else if p.char > 0 {
        Some(p.char)
    } else {
        None
    }
}

/// Whether `f_n(a,b) = prod_{|i| <= n-1} (ξ^b + ξ^{ai})` vanishes. When it does, returns
/// `d` with `ξ^{b+ad} = -1` and `|d| <= n-1`, smallest `|d|` first, positive before negative.
pub fn fn_zero(p: &SpecParams, n: u32) -> Result<Option<i64>, BasicSetError> {
    p.require_odd_char()?;
    let (a, b) = (p.a as i64, p.b as i64);
    let span = i64::from(n.max(1)) - 1;
    let found = (0..=span).flat_map(|k| [k, -k]).find(|&d| p.is_minus_one(b + a * d));
    Ok(found)
}

/// `e`-regular partitions of `n`.
pub fn basic_set_sym(p: &SpecParams, n: u32) -> Vec<Partition> {
    let e = e_value(p).map(|e| e as u32);
    Partition::all(n).into_iter().filter(|x| x.is_e_regular(e)).collect()
}

/// Which description produced a type `B` basic set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DispatchCase {
    #[serde(rename = "asymptotic/DJM")]
    Asymptotic,
    #[serde(rename = "DJ-Morita")]
    DjMorita,
    #[serde(rename = "DJ-extension")]
    DjExtension,
    #[serde(rename = "Jacon-equal")]
    JaconEqual,
    #[serde(rename = "Jacon-b0")]
    JaconB0,
}

impl fmt::Display for DispatchCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DispatchCase::Asymptotic => "asymptotic/DJM",
            DispatchCase::DjMorita => "DJ-Morita",
            DispatchCase::DjExtension => "DJ-extension",
            DispatchCase::JaconEqual => "Jacon-equal",
            DispatchCase::JaconB0 => "Jacon-b0",
        })
    }
}

/// `set` is sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicSetB {
    pub case: DispatchCase,
    pub set: Vec<Bipartition>,
}

fn to_bipartition(m: Multipartition) -> Bipartition {
    let c = m.components();
    Bipartition::new(c[0].clone(), c[1].clone())
}

fn morita_set(p: &SpecParams, n: u32) -> Vec<Bipartition> {
    let e = e_value(p).map(|e| e as u32);
    Bipartition::all(n).into_iter().filter(|x| x.first.is_e_regular(e) && x.second.is_e_regular(e)).collect()
}

fn extension_set(p: &SpecParams, n: u32) -> Vec<Bipartition> {
    basic_set_sym(p, n).into_iter().map(|x| Bipartition::new(x, Partition::empty())).collect()
}

fn crystal_set(l: u64, u: Vec<i64>, order: NodeOrder, n: u32) -> Result<Vec<Bipartition>, BasicSetError> {
    let params = FockParams::new(l as u32, u, order)?;
    Ok(uryu_set(&params, n as usize)?.into_iter().map(to_bipartition).collect())
}

/// Canonical basic set of the type `B_n` Hecke algebra at this specialization.
pub fn basic_set_b(p: &SpecParams, n: u32) -> Result<BasicSetB, BasicSetError> {
    p.require_odd_char()?;
    let (a, b) = (p.a, p.b);
    let zero = fn_zero(p, n)?;
    let xa_one = p.is_one(a as i64);
    let done = |case, mut set: Vec<Bipartition>| {
        set.sort_by(|x, y| y.cmp(x));
        Ok(BasicSetB { case, set })
    };
    if a > 0 && b > u64::from(n.saturating_sub(1)) * a {
        // the Kleshchev set, which reduces to the Dipper-James sets when f_n != 0 or ξ^a = 1
        let set = match zero {
            None => morita_set(p, n),
            Some(_) if xa_one => extension_set(p, n),
            Some(d) => {
                let l = p.order_of_power(a);
                crystal_set(l, vec![0, d.rem_euclid(l as i64)], NodeOrder::Ariki, n)?
            }
        };
        return done(DispatchCase::Asymptotic, set);
    }
    if zero.is_none() {
        return done(DispatchCase::DjMorita, morita_set(p, n));
    }
    if xa_one {
        // f_n = 0 with ξ^a = 1 forces ξ^b = -1
        return done(DispatchCase::DjExtension, extension_set(p, n));
    }
    let l = p.order_of_power(a);
    if a == b {
        return done(DispatchCase::JaconEqual, crystal_set(l, vec![1, l as i64 / 2], NodeOrder::Flotw, n)?);
    }
    if b == 0 {
        return done(DispatchCase::JaconB0, crystal_set(l, vec![0, l as i64 / 2], NodeOrder::Flotw, n)?);
    }
    Err(BasicSetError::CaseNotCovered { a, b })
}

/// Canonical basic set for type `D_n` with `L' = length`, `ξ` of even order `l`.
pub fn basic_set_d(p: &SpecParams, n: u32) -> Result<Vec<DLabel>, BasicSetError> {
    p.require_odd_char()?;
    let l = p.xi_order;
    if !l.is_multiple_of(2) {
        return Err(BasicSetError::OddOrderUnsupported(l));
    }
    let params = FockParams::new(l as u32, vec![0, l as i64 / 2], NodeOrder::Flotw)?;
    let mut out: Vec<DLabel> = uryu_set(&params, n as usize)?
        .into_iter()
        .map(to_bipartition)
        .filter(|x| x.first != x.second)
        .map(|x| DLabel::pair(x.first, x.second))
        .collect();
    if n.is_multiple_of(2) {
        for lam in Partition::all(n / 2) {
            if lam.is_e_regular(Some(l as u32 / 2)) {
                out.push(DLabel::Split(lam.clone(), true));
                out.push(DLabel::Split(lam, false));
            }
        }
    }
    out.sort_by(|x, y| y.cmp(x));
    out.dedup();
    Ok(out)
}
