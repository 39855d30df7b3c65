use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::SchurError;

/// A partition as a weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else must be weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, SchurError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SchurError::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part, 0-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `n(ν) = sum (i-1) ν_i`.
    pub fn nfun(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * u64::from(p)).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Dominance order; partitions of different sizes are incomparable.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let k = self.len().max(other.len());
        let (mut s, mut t) = (0u32, 0u32);
        for i in 0..k {
            s += self.part(i);
            t += other.part(i);
            if s > t {
                return false;
            }
        }
        true
    }

    /// No part repeated `e` or more times; `None` means `e = ∞`.
    pub fn is_e_regular(&self, e: Option<u32>) -> bool {
        let Some(e) = e else { return true };
        let mut run = 0u32;
        for (i, &p) in self.0.iter().enumerate() {
            run = if i > 0 && self.0[i - 1] == p { run + 1 } else { 1 };
            if run >= e {
                return false;
            }
        }
        true
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Hook lengths row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                out.push(p - j as u32 + conj.part(j) - i as u32 - 1);
            }
        }
        out
    }

    /// 0-based rows where a box can be added (the last is a new row).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.0.len()).filter(|&i| i == 0 || self.0[i - 1] > self.part(i)).collect()
    }

    /// 0-based rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > self.part(i + 1)).collect()
    }

    /// Adds a box at the end of `row`; `None` if the result is not a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.0.len() || (row > 0 && self.0[row - 1] <= self.part(row)) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition(parts))
    }

    /// Removes the last box of `row`; `None` if the result is not a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row >= self.0.len() || self.0[row] <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dim(&self) -> BigUint {
        let num: BigUint = (1..=self.size()).map(BigUint::from).product();
        let den: BigUint = self.hooks().into_iter().map(BigUint::from).product();
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `3,2,1`, `(3,2,1)`, `[3,2,1]`, `321` (single digits), or `∅`/`-` for the empty partition.
impl std::str::FromStr for Partition {
    type Err = SchurError;
    fn from_str(s: &str) -> Result<Self, SchurError> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" || t == "-" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Option<Vec<u32>> = if t.contains(',') {
            t.split(',').map(|p| p.trim().parse::<u32>().ok()).collect()
        } else {
            t.chars().map(|c| c.to_digit(10)).collect()
        };
        let parts = parts.ok_or_else(|| SchurError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// A pair of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// All bipartitions of `n`, ordered by `|first|` descending, then each component descending.
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for p in Partition::all(k) {
                for q in Partition::all(n - k) {
                    out.push(Bipartition::new(p.clone(), q));
                }
            }
        }
        out
    }

    /// Dominance on bipartitions: partial sums of the first component, then
    /// `|first|` plus partial sums of the second.
    pub fn dominance_leq(&self, other: &Bipartition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let sums = |b: &Bipartition| {
            let k = self.first.len().max(other.first.len());
            let l = self.second.len().max(other.second.len());
            let mut out = Vec::with_capacity(k + l);
            let mut acc = 0;
            for i in 0..k {
                acc += b.first.part(i);
                out.push(acc);
            }
            acc = b.first.size();
            for j in 0..l {
                acc += b.second.part(j);
                out.push(acc);
            }
            out
        };
        sums(self).iter().zip(sums(other).iter()).all(|(s, t)| s <= t)
    }

    /// Dimension of the corresponding irreducible representation of `W(B_n)`.
    pub fn dim(&self) -> BigUint {
        let n = self.size();
        let k = self.second.size();
        let mut binom = BigUint::one();
        for i in 0..k {
            binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
        }
        binom * self.first.dim() * self.second.dim()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Bipartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.first, &self.second).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (first, second) = <(Partition, Partition)>::deserialize(d)?;
        Ok(Self { first, second })
    }
}

/// Two-row symbol of a bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
    pub m: usize,
}

/// `α_i = i-1+λ1_{m+2-i}` (i = 1..m+1) and `β_i = i-1+λ2_{m+1-i}` (i = 1..m).
pub fn symbol_of(lambda: &Bipartition, m: usize) -> Result<Symbol, SchurError> {
    if lambda.second.len() > m || lambda.first.len() > m + 1 {
        return Err(SchurError::MTooSmall { m });
    }
    let top = (1..=m + 1).map(|i| (i - 1) as u32 + lambda.first.part(m + 1 - i)).collect();
    let bottom = (1..=m).map(|i| (i - 1) as u32 + lambda.second.part(m - i)).collect();
    Ok(Symbol { top, bottom, m })
}

/// Smallest legal padding size.
pub fn default_m(lambda: &Bipartition) -> usize {
    lambda.second.len().max(lambda.first.len().saturating_sub(1))
}
