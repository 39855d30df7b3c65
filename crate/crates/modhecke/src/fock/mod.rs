//! Level-`r` Fock space for affine `sl_l`: multipartitions, residues, node
//! orders, the classical and quantum actions, and the crystal graph.

mod crystal;
mod ops;

pub use crystal::{
    cogood_node, crystal, crystal_with_cap, etilde, flotw_member, ftilde, good_node, good_node_by_definition,
    in_crystal, kleshchev_member, uryu_set, CrystalEdge, CrystalGraph, DEFAULT_LEVEL_CAP,
};
pub use ops::{
    classical_d, classical_e, classical_f, classical_h, ind, quantum_d, quantum_e, quantum_f, quantum_k, quantum_k_inv,
    res, FockVector,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::schur::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameters must satisfy 0 <= u_1 <= ... <= u_r <= l-1")]
    ParamsOutOfRange,
    #[error("level {level} exceeds the cap {cap}")]
    LevelCapExceeded { level: usize, cap: usize },
    #[error("multipartition has {got} components, expected {expected}")]
    ComponentMismatch { got: usize, expected: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Which total order on nodes defines "above".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum NodeOrder {
    /// By content `b - a + u_c`, ties broken by larger component first.
    #[default]
    Flotw,
    /// By component (larger first), then row (larger first); ignores `u`.
    Ariki,
}

impl FromStr for NodeOrder {
    type Err = FockError;
    fn from_str(s: &str) -> Result<Self, FockError> {
        match s.to_ascii_lowercase().as_str() {
            "flotw" => Ok(NodeOrder::Flotw),
            "ariki" => Ok(NodeOrder::Ariki),
            _ => Err(FockError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for NodeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeOrder::Flotw => "flotw",
            NodeOrder::Ariki => "ariki",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FockParams {
    pub l: u32,
    pub u: Vec<i64>,
    pub order: NodeOrder,
}

impl FockParams {
    pub fn new(l: u32, u: Vec<i64>, order: NodeOrder) -> Result<Self, FockError> {
        if l < 2 {
            return Err(FockError::InvalidParams(format!("l = {l} must be at least 2")));
        }
        if u.is_empty() {
            return Err(FockError::InvalidParams("u must have at least one entry".into()));
        }
        Ok(Self { l, u, order })
    }

    pub fn r(&self) -> usize {
        self.u.len()
    }

    /// `b - a + u_c`
    pub fn content(&self, n: &Node) -> i64 {
        i64::from(n.col) - i64::from(n.row) + self.u[n.comp as usize - 1]
    }

    pub fn residue(&self, n: &Node) -> u32 {
        self.content(n).rem_euclid(i64::from(self.l)) as u32
    }

    /// Sort key: `above(x, y)` iff `key(x) < key(y)`.
    fn key(&self, n: &Node) -> (i64, i64) {
        match self.order {
            NodeOrder::Flotw => (self.content(n), -i64::from(n.comp)),
            NodeOrder::Ariki => (-i64::from(n.comp), -i64::from(n.row)),
        }
    }

    pub fn above(&self, x: &Node, y: &Node) -> bool {
        self.key(x) < self.key(y)
    }

    fn sort_highest_first(&self, nodes: &mut [Node]) {
        nodes.sort_by_key(|n| self.key(n));
    }

    /// Whether `0 <= u_1 <= ... <= u_r <= l-1`.
    pub fn is_flotw_range(&self) -> bool {
        self.u.windows(2).all(|w| w[0] <= w[1]) && self.u[0] >= 0 && *self.u.last().unwrap() < i64::from(self.l)
    }
}

/// A box `(row, col, comp)`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub comp: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: u32) -> Self {
        Self { row, col, comp }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An `r`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self(components)
    }

    pub fn empty(r: usize) -> Self {
        Self(vec![Partition::empty(); r])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.0.iter().enumerate() {
            for (a, &len) in p.parts().iter().enumerate() {
                for b in 1..=len {
                    out.push(Node::new(a as u32 + 1, b, c as u32 + 1));
                }
            }
        }
        out
    }

    pub fn contains(&self, n: &Node) -> bool {
        self.0.get(n.comp as usize - 1).is_some_and(|p| n.col <= p.part(n.row as usize - 1))
    }

    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.0.iter().enumerate() {
            for a in p.addable_rows() {
                out.push(Node::new(a as u32 + 1, p.part(a) + 1, c as u32 + 1));
            }
        }
        out
    }

    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.0.iter().enumerate() {
            for a in p.removable_rows() {
                out.push(Node::new(a as u32 + 1, p.part(a), c as u32 + 1));
            }
        }
        out
    }

    /// `self ∪ {n}`; `n` must be addable.
    pub fn add(&self, n: &Node) -> Option<Multipartition> {
        let c = n.comp as usize - 1;
        let p = self.0.get(c)?;
        if p.part(n.row as usize - 1) + 1 != n.col {
            return None;
        }
        let mut out = self.clone();
        out.0[c] = p.add_box(n.row as usize - 1)?;
        Some(out)
    }

    /// `self \ {n}`; `n` must be removable.
    pub fn remove(&self, n: &Node) -> Option<Multipartition> {
        let c = n.comp as usize - 1;
        let p = self.0.get(c)?;
        if p.part(n.row as usize - 1) != n.col {
            return None;
        }
        let mut out = self.clone();
        out.0[c] = p.remove_box(n.row as usize - 1)?;
        Some(out)
    }

    /// All multipartitions of `n` with `r` components.
    pub fn all(r: usize, n: u32) -> Vec<Multipartition> {
        if r == 0 {
            return if n == 0 { vec![Multipartition(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for p in Partition::all(k) {
                for rest in Multipartition::all(r - 1, n - k) {
                    let mut comps = vec![p.clone()];
                    comps.extend(rest.0);
                    out.push(Multipartition(comps));
                }
            }
        }
        out
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses JSON (`[[2,1],[]]`) or components separated by `|` (`21|∅`).
impl FromStr for Multipartition {
    type Err = FockError;
    fn from_str(s: &str) -> Result<Self, FockError> {
        let t = s.trim();
        if t.starts_with("[[") || t == "[]" {
            return serde_json::from_str(t).map_err(|_| FockError::Parse(s.to_string()));
        }
        t.split('|')
            .map(|c| c.parse::<Partition>().map_err(|_| FockError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Multipartition)
    }
}

/// `res_l` of a node.
pub fn residue(n: &Node, params: &FockParams) -> u32 {
    params.residue(n)
}

/// Addable `i`-nodes, highest first.
pub fn addable(lambda: &Multipartition, i: u32, params: &FockParams) -> Vec<Node> {
    let mut v: Vec<Node> = lambda.addable().into_iter().filter(|n| params.residue(n) == i).collect();
    params.sort_highest_first(&mut v);
    v
}

/// Removable `i`-nodes, highest first.
pub fn removable(lambda: &Multipartition, i: u32, params: &FockParams) -> Vec<Node> {
    let mut v: Vec<Node> = lambda.removable().into_iter().filter(|n| params.residue(n) == i).collect();
    params.sort_highest_first(&mut v);
    v
}

/// `W_i`: number of `i`-nodes.
pub fn icount(lambda: &Multipartition, i: u32, params: &FockParams) -> u32 {
    lambda.nodes().iter().filter(|n| params.residue(n) == i).count() as u32
}

/// `N_i = |A_i| - |R_i|`.
pub fn ncount(lambda: &Multipartition, i: u32, params: &FockParams) -> i64 {
    addable(lambda, i, params).len() as i64 - removable(lambda, i, params).len() as i64
}

pub fn above(x: &Node, y: &Node, params: &FockParams) -> bool {
    params.above(x, y)
}

fn check_r(lambda: &Multipartition, params: &FockParams) -> Result<(), FockError> {
    if lambda.r() != params.r() {
        return Err(FockError::ComponentMismatch { got: lambda.r(), expected: params.r() });
    }
    Ok(())
}

#[cfg(test)]
mod tests;
