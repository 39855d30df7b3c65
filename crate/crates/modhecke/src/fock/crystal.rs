use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{addable, check_r, removable, FockError, FockParams, Multipartition, Node, NodeOrder};
use crate::par;

/// Default bound on the number of levels a crystal may be expanded to.
pub const DEFAULT_LEVEL_CAP: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Add,
    Rem,
}

/// The reduced `i`-signature: `i`-nodes highest first, with every removable node
/// cancelled against an addable node directly below it until none remain adjacent.
fn reduced_signature(lambda: &Multipartition, i: u32, params: &FockParams) -> Vec<(Sign, Node)> {
    let mut nodes: Vec<(Sign, Node)> = addable(lambda, i, params)
        .into_iter()
        .map(|n| (Sign::Add, n))
        .chain(removable(lambda, i, params).into_iter().map(|n| (Sign::Rem, n)))
        .collect();
    nodes.sort_by(|x, y| {
        if params.above(&x.1, &y.1) {
            std::cmp::Ordering::Less
        } else if params.above(&y.1, &x.1) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    let mut stack: Vec<(Sign, Node)> = Vec::new();
    for x in nodes {
        if x.0 == Sign::Add && stack.last().is_some_and(|t| t.0 == Sign::Rem) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// Highest normal removable `i`-node.
pub fn good_node(lambda: &Multipartition, i: u32, params: &FockParams) -> Option<Node> {
    reduced_signature(lambda, i, params).into_iter().find(|x| x.0 == Sign::Rem).map(|x| x.1)
}

/// The addable `i`-node whose addition is inverse to removing a good node.
pub fn cogood_node(lambda: &Multipartition, i: u32, params: &FockParams) -> Option<Node> {
    reduced_signature(lambda, i, params).into_iter().rev().find(|x| x.0 == Sign::Add).map(|x| x.1)
}

/// Good node straight from the definition: a removable `i`-node `γ` is normal if for
/// every addable `i`-node `γ'` below it, strictly more removable than addable
/// `i`-nodes lie strictly between `γ'` and `γ`.
pub fn good_node_by_definition(lambda: &Multipartition, i: u32, params: &FockParams) -> Option<Node> {
    let add = addable(lambda, i, params);
    let rem = removable(lambda, i, params);
    let between =
        |set: &[Node], lo: &Node, hi: &Node| set.iter().filter(|n| params.above(hi, n) && params.above(n, lo)).count();
    rem.iter()
        .find(|g| add.iter().filter(|a| params.above(g, a)).all(|a| between(&rem, a, g) > between(&add, a, g)))
        .copied()
}

pub fn etilde(lambda: &Multipartition, i: u32, params: &FockParams) -> Option<Multipartition> {
    good_node(lambda, i, params).and_then(|n| lambda.remove(&n))
}

pub fn ftilde(lambda: &Multipartition, i: u32, params: &FockParams) -> Option<Multipartition> {
    cogood_node(lambda, i, params).and_then(|n| lambda.add(&n))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub source: Multipartition,
    pub target: Multipartition,
    pub color: u32,
}

/// Component of the empty multipartition, truncated at a level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub params: FockParams,
    pub vertices: Vec<Multipartition>,
    pub edges: Vec<CrystalEdge>,
    /// `levels[n]` is the set of vertices of size `n`, sorted.
    pub levels: Vec<Vec<Multipartition>>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  rankdir=BT;\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{v}\"];");
        }
        let index = |m: &Multipartition| self.vertices.iter().position(|v| v == m).unwrap();
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", index(&e.source), index(&e.target), e.color);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (n, level) in self.levels.iter().enumerate() {
            let names: Vec<String> = level.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(s, "level {n} ({}): {}", level.len(), names.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(s, "{} -{}-> {}", e.source, e.color, e.target);
        }
        s
    }
}

pub fn crystal(params: &FockParams, levels: usize) -> Result<CrystalGraph, FockError> {
    crystal_with_cap(params, levels, DEFAULT_LEVEL_CAP)
}

/// Breadth-first closure of the empty multipartition under the `ftilde_i`, up to size `levels`.
pub fn crystal_with_cap(params: &FockParams, levels: usize, cap: usize) -> Result<CrystalGraph, FockError> {
    if levels > cap {
        return Err(FockError::LevelCapExceeded { level: levels, cap });
    }
    let mut all_levels = vec![vec![Multipartition::empty(params.r())]];
    let mut edges = Vec::new();
    for _ in 0..levels {
        let cur = all_levels.last().unwrap();
        let out: Vec<Vec<CrystalEdge>> = par::map_range(cur.len(), |k| {
            (0..params.l)
                .filter_map(|i| {
                    ftilde(&cur[k], i, params).map(|t| CrystalEdge { source: cur[k].clone(), target: t, color: i })
                })
                .collect()
        });
        let mut next = BTreeSet::new();
        for e in out.into_iter().flatten() {
            next.insert(e.target.clone());
            edges.push(e);
        }
        all_levels.push(next.into_iter().collect());
    }
    edges.sort();
    let vertices = all_levels.iter().flatten().cloned().collect();
    Ok(CrystalGraph { params: params.clone(), vertices, edges, levels: all_levels })
}

/// `Λ_{r,n}^{(u)}` for the configured node order.
pub fn uryu_set(params: &FockParams, n: usize) -> Result<Vec<Multipartition>, FockError> {
    Ok(crystal(params, n)?.levels.pop().unwrap_or_default())
}

/// Membership in the component of the empty multipartition, by descending with `etilde`.
pub fn in_crystal(lambda: &Multipartition, params: &FockParams) -> bool {
    let mut cur = lambda.clone();
    while cur.size() > 0 {
        match (0..params.l).find_map(|i| etilde(&cur, i, params)) {
            Some(next) => cur = next,
            None => return false,
        }
    }
    true
}

/// Non-recursive FLOTW test; needs `0 <= u_1 <= ... <= u_r <= l-1`.
pub fn flotw_member(lambda: &Multipartition, params: &FockParams) -> Result<bool, FockError> {
    check_r(lambda, params)?;
    if !params.is_flotw_range() {
        return Err(FockError::ParamsOutOfRange);
    }
    let comps = lambda.components();
    let r = comps.len();
    let u = &params.u;
    let l = i64::from(params.l);
    let rows = comps.iter().map(|p| p.len()).max().unwrap_or(0);
    let part = |j: usize, i: i64| if i < 1 { u32::MAX } else { comps[j].part(i as usize - 1) };
    for i in 1..=rows as i64 {
        for j in 0..r.saturating_sub(1) {
            if part(j, i) < part(j + 1, i + u[j + 1] - u[j]) {
                return Ok(false);
            }
        }
        if part(r - 1, i) < part(0, i + l + u[0] - u[r - 1]) {
            return Ok(false);
        }
    }
    let mut by_len: std::collections::BTreeMap<u32, BTreeSet<u32>> = Default::default();
    for (c, p) in comps.iter().enumerate() {
        for (a, &k) in p.parts().iter().enumerate() {
            let end = Node::new(a as u32 + 1, k, c as u32 + 1);
            by_len.entry(k).or_default().insert(params.residue(&end));
        }
    }
    Ok(by_len.values().all(|s| s.len() < params.l as usize))
}

/// Membership in the crystal component built with the component-first node order.
pub fn kleshchev_member(lambda: &Multipartition, params: &FockParams) -> Result<bool, FockError> {
    check_r(lambda, params)?;
    let p = FockParams { order: NodeOrder::Ariki, ..params.clone() };
    Ok(in_crystal(lambda, &p))
}
