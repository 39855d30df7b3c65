//! Browser bindings: crystal graphs, canonical basic sets and Schur invariant tables.
//!
//! Every export takes plain numbers and strings and returns a JSON string;
//! errors become JavaScript exceptions carrying the message.

use modhecke::basicsets::{basic_set_b, basic_set_d, basic_set_sym, e_value, SpecParams};
use modhecke::coxeter::CoxeterType;
use modhecke::fock::{crystal_with_cap, FockParams, NodeOrder};
use modhecke::schur::invariant_table;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Deepest level the browser demo will build.
const WEB_LEVEL_CAP: usize = 12;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `u` is a comma-separated charge such as `0,1`; `order` is `flotw` or `ariki`.
pub fn crystal_json(l: u32, u: &str, n: u32, order: &str) -> Result<String, String> {
    let u: Vec<i64> = u
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad charge entry {s:?}")))
        .collect::<Result<_, _>>()?;
    let order: NodeOrder = order.parse().map_err(err)?;
    let params = FockParams::new(l, u, order).map_err(err)?;
    let g = crystal_with_cap(&params, n as usize, WEB_LEVEL_CAP).map_err(err)?;
    let edges: Vec<_> = g
        .edges
        .iter()
        .map(|e| json!({"source": e.source.to_string(), "target": e.target.to_string(), "color": e.color}))
        .collect();
    let levels: Vec<Vec<String>> = g.levels.iter().map(|l| strings(l)).collect();
    Ok(json!({"levels": levels, "edges": edges, "dot": g.to_dot()}).to_string())
}

/// `family` is `A`, `B` or `D`.
pub fn basic_set_json(family: &str, n: u32, a: u64, b: u64, xi_order: u64, char: u64) -> Result<String, String> {
    let p = SpecParams::new(char, xi_order, a, b).map_err(err)?;
    let (case, set) = match family.to_ascii_uppercase().as_str() {
        "A" => {
            let e = e_value(&p).map_or("∞".to_string(), |e| e.to_string());
            (format!("e-regular (e = {e})"), strings(&basic_set_sym(&p, n)))
        }
        "B" => {
            let r = basic_set_b(&p, n).map_err(err)?;
            (r.case.to_string(), strings(&r.set))
        }
        "D" => (String::from("Jacon-D"), strings(&basic_set_d(&p, n).map_err(err)?)),
        f => return Err(format!("basic sets are available for A, B and D, not {f:?}")),
    };
    Ok(json!({"case": case, "set": set}).to_string())
}

/// `n` is the size for `A` (so `S_n`) and the rank for `B` and `D`; ignored for `G2` and `F4`.
pub fn schur_table_json(family: &str, n: u32, a: u32, b: u32) -> Result<String, String> {
    let ct = match family.to_ascii_uppercase().as_str() {
        "A" if n >= 1 => CoxeterType::A(n as usize - 1),
        "A" => return Err("n must be at least 1".into()),
        f => CoxeterType::parse(f, n as usize).ok_or_else(|| format!("unknown type {family:?}"))?,
    };
    if matches!(ct, CoxeterType::B(k) | CoxeterType::D(k) if k == 0 || k > 12) {
        return Err("rank must be between 1 and 12".into());
    }
    let rows: Vec<_> = invariant_table(ct, a, b)
        .map_err(err)?
        .into_iter()
        .map(|(label, i)| json!({"label": label, "f": i.f, "alpha": i.alpha}))
        .collect();
    Ok(json!({"rows": rows}).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn crystal(l: u32, u: &str, n: u32, order: &str) -> Result<String, JsError> {
    js(crystal_json(l, u, n, order))
}

#[wasm_bindgen(js_name = basicSet)]
pub fn basic_set(family: &str, n: u32, a: u32, b: u32, xi_order: u32, char: u32) -> Result<String, JsError> {
    js(basic_set_json(family, n, a.into(), b.into(), xi_order.into(), char.into()))
}

#[wasm_bindgen(js_name = schurTable)]
pub fn schur_table(family: &str, n: u32, a: u32, b: u32) -> Result<String, JsError> {
    js(schur_table_json(family, n, a, b))
}
