use std::fmt::Write as _;

use modhecke::basicsets::{
    basic_set_b, basic_set_d, basic_set_sym, builtin_fixture, check_dims, check_dominance_triangularity, e_value,
    verify_decomp, DecompMatrix, RowLabel, SpecParams, Triangularity, Verdict,
};
use modhecke::coxeter::{CoxeterType, WeightFunction, WeylGroup};
use modhecke::fock::{crystal_with_cap, FockParams};
use modhecke::klcells::{check_property, determinant, HeckeAlgebra, JElement, JRing, KlData, KlOptions};
use modhecke::schur::{
    f4_invariants, g2_label, g2_schur, invariant_table, invariants_b, invariants_of, schur_element_a, schur_element_b,
    typed_invariants, Bipartition, DLabel, InvariantPair, Partition,
};
use modhecke::LaurentPoly;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{BasicsetArgs, CrystalArgs, Emit, Family, Format, KlArgs, Outcome, SchurArgs, VerifyArgs};

type Res = Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ok(out: String) -> Res {
    Ok(Outcome { out, code: 0 })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(f: Format) -> Result<(), String> {
    if f == Format::Dot {
        Err("--format dot is only available for `crystal`".into())
    } else {
        Ok(())
    }
}

pub fn crystal(a: CrystalArgs) -> Res {
    if let Some(r) = a.r {
        if r != a.u.len() {
            return Err(format!("--r {r} does not match the {} entries of --u", a.u.len()));
        }
    }
    let params = FockParams::new(a.l, a.u, a.order).map_err(err)?;
    let g = crystal_with_cap(&params, a.n, a.cap).map_err(err)?;
    ok(match a.format {
        Format::Text => g.to_text(),
        Format::Dot => g.to_dot(),
        Format::Json => to_json(&g),
    })
}

fn show_all<T: std::fmt::Display>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn basicset(a: BasicsetArgs) -> Res {
    no_dot(a.format)?;
    let p = SpecParams::new(a.char, a.xi_order, a.a, a.b).map_err(err)?;
    let (family, case, set) = match a.family {
        Family::A => {
            let e = e_value(&p).map_or("∞".to_string(), |e| e.to_string());
            ("A", format!("e-regular (e = {e})"), show_all(&basic_set_sym(&p, a.n)))
        }
        Family::B => {
            let r = basic_set_b(&p, a.n).map_err(err)?;
            ("B", r.case.to_string(), show_all(&r.set))
        }
        Family::D => {
            if a.a != 1 || a.b != 0 {
                return Err("type D basic sets use L = length: pass --a 1 --b 0".into());
            }
            ("D", "Jacon-D".to_string(), show_all(&basic_set_d(&p, a.n).map_err(err)?))
        }
        Family::G2 | Family::F4 => return Err("basic sets are available for types A, B and D".into()),
    };
    ok(match a.format {
        Format::Json => to_json(&json!({
            "type": family, "n": a.n, "a": a.a, "b": a.b, "xi_order": a.xi_order, "char": a.char,
            "case": case, "set": set,
        })),
        _ => format!("{case}\n{}\n", set.join("\n")),
    })
}

fn coxeter_type(family: Family, n: Option<usize>, what: &str) -> Result<CoxeterType, String> {
    let need = || n.ok_or_else(|| format!("{what} is required for this type"));
    Ok(match family {
        Family::A => CoxeterType::A(need()?),
        Family::B => CoxeterType::B(need()?),
        Family::D => CoxeterType::D(need()?),
        Family::G2 => CoxeterType::G2,
        Family::F4 => CoxeterType::F4,
    })
}

fn split_pair(s: &str) -> Result<(Partition, &str), String> {
    let (x, y) = s.split_once('|').ok_or_else(|| format!("expected `first|second`, got {s:?}"))?;
    Ok((x.parse().map_err(err)?, y.trim()))
}

/// Schur element (when available) and invariants of a single character.
fn one_character(
    family: Family,
    label: &str,
    a: u32,
    b: u32,
) -> Result<(String, Option<LaurentPoly>, InvariantPair), String> {
    match family {
        Family::A => {
            let nu: Partition = label.parse().map_err(err)?;
            let c = schur_element_a(&nu, a).map_err(err)?;
            let inv = invariants_of(&c).map_err(err)?;
            Ok((nu.to_string(), Some(c), inv))
        }
        Family::B => {
            let (x, y) = split_pair(label)?;
            let bp = Bipartition::new(x, y.parse().map_err(err)?);
            let c = schur_element_b(&bp, a, b).map_err(err)?;
            let inv = invariants_b(&bp, a, b).map_err(err)?;
            Ok((bp.to_string(), Some(c), inv))
        }
        Family::D => {
            let (x, y) = split_pair(label)?;
            let l = match y {
                "+" => DLabel::Split(x, true),
                "-" => DLabel::Split(x, false),
                _ => DLabel::pair(x, y.parse().map_err(err)?),
            };
            let inv = typed_invariants(&l, a).map_err(err)?;
            Ok((l.to_string(), None, inv))
        }
        Family::G2 => {
            let l = g2_label(label).map_err(err)?;
            let c = g2_schur(l, a, b).map_err(err)?;
            let inv = invariants_of(&c).map_err(err)?;
            Ok((l.to_string(), Some(c), inv))
        }
        Family::F4 => Ok((label.to_string(), None, f4_invariants(label, a, b).map_err(err)?)),
    }
}

pub fn schur(s: SchurArgs) -> Res {
    no_dot(s.format)?;
    let (a, b) = match s.weights.as_deref() {
        Some([a]) => (*a, *a),
        Some([a, b]) => (*a, *b),
        Some(_) => return Err("--weights takes a or a,b".into()),
        None => {
            let a = s.a.unwrap_or(1);
            (a, s.b.unwrap_or(a))
        }
    };
    if let Some(label) = &s.character {
        let (name, poly, inv) = one_character(s.family, label, a, b)?;
        return ok(match s.format {
            Format::Json => to_json(&json!({
                "label": name, "a": a, "b": b, "alpha": inv.alpha, "f": inv.f,
                "schur_element": poly.as_ref().map(ToString::to_string),
            })),
            _ => {
                let mut out = String::new();
                if let Some(c) = &poly {
                    let _ = writeln!(out, "c_{name} = {c}");
                }
                let _ = writeln!(out, "alpha = {}, f = {}", inv.alpha, inv.f);
                out
            }
        });
    }
    let n = s.n.map(|n| n as usize);
    let ct = match s.family {
        Family::A => match n {
            Some(k) if k >= 1 => CoxeterType::A(k - 1),
            _ => return Err("--n >= 1 is required for type A".into()),
        },
        f => coxeter_type(f, n, "--n")?,
    };
    let rows = invariant_table(ct, a, b).map_err(err)?;
    ok(match s.format {
        Format::Json => to_json(&json!({
            "type": ct.family(), "n": s.n, "a": a, "b": b,
            "rows": rows.iter().map(|(l, i)| json!({"label": l, "f": i.f, "alpha": i.alpha})).collect::<Vec<_>>(),
        })),
        _ => {
            let width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0).max(5);
            let mut out = format!("{:<width$}  {:>6}  {:>6}\n", "label", "f", "alpha");
            for (l, i) in &rows {
                let pad = width - l.chars().count();
                let _ = writeln!(out, "{l}{}  {:>6}  {:>6}", " ".repeat(pad), i.f, i.alpha);
            }
            out
        }
    })
}

fn render_j(kl: &KlData, e: &JElement) -> String {
    let g = kl.algebra().group();
    let terms: Vec<String> = e
        .iter()
        .map(|(w, c)| if c.is_one() { format!("t_{}", g.render(w)) } else { format!("({c})·t_{}", g.render(w)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn kl(k: KlArgs) -> Res {
    no_dot(k.format)?;
    let ct = coxeter_type(k.family, k.rank, "--rank")?;
    let weights = WeightFunction::from_params(ct, &k.weights).map_err(err)?;
    let group = WeylGroup::build(ct).map_err(err)?;
    let alg = HeckeAlgebra::new(group, weights).map_err(err)?;
    let opts = KlOptions { force: k.force, order: None };
    let kl = KlData::compute_with(alg, &opts).map_err(err)?;
    let alg = kl.algebra();
    let g = alg.group();
    let name = |w: usize| g.render(w);
    let emit = if k.emit.is_empty() && k.check.is_empty() { vec![Emit::Afn] } else { k.emit.clone() };

    let mut report = serde_json::Map::new();
    report.insert("type".into(), json!(format!("{}{}", ct.family(), ct.rank())));
    report.insert("weights".into(), json!((0..ct.rank()).map(|s| alg.weight(s)).collect::<Vec<_>>()));
    report.insert("size".into(), json!(kl.size()));
    report.insert("generators".into(), json!(g.generator_names()));
    report.insert("elements".into(), json!((0..kl.size()).map(name).collect::<Vec<_>>()));
    report.insert("element_words".into(), json!((0..kl.size()).map(|w| g.word(w)).collect::<Vec<_>>()));
    let mut text = String::new();
    let _ = writeln!(text, "{}{} with weights {:?}, |W| = {}", ct.family(), ct.rank(), k.weights, kl.size());

    for e in &emit {
        match e {
            Emit::Cbasis => {
                let rows: Vec<Value> = (0..kl.size())
                    .map(|w| {
                        let coeffs: Vec<Value> =
                            kl.c(w).support().map(|y| json!({"y": name(y), "p": kl.c(w).coeff(y)})).collect();
                        json!({"w": name(w), "c": alg.render(kl.c(w)), "coeffs": coeffs})
                    })
                    .collect();
                for w in 0..kl.size() {
                    let _ = writeln!(text, "c_{} = {}", name(w), alg.render(kl.c(w)));
                }
                report.insert("cbasis".into(), Value::Array(rows));
            }
            Emit::Afn => {
                report.insert("afn".into(), json!(kl.afn()));
                for w in 0..kl.size() {
                    let _ = writeln!(text, "a({}) = {}", name(w), kl.a(w));
                }
            }
            Emit::Gamma => {
                let mut rows = Vec::new();
                for x in 0..kl.size() {
                    for y in 0..kl.size() {
                        for &(z, c) in kl.gammas(x, y) {
                            rows.push(json!({"x": name(x), "y": name(y), "z": name(z), "gamma": c}));
                            let _ = writeln!(text, "gamma({}, {}, {}) = {c}", name(x), name(y), name(z));
                        }
                    }
                }
                report.insert("gamma".into(), Value::Array(rows));
            }
            Emit::Dinv => {
                let rows: Vec<Value> = kl
                    .distinguished()
                    .iter()
                    .map(|&d| json!({"d": name(d), "a": kl.a(d), "delta": kl.delta(d), "n": kl.n(d).to_string()}))
                    .collect();
                for &d in kl.distinguished() {
                    let _ = writeln!(text, "distinguished {} (a = {}, n = {})", name(d), kl.a(d), kl.n(d));
                }
                report.insert("dinv".into(), Value::Array(rows));
            }
            Emit::Jring => {
                let j = JRing::new(&kl).map_err(err)?;
                let unit = render_j(&kl, &j.unit());
                let assoc = j.check_associativity();
                let bimod = j.check_bimodule();
                let _ = writeln!(
                    text,
                    "J unit = {unit}\nJ associative: {}\nJ bimodule: {}",
                    assoc.passed(),
                    bimod.passed()
                );
                report.insert("jring".into(), json!({"unit": unit, "associativity": assoc, "bimodule": bimod}));
            }
            Emit::Phimatrix => {
                let j = JRing::new(&kl).map_err(err)?;
                let m = j.phi_matrix();
                let det = determinant(&m).map_err(err)?;
                let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                let _ = writeln!(text, "det(phi) = {det}");
                report.insert("phimatrix".into(), json!({"matrix": rows, "determinant": det.to_string()}));
            }
        }
    }

    let mut failed = false;
    if !k.check.is_empty() {
        let mut rows = Vec::new();
        for &p in &k.check {
            let r = check_property(&kl, p);
            failed |= !r.passed();
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["property"] = json!(p.to_string());
            if let Some(w) = v.get("witness").and_then(Value::as_array).cloned() {
                v["witness_elements"] =
                    json!(w.iter().filter_map(Value::as_u64).map(|i| name(i as usize)).collect::<Vec<_>>());
            }
            let _ = writeln!(text, "{p}: {}", if r.passed() { "Pass".to_string() } else { format!("Fail {v}") });
            rows.push(v);
        }
        report.insert("checks".into(), Value::Array(rows));
    }
    let out = match k.format {
        Format::Json => to_json(&Value::Object(report)),
        _ => text,
    };
    Ok(Outcome { out, code: u8::from(failed) })
}

fn load_matrix(v: &VerifyArgs) -> Result<DecompMatrix, String> {
    if let Some(name) = &v.fixture {
        return builtin_fixture(name).ok_or_else(|| format!("unknown fixture {name:?}"));
    }
    let path = v.path.as_ref().expect("clap requires a path or --fixture");
    let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    DecompMatrix::from_json(&src).map_err(err)
}

pub fn verify(v: VerifyArgs) -> Res {
    no_dot(v.format)?;
    let d = load_matrix(&v)?;
    let r = verify_decomp(&d).map_err(err)?;
    let label = |k: usize| d.rows[k].label.to_string();
    let mut text = String::new();
    let (report, code) = match &r.verdict {
        Verdict::Exists { rows, order } => {
            let structured = d.rows.iter().all(|r| !matches!(r.label, RowLabel::Name(_)));
            let dominance = structured.then(|| check_dominance_triangularity(&d, rows));
            let dims = check_dims(&d);
            let _ = writeln!(text, "canonical basic set exists ({} modules)", rows.len());
            let set: Vec<Value> = order
                .iter()
                .map(|&j| {
                    let _ = writeln!(text, "  M{} <- {}  (alpha = {})", j + 1, label(rows[j]), r.breve_alpha[j]);
                    json!({"column": j + 1, "label": label(rows[j]), "breve_alpha": r.breve_alpha[j]})
                })
                .collect();
            let dom_json = match &dominance {
                None => json!(null),
                Some(Triangularity::Pass) => json!("Pass"),
                Some(Triangularity::Fail { row, column }) => {
                    json!({"fail": {"row": label(*row), "column": column + 1}})
                }
            };
            match &dominance {
                Some(Triangularity::Pass) => text.push_str("dominance triangularity: Pass\n"),
                Some(Triangularity::Fail { row, column }) => {
                    let _ =
                        writeln!(text, "dominance triangularity: Fail at row {} column {}", label(*row), column + 1);
                }
                None => {}
            }
            if let Err(k) = dims {
                let _ = writeln!(text, "dimension mismatch at row {}", label(k));
            }
            let dims_json = match dims {
                Ok(()) => json!("ok"),
                Err(k) => json!({"mismatch": label(k)}),
            };
            let code = u8::from(dims.is_err());
            (json!({"verdict": "Exists", "basic_set": set, "dominance": dom_json, "dims": dims_json}), code)
        }
        Verdict::Fails { column, candidates } => {
            let names: Vec<String> = candidates.iter().map(|&k| label(k)).collect();
            let _ = writeln!(
                text,
                "no canonical basic set: column {} has minimal alpha {} at rows [{}]",
                column + 1,
                r.breve_alpha[*column],
                names.join(", ")
            );
            (
                json!({"verdict": "Fails", "column": column + 1, "breve_alpha": r.breve_alpha[*column], "candidates": names}),
                1,
            )
        }
    };
    let out = match v.format {
        Format::Json => to_json(&report),
        _ => text,
    };
    Ok(Outcome { out, code })
}
