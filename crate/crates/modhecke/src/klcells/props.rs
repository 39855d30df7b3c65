use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::basis::KlData;
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P15,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::P2,
        Property::P3,
        Property::P4,
        Property::P5,
        Property::P6,
        Property::P7,
        Property::P8,
        Property::P15,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::P2 => "P2",
            Property::P3 => "P3",
            Property::P4 => "P4",
            Property::P5 => "P5",
            Property::P6 => "P6",
            Property::P7 => "P7",
            Property::P8 => "P8",
            Property::P15 => "P15'",
        };
        f.write_str(s)
    }
}

impl FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_end_matches(['\'', '′']).to_ascii_uppercase();
        Ok(match t.as_str() {
            "P2" => Property::P2,
            "P3" => Property::P3,
            "P4" => Property::P4,
            "P5" => Property::P5,
            "P6" => Property::P6,
            "P7" => Property::P7,
            "P8" => Property::P8,
            "P15" => Property::P15,
            _ => return Err(format!("unknown property {s:?}")),
        })
    }
}

/// Outcome of an exhaustive check; `witness` lists element indices of the first violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum PropertyResult {
    Pass,
    Fail { witness: Vec<usize>, detail: String },
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        matches!(self, PropertyResult::Pass)
    }

    fn fail(witness: Vec<usize>, detail: impl Into<String>) -> Self {
        PropertyResult::Fail { witness, detail: detail.into() }
    }
}

pub fn check_property(kl: &KlData, which: Property) -> PropertyResult {
    match which {
        Property::P2 => p2(kl),
        Property::P3 => p3(kl),
        Property::P4 => p4(kl),
        Property::P5 => p5(kl),
        Property::P6 => p6(kl),
        Property::P7 => p7(kl),
        Property::P8 => p8(kl),
        Property::P15 => p15(kl),
    }
}

pub fn check_all(kl: &KlData) -> Vec<(Property, PropertyResult)> {
    Property::ALL.iter().map(|&p| (p, check_property(kl, p))).collect()
}

fn p2(kl: &KlData) -> PropertyResult {
    let g = kl.algebra().group();
    for x in 0..kl.size() {
        for y in 0..kl.size() {
            for &(d, _) in kl.gammas(x, y) {
                if kl.is_distinguished(d) && x != g.inverse(y) {
                    return PropertyResult::fail(vec![x, y, d], "gamma_{x,y,d} != 0 with x != y^-1");
                }
            }
        }
    }
    PropertyResult::Pass
}

fn p3(kl: &KlData) -> PropertyResult {
    let g = kl.algebra().group();
    for y in 0..kl.size() {
        let ds: Vec<usize> =
            kl.gammas(g.inverse(y), y).iter().filter(|(d, _)| kl.is_distinguished(*d)).map(|(d, _)| *d).collect();
        if ds.len() != 1 {
            let mut w = vec![y];
            w.extend(&ds);
            return PropertyResult::fail(w, format!("{} distinguished d with gamma_{{y^-1,y,d}} != 0", ds.len()));
        }
    }
    PropertyResult::Pass
}

fn p4(kl: &KlData) -> PropertyResult {
    let n = kl.size();
    for x in 0..n {
        for y in 0..n {
            for (z, _) in kl.products(x, y) {
                if kl.a(*z) < kl.a(x) || kl.a(*z) < kl.a(y) {
                    return PropertyResult::fail(vec![x, y, *z], "h_{x,y,z} != 0 but a(z) < max(a(x), a(y))");
                }
            }
        }
    }
    PropertyResult::Pass
}

fn p5(kl: &KlData) -> PropertyResult {
    let g = kl.algebra().group();
    for y in 0..kl.size() {
        for &(d, c) in kl.gammas(g.inverse(y), y) {
            if !kl.is_distinguished(d) {
                continue;
            }
            let nd = kl.n(d);
            if BigInt::from(c) != *nd || !(c == 1 || c == -1) {
                return PropertyResult::fail(vec![y, d], format!("gamma_{{y^-1,y,d}} = {c}, n_d = {nd}"));
            }
        }
    }
    PropertyResult::Pass
}

fn p6(kl: &KlData) -> PropertyResult {
    let g = kl.algebra().group();
    for &d in kl.distinguished() {
        if g.mult(d, d) != 0 {
            return PropertyResult::fail(vec![d], "d^2 != 1");
        }
    }
    PropertyResult::Pass
}

fn p7(kl: &KlData) -> PropertyResult {
    for x in 0..kl.size() {
        for y in 0..kl.size() {
            for &(z, c) in kl.gammas(x, y) {
                let rot = kl.gamma(y, z, x);
                if rot != c {
                    return PropertyResult::fail(
                        vec![x, y, z],
                        format!("gamma_{{x,y,z}} = {c}, gamma_{{y,z,x}} = {rot}"),
                    );
                }
            }
        }
    }
    PropertyResult::Pass
}

fn p8(kl: &KlData) -> PropertyResult {
    for x in 0..kl.size() {
        for y in 0..kl.size() {
            for &(z, _) in kl.gammas(x, y) {
                if kl.a(x) != kl.a(y) || kl.a(y) != kl.a(z) {
                    return PropertyResult::fail(vec![x, y, z], "gamma_{x,y,z} != 0 with unequal a-values");
                }
            }
        }
    }
    PropertyResult::Pass
}

/// `sum_u h_{x,u,y} gamma_{w,x',u^-1} = sum_u h_{x,w,u} gamma_{u,x',y^-1}` whenever `a(w) = a(y)`.
fn p15(kl: &KlData) -> PropertyResult {
    let g = kl.algebra().group();
    let n = kl.size();
    for x in 0..n {
        for y in 0..n {
            let yi = g.inverse(y);
            for w in (0..n).filter(|&w| kl.a(w) == kl.a(y)) {
                for xp in 0..n {
                    let mut lhs = LaurentPoly::zero();
                    for &(ui, c) in kl.gammas(w, xp) {
                        if let Some(h) = kl.h(x, g.inverse(ui), y) {
                            lhs.add_scaled(h, 0, &BigInt::from(c));
                        }
                    }
                    let mut rhs = LaurentPoly::zero();
                    for (u, h) in kl.products(x, w) {
                        let c = kl.gamma(*u, xp, yi);
                        if c != 0 {
                            rhs.add_scaled(h, 0, &BigInt::from(c));
                        }
                    }
                    if lhs != rhs {
                        return PropertyResult::fail(vec![x, xp, y, w], format!("{lhs} != {rhs}"));
                    }
                }
            }
        }
    }
    PropertyResult::Pass
}
