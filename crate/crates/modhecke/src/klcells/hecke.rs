use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::KlError;
use crate::coxeter::{WeightFunction, WeylGroup};
use crate::laurent::LaurentPoly;

/// Element of the generic Hecke algebra in coordinates of the basis `T~_w = v^{-L(w)} T_w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    coeffs: Vec<LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(size: usize) -> Self {
        Self { coeffs: vec![LaurentPoly::zero(); size] }
    }

    /// The basis element `T~_w`.
    pub fn basis(size: usize, w: usize) -> Self {
        let mut h = Self::zero(size);
        h.coeffs[w] = LaurentPoly::one();
        h
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        Self { coeffs }
    }

    pub fn coeff(&self, w: usize) -> &LaurentPoly {
        &self.coeffs[w]
    }

    pub fn coeff_mut(&mut self, w: usize) -> &mut LaurentPoly {
        &mut self.coeffs[w]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(w, _)| w)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn scale(&self, f: &LaurentPoly) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    /// `self += f * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, f: &LaurentPoly) {
        for (mine, theirs) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !theirs.is_zero() {
                mine.add_product(theirs, f);
            }
        }
    }
}

impl AddAssign<&HeckeElement> for HeckeElement {
    fn add_assign(&mut self, rhs: &HeckeElement) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&HeckeElement> for HeckeElement {
    fn sub_assign(&mut self, rhs: &HeckeElement) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// The generic Iwahori-Hecke algebra of a finite Weyl group with a positive weight function.
pub struct HeckeAlgebra {
    group: WeylGroup,
    weights: WeightFunction,
    /// `v^{L(s)} - v^{-L(s)}` per generator.
    q: Vec<LaurentPoly>,
    bar_matrix: OnceLock<Vec<HeckeElement>>,
}

impl HeckeAlgebra {
    pub fn new(group: WeylGroup, weights: WeightFunction) -> Result<Self, KlError> {
        if weights.values.len() != group.rank() || !group.validate_weight(&weights) {
            return Err(KlError::InvalidWeight(weights.values));
        }
        if weights.values.contains(&0) {
            return Err(KlError::NonPositiveWeight(weights.values));
        }
        let q =
            weights.values.iter().map(|&l| LaurentPoly::from_terms([(i64::from(l), 1), (-i64::from(l), -1)])).collect();
        Ok(Self { group, weights, q, bar_matrix: OnceLock::new() })
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    pub fn weight(&self, s: usize) -> i64 {
        i64::from(self.weights.values[s])
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.size())
    }

    pub fn one(&self) -> HeckeElement {
        self.t(0)
    }

    /// `T~_w`.
    pub fn t(&self, w: usize) -> HeckeElement {
        HeckeElement::basis(self.size(), w)
    }

    /// `T~_s * h`.
    pub fn lmul_gen(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let g = &self.group;
        let mut out = self.zero();
        for w in h.support() {
            let sw = g.lmul_gen(s, w);
            let c = h.coeff(w);
            out.coeffs[sw] += c;
            if g.length(sw) < g.length(w) {
                out.coeffs[w].add_product(c, &self.q[s]);
            }
        }
        out
    }

    /// `h * T~_s`.
    pub fn rmul_gen(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let g = &self.group;
        let mut out = self.zero();
        for w in h.support() {
            let ws = g.rmul_gen(w, s);
            let c = h.coeff(w);
            out.coeffs[ws] += c;
            if g.length(ws) < g.length(w) {
                out.coeffs[w].add_product(c, &self.q[s]);
            }
        }
        out
    }

    /// `T~_u * h`.
    pub fn t_mul(&self, u: usize, h: &HeckeElement) -> HeckeElement {
        self.group.word(u).iter().rev().fold(h.clone(), |acc, &s| self.lmul_gen(s, &acc))
    }

    /// `T~_u * h` for every `u`, indexed by `u`.
    pub fn all_t_mul(&self, h: &HeckeElement) -> Vec<HeckeElement> {
        let g = &self.group;
        let mut out: Vec<HeckeElement> = Vec::with_capacity(self.size());
        out.push(h.clone());
        for u in 1..self.size() {
            let s = g.word(u)[0];
            let su = g.lmul_gen(s, u);
            let next = self.lmul_gen(s, &out[su]);
            out.push(next);
        }
        out
    }

    pub fn mul(&self, h1: &HeckeElement, h2: &HeckeElement) -> HeckeElement {
        let mut out = self.zero();
        for u in h1.support() {
            out.add_scaled(&self.t_mul(u, h2), h1.coeff(u));
        }
        out
    }

    /// Columns `bar(T~_w)`, built as `T~_s^{-1} bar(T~_{sw})` along normal forms.
    pub fn bar_matrix(&self) -> &[HeckeElement] {
        self.bar_matrix.get_or_init(|| {
            let g = &self.group;
            let mut cols: Vec<HeckeElement> = Vec::with_capacity(self.size());
            cols.push(self.one());
            for w in 1..self.size() {
                let s = g.word(w)[0];
                let prev = &cols[g.lmul_gen(s, w)];
                let mut next = self.lmul_gen(s, prev);
                next.add_scaled(prev, &-&self.q[s]);
                cols.push(next);
            }
            cols
        })
    }

    /// The ring involution with `v -> v^-1` and `T~_w -> T~_{w^-1}^{-1}`.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let cols = self.bar_matrix();
        let mut out = self.zero();
        for w in h.support() {
            out.add_scaled(&cols[w], &h.coeff(w).bar());
        }
        out
    }

    /// `sum a_w T~_w -> sum bar(a_w) (-1)^{l(w)} T~_w`.
    pub fn jmap(&self, h: &HeckeElement) -> HeckeElement {
        let coeffs = h
            .coeffs
            .iter()
            .enumerate()
            .map(|(w, c)| if self.group.length(w).is_multiple_of(2) { c.bar() } else { -c.bar() })
            .collect();
        HeckeElement { coeffs }
    }

    /// `T~_w -> (-1)^{l(w)} T~_{w^-1}^{-1}`, equal to `j` composed with bar.
    pub fn dagger(&self, h: &HeckeElement) -> HeckeElement {
        self.jmap(&self.bar(h))
    }

    /// The symmetrizing trace: coefficient of `T~_1`.
    pub fn tau(&self, h: &HeckeElement) -> LaurentPoly {
        h.coeff(0).clone()
    }

    /// Human-readable form such as `T~_s + v^-1·T~_1`, highest elements first.
    pub fn render(&self, h: &HeckeElement) -> String {
        let mut out = String::new();
        for w in h.support().rev() {
            let c = h.coeff(w);
            let name = format!("T~_{}", self.group.render(w));
            let (neg, body) = render_coeff(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match body {
                None => out.push_str(&name),
                Some(b) => {
                    let _ = write!(out, "{b}·{name}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Splits a coefficient into a sign and a printable magnitude (`None` for 1).
fn render_coeff(c: &LaurentPoly) -> (bool, Option<String>) {
    if c.num_terms() == 1 {
        let (e, k) = c.terms().next().expect("one term");
        let neg = k < &BigInt::from(0);
        let mag = if neg { -k } else { k.clone() };
        let body = LaurentPoly::monomial(e, mag);
        if body.is_one() {
            return (neg, None);
        }
        return (neg, Some(body.to_string()));
    }
    (false, Some(format!("({c})")))
}
