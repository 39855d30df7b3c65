use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::basis::KlData;
use super::hecke::HeckeElement;
use super::props::{check_all, PropertyResult};
use super::KlError;
use crate::laurent::LaurentPoly;

/// Element of `J_A = A ⊗ J` in the basis `t_w`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JElement {
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl JElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn t(w: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &LaurentPoly::one());
        e
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&mut self, other: &JElement, f: &LaurentPoly) {
        for (w, c) in &other.coeffs {
            self.add_term(*w, &(c * f));
        }
    }

    pub fn coeff(&self, w: usize) -> LaurentPoly {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Lusztig's ring `J` with the homomorphism `phi: H -> J_A`.
/// Construction requires P2-P8 and P15' to hold.
pub struct JRing<'a> {
    kl: &'a KlData,
    nhat: Vec<i64>,
}

impl<'a> JRing<'a> {
    pub fn new(kl: &'a KlData) -> Result<Self, KlError> {
        for (p, res) in check_all(kl) {
            if let PropertyResult::Fail { witness, .. } = res {
                return Err(KlError::PropertyFailure { property: p.to_string(), witness });
            }
        }
        let nhat = (0..kl.size()).map(|z| kl.nhat(z)).collect::<Result<_, _>>()?;
        Ok(Self { kl, nhat })
    }

    pub fn kl(&self) -> &KlData {
        self.kl
    }

    pub fn nhat(&self, z: usize) -> i64 {
        self.nhat[z]
    }

    /// `t_x t_y = sum_z gamma_{x,y,z} t_{z^-1}`, extended bilinearly.
    pub fn mul(&self, a: &JElement, b: &JElement) -> JElement {
        let g = self.kl.algebra().group();
        let mut out = JElement::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let cxy = cx * cy;
                for &(z, gam) in self.kl.gammas(x, y) {
                    out.add_term(g.inverse(z), &cxy.scale(&BigInt::from(gam)));
                }
            }
        }
        out
    }

    pub fn unit(&self) -> JElement {
        let mut e = JElement::zero();
        for &d in self.kl.distinguished() {
            e.add_term(d, &LaurentPoly::constant(self.kl.n(d).clone()));
        }
        e
    }

    /// Distinct values of the a-function, ascending.
    pub fn a_values(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.kl.afn().to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `t_a = sum_{d in D, a(d) = a} n_d t_d`.
    pub fn ta(&self, a: u32) -> JElement {
        let mut e = JElement::zero();
        for &d in self.kl.distinguished() {
            if self.kl.a(d) == a {
                e.add_term(d, &LaurentPoly::constant(self.kl.n(d).clone()));
            }
        }
        e
    }

    /// The trace `mu(t_z) = n_z` for `z` distinguished, `0` otherwise.
    pub fn trace(&self, e: &JElement) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (z, c) in e.iter() {
            if self.kl.is_distinguished(z) {
                out.add_scaled(c, 0, self.kl.n(z));
            }
        }
        out
    }

    /// `phi(c_w^dagger)`.
    pub fn phi_cdagger(&self, w: usize) -> JElement {
        let mut e = JElement::zero();
        for &d in self.kl.distinguished() {
            for (z, h) in self.kl.products(w, d) {
                if self.kl.a(*z) == self.kl.a(d) {
                    e.add_term(*z, &h.scale(&BigInt::from(self.nhat[*z])));
                }
            }
        }
        e
    }

    pub fn phi(&self, h: &HeckeElement) -> JElement {
        let coords = self.kl.to_cdagger_coords(h);
        let mut e = JElement::zero();
        for (w, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                e.add(&self.phi_cdagger(w), c);
            }
        }
        e
    }

    /// `B[x][y]`, the coefficient of `t_x` in `phi(T~_y)`.
    pub fn phi_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.kl.size();
        let alg = self.kl.algebra();
        let cols: Vec<JElement> = (0..n).map(|y| self.phi(&alg.t(y))).collect();
        (0..n).map(|x| (0..n).map(|y| cols[y].coeff(x)).collect()).collect()
    }

    /// `t_x ⋆ [c_w^dagger] = sum_z gamma_{x,w,z^-1} nhat_w nhat_z [c_z^dagger]`.
    pub fn star(&self, x: usize, w: usize) -> Vec<(usize, i64)> {
        let g = self.kl.algebra().group();
        let mut out: Vec<(usize, i64)> = self
            .kl
            .gammas(x, w)
            .iter()
            .map(|&(zi, gam)| {
                let z = g.inverse(zi);
                (z, gam * self.nhat[w] * self.nhat[z])
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Exhaustive `(t_x t_y) t_z = t_x (t_y t_z)`.
    pub fn check_associativity(&self) -> PropertyResult {
        let n = self.kl.size();
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(&JElement::t(x), &JElement::t(y));
                for z in 0..n {
                    let left = self.mul(&xy, &JElement::t(z));
                    let right = self.mul(&JElement::t(x), &self.mul(&JElement::t(y), &JElement::t(z)));
                    if left != right {
                        return PropertyResult::Fail { witness: vec![x, y, z], detail: "not associative".into() };
                    }
                }
            }
        }
        PropertyResult::Pass
    }

    /// Checks `c_x^dagger . [c_w^dagger] = phi(c_x^dagger) ⋆ [c_w^dagger]` in `H^{a(w)}`
    /// for all `x, w`, using `c_x^dagger c_w^dagger = sum_z h_{x,w,z} c_z^dagger`.
    pub fn check_bimodule(&self) -> PropertyResult {
        let n = self.kl.size();
        for x in 0..n {
            let phix = self.phi_cdagger(x);
            for w in 0..n {
                let a = self.kl.a(w);
                let mut lhs: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
                for (z, h) in self.kl.products(x, w) {
                    if self.kl.a(*z) == a {
                        *lhs.entry(*z).or_default() += h;
                    }
                }
                let mut rhs: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
                for (zp, c) in phix.iter() {
                    for (z, k) in self.star(zp, w) {
                        rhs.entry(z).or_default().add_scaled(c, 0, &BigInt::from(k));
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    return PropertyResult::Fail { witness: vec![x, w], detail: "bimodule identity fails".into() };
                }
            }
        }
        PropertyResult::Pass
    }
}

/// Determinant by fraction-free elimination with exact Laurent division.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly, KlError> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
