use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{addable, icount, ncount, removable, FockParams, Multipartition};
use crate::laurent::LaurentPoly;

/// Finite linear combination of multipartitions with Laurent coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lambda: Multipartition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: Multipartition, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn coeff(&self, lambda: &Multipartition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Specialization `v = 1`.
    pub fn at_one(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), LaurentPoly::constant(c.eval_one()));
        }
        out
    }

    /// Applies a diagonal or off-diagonal operator term by term.
    fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&Multipartition) -> Vec<(Multipartition, LaurentPoly)>,
    {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (m, d) in f(k) {
                out.add_term(m, c * &d);
            }
        }
        out
    }
}

impl std::ops::Add<&FockVector> for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl std::ops::Sub<&FockVector> for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(k, c)| if c.is_one() { k.to_string() } else { format!("({c})·{k}") }).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn vpow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(e, 1)
}

/// `E_i λ = sum_μ v^{-N_i^a(λ/μ)} μ`, removing an `i`-node `γ`, where `N_i^a`
/// counts addable `i`-nodes of `μ` above `γ` minus removable `i`-nodes of `λ` above `γ`.
pub fn quantum_e(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| {
        let rem = removable(lambda, i, params);
        rem.iter()
            .map(|g| {
                let mu = lambda.remove(g).expect("removable node");
                let a = addable(&mu, i, params).iter().filter(|h| params.above(h, g)).count() as i64;
                let r = rem.iter().filter(|h| params.above(h, g)).count() as i64;
                (mu, vpow(-(a - r)))
            })
            .collect()
    })
}

/// `F_i λ = sum_μ v^{N_i^b(μ/λ)} μ`, adding an `i`-node `γ`, where `N_i^b`
/// counts addable `i`-nodes of `λ` below `γ` minus removable `i`-nodes of `μ` below `γ`.
pub fn quantum_f(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| {
        let add = addable(lambda, i, params);
        add.iter()
            .map(|g| {
                let mu = lambda.add(g).expect("addable node");
                let a = add.iter().filter(|h| params.above(g, h)).count() as i64;
                let r = removable(&mu, i, params).iter().filter(|h| params.above(g, h)).count() as i64;
                (mu, vpow(a - r))
            })
            .collect()
    })
}

/// `K_i λ = v^{N_i(λ)} λ`.
pub fn quantum_k(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| vec![(lambda.clone(), vpow(ncount(lambda, i, params)))])
}

pub fn quantum_k_inv(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| vec![(lambda.clone(), vpow(-ncount(lambda, i, params)))])
}

/// `D λ = v^{-W_0(λ)} λ`.
pub fn quantum_d(x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| vec![(lambda.clone(), vpow(-i64::from(icount(lambda, 0, params))))])
}

/// `e_i λ`: sum over removals of an `i`-node.
pub fn classical_e(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| {
        removable(lambda, i, params)
            .iter()
            .map(|g| (lambda.remove(g).expect("removable node"), LaurentPoly::one()))
            .collect()
    })
}

/// `f_i λ`: sum over additions of an `i`-node.
pub fn classical_f(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| {
        addable(lambda, i, params).iter().map(|g| (lambda.add(g).expect("addable node"), LaurentPoly::one())).collect()
    })
}

/// `h_i λ = N_i(λ) λ`.
pub fn classical_h(i: u32, x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| vec![(lambda.clone(), LaurentPoly::constant(BigInt::from(ncount(lambda, i, params))))])
}

/// `d λ = -W_0(λ) λ`.
pub fn classical_d(x: &FockVector, params: &FockParams) -> FockVector {
    x.map(|lambda| vec![(lambda.clone(), LaurentPoly::constant(-i64::from(icount(lambda, 0, params))))])
}

/// `ind = sum_i f_i`.
pub fn ind(x: &FockVector, params: &FockParams) -> FockVector {
    let mut out = FockVector::zero();
    for i in 0..params.l {
        out.add_scaled(&classical_f(i, x, params), &LaurentPoly::one());
    }
    out
}

/// `res = sum_i e_i`.
pub fn res(x: &FockVector, params: &FockParams) -> FockVector {
    let mut out = FockVector::zero();
    for i in 0..params.l {
        out.add_scaled(&classical_e(i, x, params), &LaurentPoly::one());
    }
    out
}
