use num_bigint::BigInt;
use num_traits::One;

use super::partition::{default_m, symbol_of, Bipartition, Partition};
use super::{invariants_of, InvariantPair, SchurError};
use crate::laurent::LaurentPoly;

/// Running quotient of products of factors in `x = v^{2a}`, `y = v^{2b}`.
///
/// Factors `x^p - x^q` with `p != q` vanish identically when `a = 0`; there they
/// are recorded as `(p - q)(x - 1)` so that the `(x - 1)` parts cancel between
/// numerator and denominator and the quotient is the exact value at `a = 0`.
struct Quotient {
    a: i64,
    b: i64,
    num: LaurentPoly,
    den: LaurentPoly,
    num_c: BigInt,
    den_c: BigInt,
    /// Net power of `(x - 1)` left over in the numerator (only tracked when `a = 0`).
    pending: i64,
}

impl Quotient {
    fn new(a: u32, b: u32) -> Self {
        Self {
            a: i64::from(a),
            b: i64::from(b),
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
            num_c: BigInt::one(),
            den_c: BigInt::one(),
            pending: 0,
        }
    }

    /// `x^i y^j`
    fn mono(&self, i: i64, j: i64) -> LaurentPoly {
        LaurentPoly::monomial(2 * self.a * i + 2 * self.b * j, 1)
    }

    fn times(&mut self, f: LaurentPoly) {
        self.num = &self.num * &f;
    }

    fn divide(&mut self, f: LaurentPoly) {
        self.den = &self.den * &f;
    }

    /// Multiplies (or divides, if `inverse`) by `x^p - x^q`.
    fn vanishing(&mut self, p: i64, q: i64, inverse: bool) {
        if self.a == 0 {
            let c = BigInt::from(p - q);
            if inverse {
                self.den_c *= c;
                self.pending -= 1;
            } else {
                self.num_c *= c;
                self.pending += 1;
            }
        } else {
            let f = &self.mono(p, 0) - &self.mono(q, 0);
            if inverse {
                self.divide(f);
            } else {
                self.times(f);
            }
        }
    }

    fn finish(self) -> Result<LaurentPoly, SchurError> {
        if self.pending != 0 {
            return Err(SchurError::Diagnostic(format!("unbalanced vanishing factors ({})", self.pending)));
        }
        let num = self.num.scale(&self.num_c);
        let den = self.den.scale(&self.den_c);
        Ok(num.exact_div(&den)?)
    }
}

/// Schur element `c_{E^λ}` of the generic Hecke algebra of type `B_n` with
/// `L(t) = b`, `L(s_i) = a`, using the smallest legal symbol size.
pub fn schur_element_b(lambda: &Bipartition, a: u32, b: u32) -> Result<LaurentPoly, SchurError> {
    schur_element_b_with_m(lambda, a, b, default_m(lambda))
}

/// Same as [`schur_element_b`] with an explicit symbol size `m`.
pub fn schur_element_b_with_m(lambda: &Bipartition, a: u32, b: u32, m: usize) -> Result<LaurentPoly, SchurError> {
    let sym = symbol_of(lambda, m)?;
    let n = i64::from(lambda.size());
    let mi = m as i64;
    let top: Vec<i64> = sym.top.iter().map(|&x| i64::from(x)).collect();
    let bot: Vec<i64> = sym.bottom.iter().map(|&x| i64::from(x)).collect();
    let mut q = Quotient::new(a, b);

    // the y-power keeps the value independent of m
    let e = mi * (2 * mi + 1) * (mi - 2) / 3;
    q.times(q.mono(e, mi * (mi - 1) / 2));
    let xy = &q.mono(1, 0) + &q.mono(0, 1);
    q.times(xy.pow(m as u32));
    for _ in 0..n {
        q.vanishing(1, 0, true);
    }
    for &ai in &top {
        for &bj in &bot {
            let f = &q.mono(ai - 1, 1) + &q.mono(bj, 0);
            q.divide(f);
        }
    }
    for &ai in &top {
        for k in 1..=ai {
            q.vanishing(k, 0, false);
            let f = &q.mono(k - 1, 1) + &LaurentPoly::one();
            q.times(f);
        }
    }
    for (i, &ai) in top.iter().enumerate() {
        for &aj in &top[..i] {
            q.vanishing(ai, aj, true);
        }
    }
    for &bj in &bot {
        for k in 1..=bj {
            q.vanishing(k, 0, false);
            let f = &q.mono(k + 1, -1) + &LaurentPoly::one();
            q.times(f);
        }
    }
    for (j, &bj) in bot.iter().enumerate() {
        for &bk in &bot[..j] {
            q.vanishing(bj, bk, true);
        }
    }
    q.finish()
}

/// `(α, f)` read off the extremal term of [`schur_element_b`].
pub fn invariants_b(lambda: &Bipartition, a: u32, b: u32) -> Result<InvariantPair, SchurError> {
    invariants_of(&schur_element_b(lambda, a, b)?)
}

/// Closed form valid when `b > (n-1)a > 0`: `f = 1` and
/// `α = b|λ2| + a(n(λ1) + 2n(λ2) - n(λ2*))`.
pub fn invariants_asymptotic(lambda: &Bipartition, a: u32, b: u32) -> Result<InvariantPair, SchurError> {
    let n = lambda.size();
    if a == 0 || u64::from(b) <= u64::from(n.saturating_sub(1)) * u64::from(a) {
        return Err(SchurError::DomainError(format!("asymptotic case needs b > (n-1)a > 0, got n={n}, a={a}, b={b}")));
    }
    let (l1, l2) = (&lambda.first, &lambda.second);
    let shape = l1.nfun() as i64 + 2 * l2.nfun() as i64 - l2.conjugate().nfun() as i64;
    let alpha = i64::from(b) * i64::from(l2.size()) + i64::from(a) * shape;
    Ok(InvariantPair { alpha: alpha as u64, f: 1 })
}

/// Schur element of `E^ν` for the Hecke algebra of `S_n` with all parameters `a`:
/// `q^{-n(ν)} prod_h [h]_q` over hook lengths, `q = v^{2a}`.
pub fn schur_element_a(nu: &Partition, a: u32) -> Result<LaurentPoly, SchurError> {
    let a = i64::from(a);
    let mut out = LaurentPoly::monomial(-2 * a * nu.nfun() as i64, 1);
    for h in nu.hooks() {
        let qint = LaurentPoly::from_terms((0..i64::from(h)).map(|k| (2 * a * k, BigInt::one())));
        out = &out * &qint;
    }
    Ok(out)
}

/// Type `A` invariants: `α = n(ν)a`, `f = 1` for `a > 0`; at `a = 0`, `f = n!/dim`.
pub fn invariants_a(nu: &Partition, a: u32) -> Result<InvariantPair, SchurError> {
    invariants_of(&schur_element_a(nu, a)?)
}

/// `a = 0`: `α = |λ2| b`, with `f` from the Schur element.
pub fn invariants_azero(lambda: &Bipartition, b: u32) -> Result<InvariantPair, SchurError> {
    let inv = invariants_b(lambda, 0, b)?;
    let alpha = u64::from(lambda.second.size()) * u64::from(b);
    if inv.alpha != alpha {
        return Err(SchurError::Diagnostic(format!("a = 0 closed form gives {alpha}, Schur element {}", inv.alpha)));
    }
    Ok(inv)
}

/// Irreducible characters of `W(D_n)` as restrictions from `W(B_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DLabel {
    /// `[λ, μ]` with `λ != μ`; unordered.
    Pair(Partition, Partition),
    /// `[λ, +]` or `[λ, -]`.
    Split(Partition, bool),
}

impl DLabel {
    pub fn pair(l: Partition, m: Partition) -> Self {
        if l == m {
            DLabel::Split(l, true)
        } else if l > m {
            DLabel::Pair(l, m)
        } else {
            DLabel::Pair(m, l)
        }
    }

    /// All labels for `W(D_n)`.
    pub fn all(n: u32) -> Vec<DLabel> {
        let mut out = Vec::new();
        for bp in Bipartition::all(n) {
            if bp.first > bp.second {
                out.push(DLabel::Pair(bp.first, bp.second));
            } else if bp.first == bp.second {
                out.push(DLabel::Split(bp.first.clone(), true));
                out.push(DLabel::Split(bp.first, false));
            }
        }
        out
    }

    fn bipartition(&self) -> Bipartition {
        match self {
            DLabel::Pair(l, m) => Bipartition::new(l.clone(), m.clone()),
            DLabel::Split(l, _) => Bipartition::new(l.clone(), l.clone()),
        }
    }
}

impl std::fmt::Display for DLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DLabel::Pair(l, m) => write!(f, "[{l}, {m}]"),
            DLabel::Split(l, s) => write!(f, "[{l}, {}]", if *s { '+' } else { '-' }),
        }
    }
}

/// Type `D_n` invariants for `L = a · length`, inherited from type `B_n` at `b = 0`.
pub fn typed_invariants(label: &DLabel, a: u32) -> Result<InvariantPair, SchurError> {
    if a == 0 {
        return Err(SchurError::DomainError("type D invariants need a > 0".into()));
    }
    let inv = invariants_b(&label.bipartition(), a, 0)?;
    Ok(match label {
        DLabel::Pair(..) => inv,
        DLabel::Split(..) => InvariantPair { alpha: inv.alpha, f: 2 * inv.f },
    })
}
