use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::hecke::{HeckeAlgebra, HeckeElement};
use super::KlError;
use crate::laurent::LaurentPoly;
use crate::par;

/// Largest group for which structure constants are computed without `force`.
pub const STRUCTURE_CAP: usize = 400;

/// Kazhdan-Lusztig basis `c_w` for every `w`.
///
/// `order` is a linear extension of the Bruhat order listing every element once;
/// `None` uses the enumeration order. For each `w` the coefficients `p_{z,w}` are
/// found for `z` in decreasing position, as the negative-degree part of
/// `sum_{z < y <= w} r_{z,y} bar(p_{y,w})` where `bar(T~_y) = sum_z r_{z,y} T~_z`.
pub fn kl_basis(alg: &HeckeAlgebra, order: Option<&[usize]>) -> Result<Vec<HeckeElement>, KlError> {
    let g = alg.group();
    let n = g.size();
    let pos: Vec<usize> = match order {
        None => (0..n).collect(),
        Some(ord) => {
            let mut pos = vec![usize::MAX; n];
            if ord.len() != n {
                return Err(KlError::InvalidLinearization);
            }
            for (k, &w) in ord.iter().enumerate() {
                if w >= n || pos[w] != usize::MAX {
                    return Err(KlError::InvalidLinearization);
                }
                pos[w] = k;
            }
            for w in 0..n {
                if g.bruhat_below(w).any(|y| pos[y] > pos[w]) {
                    return Err(KlError::InvalidLinearization);
                }
            }
            pos
        }
    };
    let r = alg.bar_matrix();
    par::map_range(n, |w| {
        let mut below: Vec<usize> = g.bruhat_below(w).filter(|&z| z != w).collect();
        below.sort_by_key(|&z| std::cmp::Reverse(pos[z]));
        let mut c = alg.t(w);
        let mut done: Vec<(usize, LaurentPoly)> = vec![(w, LaurentPoly::one())];
        for z in below {
            let mut defect = LaurentPoly::zero();
            for (y, barp) in &done {
                let rzy = r[*y].coeff(z);
                if !rzy.is_zero() {
                    defect.add_product(rzy, barp);
                }
            }
            let p = defect.below(0);
            let check = &p - &p.bar();
            if check != defect {
                return Err(KlError::Diagnostic(format!("defect at ({z}, {w}) is not bar-antisymmetric: {defect}")));
            }
            if !p.is_zero() {
                done.push((z, p.bar()));
                *c.coeff_mut(z) = p;
            }
        }
        Ok(c)
    })
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, Default)]
pub struct KlOptions {
    /// Allow structure constants beyond [`STRUCTURE_CAP`].
    pub force: bool,
    /// Bruhat linearization passed to [`kl_basis`].
    pub order: Option<Vec<usize>>,
}

/// KL basis, structure constants `h_{x,y,z}` and everything derived from them.
pub struct KlData {
    alg: HeckeAlgebra,
    cbasis: Vec<HeckeElement>,
    /// `(x, y) -> [(z, h_{x,y,z})]`, sorted by `z`, at `x * n + y`.
    hconst: Vec<Vec<(usize, LaurentPoly)>>,
    afn: Vec<u32>,
    /// `(x, y) -> [(z, gamma_{x,y,z})]`, sorted by `z`, nonzero only.
    gamma: Vec<Vec<(usize, i64)>>,
    delta: Vec<i64>,
    nz: Vec<BigInt>,
    dinv: Vec<usize>,
}

impl KlData {
    pub fn compute(alg: HeckeAlgebra) -> Result<Self, KlError> {
        Self::compute_with(alg, &KlOptions::default())
    }

    pub fn compute_with(alg: HeckeAlgebra, opts: &KlOptions) -> Result<Self, KlError> {
        let n = alg.size();
        if n > STRUCTURE_CAP && !opts.force {
            return Err(KlError::GroupTooLarge { size: n, cap: STRUCTURE_CAP });
        }
        let cbasis = kl_basis(&alg, opts.order.as_deref())?;
        let hconst = structure_constants(&alg, &cbasis)?;
        let g = alg.group();

        let mut afn = vec![0u32; n];
        for list in &hconst {
            for (z, h) in list {
                if let Some(m) = h.mindeg() {
                    if m < 0 {
                        afn[*z] = afn[*z].max((-m) as u32);
                    }
                }
            }
        }

        let mut gamma: Vec<Vec<(usize, i64)>> = Vec::with_capacity(n * n);
        for list in &hconst {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for (zi, h) in list {
                let z = g.inverse(*zi);
                let c = h.coeff(-i64::from(afn[z]));
                if !c.is_zero() {
                    let c = c.to_i64().ok_or_else(|| KlError::Diagnostic("gamma overflows i64".into()))?;
                    row.push((z, c));
                }
            }
            row.sort_unstable();
            gamma.push(row);
        }

        let mut delta = Vec::with_capacity(n);
        let mut nz = Vec::with_capacity(n);
        for (z, c) in cbasis.iter().enumerate() {
            let tau = alg.tau(c);
            let ext = tau.extremal().map_err(|_| KlError::Diagnostic(format!("tau(c_{}) vanishes", g.render(z))))?;
            delta.push(-ext.maxdeg);
            nz.push(ext.maxcoeff);
        }
        let dinv = (0..n).filter(|&z| i64::from(afn[z]) == delta[z]).collect();

        Ok(Self { alg, cbasis, hconst, afn, gamma, delta, nz, dinv })
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.alg
    }

    pub fn size(&self) -> usize {
        self.alg.size()
    }

    pub fn c(&self, w: usize) -> &HeckeElement {
        &self.cbasis[w]
    }

    pub fn cbasis(&self) -> &[HeckeElement] {
        &self.cbasis
    }

    /// `p_{y,w}`, the coefficient of `T~_y` in `c_w`.
    pub fn p(&self, y: usize, w: usize) -> &LaurentPoly {
        self.cbasis[w].coeff(y)
    }

    /// Nonzero `h_{x,y,z}` as `(z, h)` pairs.
    pub fn products(&self, x: usize, y: usize) -> &[(usize, LaurentPoly)] {
        &self.hconst[x * self.size() + y]
    }

    pub fn h(&self, x: usize, y: usize, z: usize) -> Option<&LaurentPoly> {
        let list = self.products(x, y);
        list.binary_search_by_key(&z, |(k, _)| *k).ok().map(|i| &list[i].1)
    }

    pub fn a(&self, z: usize) -> u32 {
        self.afn[z]
    }

    pub fn afn(&self) -> &[u32] {
        &self.afn
    }

    /// Nonzero `gamma_{x,y,z}` as `(z, gamma)` pairs.
    pub fn gammas(&self, x: usize, y: usize) -> &[(usize, i64)] {
        &self.gamma[x * self.size() + y]
    }

    pub fn gamma(&self, x: usize, y: usize, z: usize) -> i64 {
        let list = self.gammas(x, y);
        list.binary_search_by_key(&z, |(k, _)| *k).map(|i| list[i].1).unwrap_or(0)
    }

    pub fn delta(&self, z: usize) -> i64 {
        self.delta[z]
    }

    pub fn n(&self, z: usize) -> &BigInt {
        &self.nz[z]
    }

    /// The distinguished involutions, ascending.
    pub fn distinguished(&self) -> &[usize] {
        &self.dinv
    }

    pub fn is_distinguished(&self, z: usize) -> bool {
        self.dinv.binary_search(&z).is_ok()
    }

    /// `n_d` for the unique distinguished `d` with `gamma_{z,z^-1,d} != 0`.
    pub fn nhat(&self, z: usize) -> Result<i64, KlError> {
        let zi = self.alg.group().inverse(z);
        let ds: Vec<usize> =
            self.gammas(z, zi).iter().filter(|(d, _)| self.is_distinguished(*d)).map(|(d, _)| *d).collect();
        match ds.as_slice() {
            [d] => self.nz[*d].to_i64().ok_or_else(|| KlError::Diagnostic("n_d overflows i64".into())),
            _ => {
                Err(KlError::PropertyFailure { property: "P3".into(), witness: std::iter::once(z).chain(ds).collect() })
            }
        }
    }

    /// `c_w^dagger = j(c_w)`.
    pub fn cdagger(&self, w: usize) -> HeckeElement {
        self.alg.jmap(&self.cbasis[w])
    }

    /// Coordinates of `h` in the `c` basis.
    pub fn to_c_coords(&self, h: &HeckeElement) -> Vec<LaurentPoly> {
        peel(h, |w| std::borrow::Cow::Borrowed(&self.cbasis[w]), |_| false)
    }

    /// Coordinates of `h` in the `c^dagger` basis.
    pub fn to_cdagger_coords(&self, h: &HeckeElement) -> Vec<LaurentPoly> {
        let g = self.alg.group();
        peel(h, |w| std::borrow::Cow::Owned(self.cdagger(w)), |w| g.length(w) % 2 == 1)
    }
}

/// Triangular change of basis from the top: `basis(w)` has leading coefficient
/// `-1` at `T~_w` when `negative(w)`, otherwise `1`, and is supported on indices `<= w`.
fn peel<'a, F, N>(h: &HeckeElement, basis: F, negative: N) -> Vec<LaurentPoly>
where
    F: Fn(usize) -> std::borrow::Cow<'a, HeckeElement>,
    N: Fn(usize) -> bool,
{
    let mut rem = h.clone();
    let mut out = vec![LaurentPoly::zero(); h.len()];
    for w in (0..h.len()).rev() {
        if rem.coeff(w).is_zero() {
            continue;
        }
        let f = if negative(w) { -rem.coeff(w) } else { rem.coeff(w).clone() };
        rem.add_scaled(&basis(w), &-&f);
        out[w] = f;
    }
    out
}

fn structure_constants(alg: &HeckeAlgebra, cbasis: &[HeckeElement]) -> Result<Vec<Vec<(usize, LaurentPoly)>>, KlError> {
    let n = alg.size();
    // columns[y][x] = c_x c_y expanded in the c basis
    let columns: Vec<Vec<Vec<(usize, LaurentPoly)>>> = par::map_range(n, |y| {
        let tu = alg.all_t_mul(&cbasis[y]);
        (0..n)
            .map(|x| {
                let mut prod = alg.zero();
                for u in cbasis[x].support() {
                    prod.add_scaled(&tu[u], cbasis[x].coeff(u));
                }
                let coords = peel(&prod, |w| std::borrow::Cow::Borrowed(&cbasis[w]), |_| false);
                coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect()
    });
    let mut table = vec![Vec::new(); n * n];
    for (y, col) in columns.into_iter().enumerate() {
        for (x, list) in col.into_iter().enumerate() {
            table[x * n + y] = list;
        }
    }
    for list in &table {
        for (_, h) in list {
            if h.bar() != *h {
                return Err(KlError::Diagnostic(format!("structure constant {h} is not bar-invariant")));
            }
        }
    }
    Ok(table)
}
