//! Strategies and property bodies shared by `properties.rs` and the acceptance harness.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use modhecke::basicsets::{builtin_fixture, check_dims, verify_decomp, DecompMatrix, DecompRow, RowLabel, Verdict};
use modhecke::coxeter::{CoxeterType, WeightFunction, WeylGroup};
use modhecke::klcells::{kl_basis, HeckeAlgebra};
use modhecke::laurent::LaurentPoly;
use modhecke::schur::{Bipartition, Partition};

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

pub fn ring_axioms(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), TestCaseError> {
    let zero = LaurentPoly::zero();
    let one = LaurentPoly::one();
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &zero, a.clone());
    prop_assert_eq!(a * &one, a.clone());
    prop_assert_eq!(a + &(-a), zero.clone());
    prop_assert_eq!(a - b, a + &(-b));
    prop_assert_eq!((a * b).bar(), &a.bar() * &b.bar());
    prop_assert_eq!(a.bar().bar(), a.clone());
    if !b.is_zero() {
        prop_assert_eq!((a * b).exact_div(b).unwrap(), a.clone());
    }
    Ok(())
}

/// Groups small enough to recompute the KL basis per case, with their weight parameters.
pub const KL_GROUPS: [(CoxeterType, &[u32]); 5] = [
    (CoxeterType::A(2), &[1]),
    (CoxeterType::B(2), &[1, 3]),
    (CoxeterType::G2, &[1, 2]),
    (CoxeterType::A(3), &[1]),
    (CoxeterType::B(3), &[2, 1]),
];

pub fn algebra(k: usize) -> HeckeAlgebra {
    let (ct, params) = KL_GROUPS[k];
    let g = WeylGroup::build(ct).unwrap();
    HeckeAlgebra::new(g, WeightFunction::from_params(ct, params).unwrap()).unwrap()
}

/// Another linear extension of the Bruhat order: elements sorted by length, ties broken by `keys`.
pub fn shuffled_order(alg: &HeckeAlgebra, keys: &[u32]) -> Vec<usize> {
    let g = alg.group();
    let mut order: Vec<usize> = (0..g.size()).collect();
    order.sort_by_key(|&w| (g.length(w), keys[w % keys.len()], w));
    order
}

pub fn kl_uniqueness(alg: &HeckeAlgebra, keys: &[u32]) -> Result<(), TestCaseError> {
    let base = kl_basis(alg, None).unwrap();
    let other = kl_basis(alg, Some(&shuffled_order(alg, keys))).unwrap();
    prop_assert_eq!(base, other);
    Ok(())
}

/// Small random matrices with named rows and no zero column.
pub fn decomp_matrix() -> impl Strategy<Value = DecompMatrix> {
    (1usize..=6, 1usize..=4)
        .prop_flat_map(|(rows, cols)| {
            prop::collection::vec(
                (0u64..4, prop::collection::vec(prop_oneof![3 => Just(0u64), 3 => Just(1u64), 1 => Just(2u64)], cols)),
                rows,
            )
        })
        .prop_map(|rows| DecompMatrix {
            kind: "A".into(),
            n: 1,
            a: 1,
            b: 0,
            xi_order: 2,
            char: 0,
            rows: rows
                .into_iter()
                .enumerate()
                .map(|(k, (alpha, entries))| DecompRow {
                    label: RowLabel::Name(format!("r{k}")),
                    alpha: Some(alpha),
                    dim: None,
                    entries,
                })
                .collect(),
        })
        .prop_filter("no zero column", |d| d.validate().is_ok())
}

pub fn fixture_matrix() -> impl Strategy<Value = DecompMatrix> {
    prop::sample::select(modhecke::basicsets::FIXTURE_NAMES.to_vec()).prop_map(|n| builtin_fixture(n).unwrap())
}

/// Permutation of `0..n` from sort keys.
pub fn permutation(n: usize, keys: &[u32]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.sort_by_key(|&k| (keys[k % keys.len()], k));
    p
}

/// `out.rows[i] = d.rows[rp[i]]`, `out column j = d column cp[j]`.
pub fn permute(d: &DecompMatrix, rp: &[usize], cp: &[usize]) -> DecompMatrix {
    let mut out = d.clone();
    out.rows = rp
        .iter()
        .map(|&r| {
            let mut row = d.rows[r].clone();
            row.entries = cp.iter().map(|&c| d.rows[r].entries[c]).collect();
            row
        })
        .collect();
    out
}

fn selected(d: &DecompMatrix) -> Option<BTreeSet<(RowLabel, u64)>> {
    let r = verify_decomp(d).unwrap();
    match &r.verdict {
        Verdict::Exists { rows, .. } => {
            Some(rows.iter().enumerate().map(|(j, &k)| (d.rows[k].label.clone(), r.breve_alpha[j])).collect())
        }
        Verdict::Fails { .. } => None,
    }
}

pub fn verify_permutation_invariance(d: &DecompMatrix, rkeys: &[u32], ckeys: &[u32]) -> Result<(), TestCaseError> {
    let rp = permutation(d.rows.len(), rkeys);
    let cp = permutation(d.columns(), ckeys);
    let e = permute(d, &rp, &cp);
    prop_assert_eq!(selected(d), selected(&e));
    let (x, y) = (verify_decomp(d).unwrap(), verify_decomp(&e).unwrap());
    let permuted: Vec<u64> = cp.iter().map(|&c| x.breve_alpha[c]).collect();
    prop_assert_eq!(permuted, y.breve_alpha);
    Ok(())
}

pub fn partition_upto(n: u32) -> impl Strategy<Value = Partition> {
    (0..=n).prop_flat_map(|k| prop::sample::select(Partition::all(k)))
}

pub fn partition_pair(max: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (0..=max).prop_flat_map(|k| {
        let all = Partition::all(k);
        (prop::sample::select(all.clone()), prop::sample::select(all))
    })
}

pub fn dominance_monotone(x: &Partition, y: &Partition) -> Result<(), TestCaseError> {
    if x.dominance_leq(y) {
        prop_assert!(y.nfun() <= x.nfun(), "{x} <= {y} but n({y}) > n({x})");
        prop_assert_eq!(x.nfun() == y.nfun(), x == y);
        prop_assert!(y.conjugate().dominance_leq(&x.conjugate()));
    }
    Ok(())
}

/// Standard tableaux counted by removing corners, independent of the hook formula.
pub fn count_tableaux(x: &Partition) -> BigUint {
    if x.size() == 0 {
        return BigUint::from(1u32);
    }
    x.removable_rows().into_iter().map(|r| count_tableaux(&x.remove_box(r).unwrap())).sum()
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

pub fn dim_oracle(x: &Partition, y: &Partition) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.dim(), count_tableaux(x));
    let bp = Bipartition::new(x.clone(), y.clone());
    let expected = binomial(x.size() + y.size(), x.size()) * count_tableaux(x) * count_tableaux(y);
    prop_assert_eq!(bp.dim(), expected);
    Ok(())
}

/// Every supplied `dim` in the shipped matrices agrees with the hook length formula.
pub fn fixture_dims() -> Result<(), String> {
    for name in modhecke::basicsets::FIXTURE_NAMES {
        let d = builtin_fixture(name).unwrap();
        check_dims(&d).map_err(|k| format!("{name}: row {k} has the wrong dimension"))?;
        for r in &d.rows {
            if let (Some(given), RowLabel::Bipartition(b)) = (r.dim, &r.label) {
                let exact = binomial(b.size(), b.first.size()) * count_tableaux(&b.first) * count_tableaux(&b.second);
                if BigUint::from(given) != exact {
                    return Err(format!("{name}: {} has dim {given}, tableaux give {exact}", r.label));
                }
            }
        }
    }
    Ok(())
}
