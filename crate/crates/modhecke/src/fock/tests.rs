use super::*;
use crate::laurent::{poly, LaurentPoly};

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn params(l: u32, u: &[i64], order: NodeOrder) -> FockParams {
    FockParams::new(l, u.to_vec(), order).unwrap()
}

fn table2() -> FockParams {
    params(2, &[0, 1], NodeOrder::Flotw)
}

fn set(v: &[&str]) -> Vec<Multipartition> {
    let mut out: Vec<Multipartition> = v.iter().map(|s| mp(s)).collect();
    out.sort();
    out
}

#[test]
fn parsing_and_display() {
    assert_eq!(mp("21|∅").to_string(), "((2,1),∅)");
    assert_eq!(mp("[[2,1],[]]"), mp("21|∅"));
    assert_eq!(serde_json::to_string(&mp("3|1")).unwrap(), "[[3],[1]]");
    assert_eq!(Multipartition::all(2, 3).len(), 10);
}

#[test]
fn residues() {
    let p = table2();
    assert_eq!(p.residue(&Node::new(1, 1, 2)), 1);
    let lam = mp("3|∅");
    let res: Vec<u32> = lam.nodes().iter().map(|n| residue(n, &p)).collect();
    assert_eq!(res, vec![0, 1, 0]);
    assert_eq!(p.residue(&Node::new(2, 1, 1)), 1);
    let q = params(3, &[-4], NodeOrder::Flotw);
    assert_eq!(q.residue(&Node::new(1, 1, 1)), 2);
}

#[test]
fn addable_removable() {
    let p = table2();
    let e = Multipartition::empty(2);
    assert_eq!(addable(&e, 0, &p), vec![Node::new(1, 1, 1)]);
    assert_eq!(addable(&e, 1, &p), vec![Node::new(1, 1, 2)]);
    assert_eq!(removable(&mp("1|∅"), 0, &p), vec![Node::new(1, 1, 1)]);
    for lam in Multipartition::all(2, 4) {
        for i in 0..2 {
            let n = addable(&lam, i, &p).len() as i64 - removable(&lam, i, &p).len() as i64;
            assert_eq!(ncount(&lam, i, &p), n);
        }
        let w: u32 = (0..2).map(|i| icount(&lam, i, &p)).sum();
        assert_eq!(w, lam.size());
    }
}

#[test]
fn node_orders() {
    let p = table2();
    let g = Node::new(1, 1, 2);
    let h = Node::new(1, 1, 1);
    assert!(!above(&g, &h, &p));
    assert!(above(&h, &g, &p));
    let q = params(2, &[0, 0], NodeOrder::Flotw);
    assert!(above(&Node::new(1, 1, 2), &Node::new(2, 2, 1), &q));
    let a = params(2, &[0, 1], NodeOrder::Ariki);
    assert!(!above(&h, &g, &a));
    assert!(above(&g, &h, &a));
    assert!(above(&Node::new(3, 1, 1), &Node::new(1, 4, 1), &a));
}

#[test]
fn quantum_basics() {
    let p = table2();
    let e = FockVector::basis(Multipartition::empty(2));
    assert_eq!(quantum_f(0, &e, &p), FockVector::basis(mp("1|∅")));
    for i in 0..2 {
        assert!(quantum_e(i, &e, &p).is_zero());
    }
    assert_eq!(classical_h(0, &e, &p), e);
}

fn all_upto(r: usize, n: u32) -> Vec<Multipartition> {
    (0..=n).flat_map(|k| Multipartition::all(r, k)).collect()
}

fn cartan(l: u32, i: u32, j: u32) -> i64 {
    if i == j {
        2
    } else if l == 2 {
        -2
    } else if (i + 1) % l == j || (j + 1) % l == i {
        -1
    } else {
        0
    }
}

type Op<'a> = Box<dyn Fn(&FockVector) -> FockVector + 'a>;

fn compose(ops: &[&Op], x: &FockVector) -> FockVector {
    ops.iter().rev().fold(x.clone(), |acc, f| f(&acc))
}

fn relation_suite(p: &FockParams, nmax: u32) {
    let l = p.l;
    let e: Vec<Op> = (0..l).map(|i| Box::new(move |x: &FockVector| quantum_e(i, x, p)) as Op).collect();
    let f: Vec<Op> = (0..l).map(|i| Box::new(move |x: &FockVector| quantum_f(i, x, p)) as Op).collect();
    let vv = poly(&[(1, 1), (-1, -1)]);
    for lam in all_upto(p.r(), nmax) {
        let x = FockVector::basis(lam.clone());
        for i in 0..l {
            for j in 0..l {
                // K_j E_i K_j^{-1} = v^{a_ji} E_i, same for F with the opposite sign
                let a = cartan(l, i, j);
                let lhs = quantum_k(j, &quantum_e(i, &quantum_k_inv(j, &x, p), p), p);
                assert_eq!(lhs, quantum_e(i, &x, p).scale(&LaurentPoly::monomial(a, 1)), "K E at {lam}");
                let lhs = quantum_k(j, &quantum_f(i, &quantum_k_inv(j, &x, p), p), p);
                assert_eq!(lhs, quantum_f(i, &x, p).scale(&LaurentPoly::monomial(-a, 1)), "K F at {lam}");
                // (v - v^-1)(E_i F_j - F_j E_i) = δ_ij (K_i - K_i^-1)
                let comm =
                    &compose(&[&e[i as usize], &f[j as usize]], &x) - &compose(&[&f[j as usize], &e[i as usize]], &x);
                let rhs = if i == j { &quantum_k(i, &x, p) - &quantum_k_inv(i, &x, p) } else { FockVector::zero() };
                assert_eq!(comm.scale(&vv), rhs, "[E_{i}, F_{j}] at {lam}");
                if i == j {
                    continue;
                }
                for ops in [&e, &f] {
                    let (oi, oj) = (&ops[i as usize], &ops[j as usize]);
                    let rel = if cartan(l, i, j) == 0 {
                        &compose(&[oi, oj], &x) - &compose(&[oj, oi], &x)
                    } else if l >= 3 {
                        let mut r = compose(&[oi, oi, oj], &x);
                        r.add_scaled(&compose(&[oi, oj, oi], &x), &poly(&[(1, -1), (-1, -1)]));
                        r.add_scaled(&compose(&[oj, oi, oi], &x), &LaurentPoly::one());
                        r
                    } else {
                        let three = poly(&[(2, 1), (0, 1), (-2, 1)]);
                        let mut r = compose(&[oi, oi, oi, oj], &x);
                        r.add_scaled(&compose(&[oi, oi, oj, oi], &x), &-&three);
                        r.add_scaled(&compose(&[oi, oj, oi, oi], &x), &three);
                        r.add_scaled(&compose(&[oj, oi, oi, oi], &x), &LaurentPoly::constant(-1));
                        r
                    };
                    assert!(rel.is_zero(), "Serre ({i},{j}) at {lam}: {rel}");
                }
            }
            // D E_i D^-1 = v^{δ_0i} E_i
            let d_inv = |y: &FockVector| {
                let mut out = FockVector::zero();
                for (m, c) in y.iter() {
                    out.add_term(m.clone(), c * &LaurentPoly::monomial(i64::from(icount(m, 0, p)), 1));
                }
                out
            };
            let lhs = quantum_d(&quantum_e(i, &d_inv(&x), p), p);
            let delta = if i == 0 { 1 } else { 0 };
            assert_eq!(lhs, quantum_e(i, &x, p).scale(&LaurentPoly::monomial(delta, 1)));
        }
    }
}

#[test]
fn commutator_table2() {
    relation_suite(&table2(), 3);
}

#[test]
fn quantum_relations() {
    for l in [2, 3] {
        for u in [vec![0], vec![0, 1]] {
            for order in [NodeOrder::Flotw, NodeOrder::Ariki] {
                relation_suite(&params(l, &u, order), 4);
            }
        }
    }
}

#[test]
fn classical_is_specialization() {
    for p in [table2(), params(3, &[0, 2], NodeOrder::Flotw), params(3, &[1], NodeOrder::Ariki)] {
        for lam in all_upto(p.r(), 4) {
            let x = FockVector::basis(lam.clone());
            for i in 0..p.l {
                assert_eq!(quantum_f(i, &x, &p).at_one(), classical_f(i, &x, &p));
                assert_eq!(quantum_e(i, &x, &p).at_one(), classical_e(i, &x, &p));
                let h = classical_h(i, &x, &p);
                assert_eq!(h.coeff(&lam), LaurentPoly::constant(ncount(&lam, i, &p)));
            }
            assert_eq!(quantum_d(&x, &p).at_one(), x);
            assert_eq!(classical_d(&x, &p).coeff(&lam), LaurentPoly::constant(-i64::from(icount(&lam, 0, &p))));
        }
    }
}

#[test]
fn classical_serre_l3() {
    let p = params(3, &[0], NodeOrder::Flotw);
    for lam in all_upto(1, 3) {
        let x = FockVector::basis(lam.clone());
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)] {
            let ei = |y: &FockVector| classical_e(i, y, &p);
            let ej = |y: &FockVector| classical_e(j, y, &p);
            let mut r = ei(&ei(&ej(&x)));
            r.add_scaled(&ei(&ej(&ei(&x))), &LaurentPoly::constant(-2));
            r.add_scaled(&ej(&ei(&ei(&x))), &LaurentPoly::one());
            assert!(r.is_zero(), "{lam} ({i},{j})");
        }
    }
}

#[test]
fn branching_sums() {
    let p = params(3, &[0, 1], NodeOrder::Flotw);
    for lam in all_upto(2, 4) {
        let x = FockVector::basis(lam.clone());
        let up = ind(&x, &p);
        let expected: Vec<Multipartition> = lam.addable().iter().map(|n| lam.add(n).unwrap()).collect();
        assert_eq!(up.len(), expected.len());
        for m in &expected {
            assert!(up.coeff(m).is_one());
        }
        let down = res(&x, &p);
        assert_eq!(down.len(), lam.removable().len());
    }
}

#[test]
fn table2_crystal() {
    let g = crystal(&table2(), 3).unwrap();
    assert_eq!(g.vertices.len(), 9);
    assert_eq!(g.edges.len(), 8);
    assert_eq!(g.levels[1], set(&["1|∅", "∅|1"]));
    assert_eq!(g.levels[2], set(&["2|∅", "∅|2"]));
    assert_eq!(g.levels[3], set(&["3|∅", "2|1", "1|2", "∅|3"]));
    let edge = |s: &str, t: &str, c: u32| CrystalEdge { source: mp(s), target: mp(t), color: c };
    for e in [
        edge("∅|∅", "1|∅", 0),
        edge("∅|∅", "∅|1", 1),
        edge("1|∅", "2|∅", 1),
        edge("∅|1", "∅|2", 0),
        edge("2|∅", "3|∅", 0),
        edge("2|∅", "2|1", 1),
        edge("∅|2", "1|2", 0),
        edge("∅|2", "∅|3", 1),
    ] {
        assert!(g.edges.contains(&e), "{e:?}");
    }
    assert_eq!(ftilde(&Multipartition::empty(2), 1, &table2()), Some(mp("∅|1")));
    assert!(g.to_dot().contains("label=\"((2),(1))\""));
}

#[test]
fn ariki_order_level3() {
    let p = params(2, &[0, 1], NodeOrder::Ariki);
    assert_eq!(uryu_set(&p, 3).unwrap(), set(&["3|∅", "21|∅", "1|2", "2|1"]));
}

#[test]
fn level_one_is_regular() {
    for e in [2u32, 3] {
        let p = params(e, &[0], NodeOrder::Flotw);
        let g = crystal(&p, 6).unwrap();
        for n in 0..=6u32 {
            let expected: Vec<Multipartition> = Partition::all(n)
                .into_iter()
                .filter(|x| x.is_e_regular(Some(e)))
                .map(|x| Multipartition::new(vec![x]))
                .collect();
            let mut expected = expected;
            expected.sort();
            assert_eq!(g.levels[n as usize], expected, "e={e} n={n}");
        }
    }
}

#[test]
fn good_node_oracle() {
    for p in [
        table2(),
        params(3, &[0, 1], NodeOrder::Flotw),
        params(2, &[0, 1], NodeOrder::Ariki),
        params(3, &[2], NodeOrder::Flotw),
    ] {
        for lam in all_upto(p.r(), 6) {
            for i in 0..p.l {
                assert_eq!(good_node(&lam, i, &p), good_node_by_definition(&lam, i, &p), "{lam} i={i}");
            }
        }
    }
}

#[test]
fn etilde_ftilde_inverse() {
    let p = table2();
    let g = crystal(&p, 4).unwrap();
    for v in &g.vertices {
        for i in 0..2 {
            if let Some(m) = etilde(v, i, &p) {
                assert_eq!(ftilde(&m, i, &p).as_ref(), Some(v));
            }
            if let Some(m) = ftilde(v, i, &p) {
                assert_eq!(etilde(&m, i, &p).as_ref(), Some(v));
            }
        }
    }
}

#[test]
fn flotw_membership() {
    let p = table2();
    assert!(!flotw_member(&mp("21|∅"), &p).unwrap());
    assert!(flotw_member(&mp("2|1"), &p).unwrap());
    assert!(flotw_member(&Multipartition::empty(2), &p).unwrap());
    assert_eq!(flotw_member(&mp("1|∅"), &params(2, &[1, 0], NodeOrder::Flotw)), Err(FockError::ParamsOutOfRange));
    for l in [2u32, 3] {
        for u1 in 0..l as i64 {
            for u2 in u1..l as i64 {
                let p = params(l, &[u1, u2], NodeOrder::Flotw);
                let g = crystal(&p, 6).unwrap();
                for n in 0..=6 {
                    let via_def: Vec<Multipartition> = Multipartition::all(2, n)
                        .into_iter()
                        .filter(|m| flotw_member(m, &p).unwrap())
                        .collect::<std::collections::BTreeSet<_>>()
                        .into_iter()
                        .collect();
                    assert_eq!(g.levels[n as usize], via_def, "l={l} u=({u1},{u2}) n={n}");
                }
            }
        }
    }
}

#[test]
fn separated_parameters_agree() {
    for l in [2u32, 3] {
        let n = 5usize;
        let ariki = params(l, &[0, 1], NodeOrder::Ariki);
        // same residues as (0,1), with u_1 - u_2 > n - 1
        let sep = params(l, &[l as i64 * 3, 1], NodeOrder::Flotw);
        assert!(sep.u[0] - sep.u[1] > n as i64 - 1);
        let a = crystal(&ariki, n).unwrap();
        let b = crystal(&sep, n).unwrap();
        assert_eq!(a.levels, b.levels);
        assert_eq!(a.edges, b.edges);
    }
}

#[test]
fn kleshchev_examples() {
    let p = table2();
    assert!(kleshchev_member(&mp("21|∅"), &p).unwrap());
    assert!(!kleshchev_member(&mp("∅|3"), &p).unwrap());
    assert!(kleshchev_member(&mp("3|∅"), &p).unwrap());
    assert!(kleshchev_member(&mp("3"), &p).is_err());
}

#[test]
fn level_cap() {
    assert!(matches!(crystal_with_cap(&table2(), 5, 4), Err(FockError::LevelCapExceeded { level: 5, cap: 4 })));
}
