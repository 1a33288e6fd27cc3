use proptest::prelude::*;

use super::*;
use crate::exactpoly::Substitution;
use crate::presgen::{build_vartable, phi_images, sl2_relation_closed};
use crate::slnalg::{c_lambda, det_polynomial, fundamental_weight, matrix_table, matrix_var_id, IndexSeq};

fn pres_var(table: &Arc<VarTable>, sign: Sign, n: usize, e: &[usize]) -> Polynomial {
    let desc = VarDesc::Pres(PresVar::new(sign, IndexSeq::new(n, e.to_vec()).unwrap()));
    Polynomial::var(table, table.id_of(&desc).unwrap())
}

/// Every traceless matrix of the elementary basis together with a dense one.
fn sample_elements(n: usize) -> Vec<LieElt> {
    let mut v = dual_bases(n).unwrap().basis;
    let dense = (1..=n).flat_map(|a| (1..=n).map(move |b| ((a, b), int((a * 3 + b * 5) as i64 % 7 - 3))));
    let mut entries: Vec<_> = dense.collect();
    let tr: Rational = entries.iter().filter(|((a, b), _)| a == b).map(|(_, c)| c.clone()).sum();
    entries.push(((n, n), -tr));
    v.push(LieElt::from_entries(n, entries).unwrap());
    v
}

#[test]
fn elementary_actions() {
    let t = matrix_table(2);
    let e12 = LieElt::elementary(2, 1, 2).unwrap();
    let x11 = Polynomial::var(&t, matrix_var_id(2, 1, 1));
    assert_eq!(act_matrix(&e12, &x11).unwrap(), -&Polynomial::var(&t, matrix_var_id(2, 2, 1)));

    let p2 = build_vartable(2).unwrap();
    assert_eq!(act_pres(&e12, &pres_var(&p2, Sign::Plus, 2, &[1])).unwrap(), -&pres_var(&p2, Sign::Plus, 2, &[2]));

    let p3 = build_vartable(3).unwrap();
    let e12_3 = LieElt::elementary(3, 1, 2).unwrap();
    assert!(act_pres(&e12_3, &pres_var(&p3, Sign::Plus, 3, &[1, 2])).unwrap().is_zero());
    // Replacing row 1 by 3 in x+_12 gives x+_32 = -x+_23.
    let e13 = LieElt::elementary(3, 1, 3).unwrap();
    assert_eq!(act_pres(&e13, &pres_var(&p3, Sign::Plus, 3, &[1, 2])).unwrap(), pres_var(&p3, Sign::Plus, 3, &[2, 3]));
}

#[test]
fn trace_is_enforced() {
    assert_eq!(LieElt::from_entries(2, [((1, 1), int(1))]), Err(Error::NotTraceless));
    assert!(LieElt::elementary(2, 1, 3).is_err());
    assert!(LieElt::diagonal_difference(3, 1, 3).is_ok());
}

#[test]
fn det_is_killed() {
    for n in 2..=4 {
        let det = det_polynomial(n);
        for x in sample_elements(n) {
            assert!(act_matrix(&x, &det).unwrap().is_zero(), "n={n}");
        }
        let dm1 = &det - &Polynomial::one(det.table());
        assert!(is_invariant(n, &dm1, Space::MatrixVars).unwrap());
    }
}

#[test]
fn dual_bases_pair_to_delta() {
    let pair = dual_bases(2).unwrap();
    let e12 = LieElt::elementary(2, 1, 2).unwrap();
    let e21_4 = LieElt::elementary(2, 2, 1).unwrap().scale(&rat(1, 4));
    assert_eq!(e12.killing(&e21_4), int(1));
    for n in 2..=4 {
        let pair = dual_bases(n).unwrap();
        assert_eq!(pair.len(), n * n - 1);
        for (i, b) in pair.basis.iter().enumerate() {
            for (j, d) in pair.dual.iter().enumerate() {
                assert_eq!(b.killing(d), int(i64::from(i == j)), "n={n} i={i} j={j}");
            }
        }
    }
    assert!(!pair.is_empty());
}

fn alternative_basis(n: usize) -> DualBasisPair {
    // Scaled off-diagonal elements and the Cartan basis e_aa - e_nn.
    let mut basis = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                basis.push(LieElt::elementary(n, a, b).unwrap().scale(&int((a + 2 * b) as i64)));
            }
        }
    }
    for a in 1..n {
        basis.push(LieElt::diagonal_difference(n, a, n).unwrap());
    }
    // Mix two elements so the basis is not a rescaling of the standard one.
    let mixed = basis[0].add(&basis[1]);
    basis[0] = mixed;
    DualBasisPair::from_basis(n, basis).unwrap()
}

#[test]
fn casimir_eigenvalues() {
    for (n, d, c) in [(2, 1, rat(3, 4)), (3, 1, rat(8, 9)), (3, 2, rat(8, 9))] {
        let s = sl2_relation_closed(n, d).unwrap();
        let split = LegSplit::by_sign(s.table());
        let delta = casimir_delta(n, &s, &split).unwrap();
        assert_eq!(delta, s.scale(&-c.clone()), "n={n} d={d}");
        assert_eq!(c_lambda(n, &fundamental_weight(n, d).unwrap()).unwrap(), c);
    }
    for n in 2..=4 {
        for d in 1..n {
            let s = sl2_relation_closed(n, d).unwrap();
            let c = c_lambda(n, &fundamental_weight(n, d).unwrap()).unwrap();
            let delta = casimir_delta(n, &s, &LegSplit::by_sign(s.table())).unwrap();
            assert_eq!(delta, s.scale(&-c));
        }
    }
}

#[test]
fn casimir_edge_cases() {
    let t = build_vartable(2).unwrap();
    let split = LegSplit::by_sign(&t);
    assert!(casimir_delta(2, &Polynomial::constant(&t, int(5)), &split).unwrap().is_zero());
    let mixed = &pres_var(&t, Sign::Plus, 2, &[1]) + &Polynomial::one(&t);
    assert_eq!(casimir_delta(2, &mixed, &split), Err(Error::NotBihomogeneous));
}

#[test]
fn casimir_is_basis_independent() {
    for n in 2..=3 {
        let t = build_vartable(n).unwrap();
        let split = LegSplit::by_sign(&t);
        let p = &(&pres_var(&t, Sign::Plus, n, &[1]) * &pres_var(&t, Sign::Minus, n, &[2]))
            + &(&pres_var(&t, Sign::Plus, n, &[2]) * &pres_var(&t, Sign::Minus, n, &[1])).scale(&rat(2, 3));
        let a = casimir_delta_with(&dual_bases(n).unwrap(), &p, &split).unwrap();
        let b = casimir_delta_with(&alternative_basis(n), &p, &split).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
        let qa = casimir_quadratic(&dual_bases(n).unwrap(), &p).unwrap();
        let qb = casimir_quadratic(&alternative_basis(n), &p).unwrap();
        assert_eq!(qa, qb);
    }
}

#[test]
fn casimir_quadratic_matches_split_on_mixed_monomials() {
    // For a product of one plus and one minus generator the same-algebra
    // operator coincides with the leg-split operator.
    let t = build_vartable(3).unwrap();
    let s = sl2_relation_closed(3, 1).unwrap();
    let bases = dual_bases(3).unwrap();
    assert_eq!(casimir_quadratic(&bases, &s).unwrap(), casimir_delta_with(&bases, &s, &LegSplit::by_sign(&t)).unwrap());
}

#[test]
fn invariance() {
    for n in 2..=4 {
        for d in 1..n {
            let s = sl2_relation_closed(n, d).unwrap();
            assert!(is_invariant(n, &s, Space::PresVars).unwrap());
        }
    }
    let t = build_vartable(2).unwrap();
    assert!(!is_invariant(2, &pres_var(&t, Sign::Plus, 2, &[1]), Space::PresVars).unwrap());
    assert_eq!(is_invariant(2, &pres_var(&t, Sign::Plus, 2, &[1]), Space::MatrixVars), Err(Error::VarTableMismatch));
}

#[test]
fn phi_equivariance_on_generators() {
    for n in 2..=4 {
        let table = build_vartable(n).unwrap();
        let phi = Substitution::from_images(&matrix_table(n), phi_images(n).unwrap().into_iter().enumerate()).unwrap();
        for x in chevalley_generators(n).into_iter().chain(sample_elements(n)) {
            for v in 0..table.len() {
                let p = Polynomial::var(&table, v);
                let lhs = act_pres(&x, &p).unwrap().substitute(&phi).unwrap();
                let rhs = act_matrix(&x, &p.substitute(&phi).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "n={n} var={}", table.name(v));
            }
        }
    }
}

fn small_poly(table: &Arc<VarTable>, spec: &[(i64, Vec<usize>)]) -> Polynomial {
    let mut p = Polynomial::zero(table);
    for (c, vars) in spec {
        let mut term = Polynomial::constant(table, int(*c));
        for &v in vars {
            term = &term * &Polynomial::var(table, v % table.len());
        }
        p = &p + &term;
    }
    p
}

fn poly_strategy() -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3i64..4, prop::collection::vec(0usize..64, 0..3)), 0..4)
}

proptest! {
    #[test]
    fn leibniz_law(a in poly_strategy(), b in poly_strategy(), which in 0usize..8, n in 2usize..4) {
        let x = sample_elements(n)[which % (n * n)].clone();
        for table in [build_vartable(n).unwrap(), matrix_table(n)] {
            let p = small_poly(&table, &a);
            let q = small_poly(&table, &b);
            let lhs = act(&x, &(&p * &q)).unwrap();
            let rhs = &(&act(&x, &p).unwrap() * &q) + &(&p * &act(&x, &q).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn commutator_law(a in poly_strategy(), i in 0usize..9, j in 0usize..9, n in 2usize..4) {
        let els = sample_elements(n);
        let x = &els[i % els.len()];
        let y = &els[j % els.len()];
        for table in [build_vartable(n).unwrap(), matrix_table(n)] {
            let p = small_poly(&table, &a);
            let lhs = &act(x, &act(y, &p).unwrap()).unwrap() - &act(y, &act(x, &p).unwrap()).unwrap();
            prop_assert_eq!(lhs, act(&x.bracket(y), &p).unwrap());
        }
    }

    #[test]
    fn phi_equivariance(a in poly_strategy(), i in 0usize..16, n in 2usize..5) {
        let table = build_vartable(n).unwrap();
        let phi = Substitution::from_images(&matrix_table(n), phi_images(n).unwrap().into_iter().enumerate()).unwrap();
        let gens = chevalley_generators(n);
        let x = &gens[i % gens.len()];
        let p = small_poly(&table, &a);
        let lhs = act_pres(x, &p).unwrap().substitute(&phi).unwrap();
        let rhs = act_matrix(x, &p.substitute(&phi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
