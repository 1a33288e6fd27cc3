use super::mutate::*;
use super::*;

fn assert_pass(r: &VerificationReport) {
    assert!(r.is_pass(), "{}", r.to_json_line(false));
}

fn assert_fail(r: &VerificationReport) {
    assert!(r.is_fail(), "{}", r.to_json_line(false));
    assert!(r.witness().is_some());
}

#[test]
fn relations_vanish() {
    for n in 2..=3 {
        assert_pass(&check_relations_vanish(n));
    }
    let pres = build_presentation(3).unwrap();
    assert_fail(&check_relations_vanish_for(&flip_term_sign(&pres, 0)));
    let sl2 = find(&pres, is_sl2).unwrap();
    assert_fail(&check_relations_vanish_for(&flip_term_sign(&pres, sl2)));
}

#[test]
fn kernel_equality_n2() {
    let r = check_kernel_equality(2, false);
    assert_pass(&r);
    assert_eq!(r.witness(), Some("x-_1*x+_2 - x-_2*x+_1 - 1"));
    let pres = build_presentation(2).unwrap();
    assert_fail(&check_kernel_equality_for(&drop_relations(&pres, is_sl2), false));
    assert_fail(&check_kernel_equality_for(&flip_term_sign(&pres, 0), false));
    assert!(check_kernel_equality(3, false).is_skipped());
    assert!(check_kernel_equality(4, false).is_skipped());
    assert!(check_kernel_equality(5, true).is_skipped());
}

#[test]
fn kernel_equality_n3() {
    let r = check_kernel_equality(3, true);
    assert_pass(&r);
    assert_eq!(r.witness().unwrap().split("; ").count(), 7);
    let pres = build_presentation(3).unwrap();
    let no_d2 = drop_relations(&pres, |t| *t == RelationTag::Sl2 { d: 2 });
    assert_fail(&check_kernel_equality_for(&no_d2, true));
}

#[test]
fn bidegree_dims() {
    for n in 2..=4 {
        for sign in Sign::both() {
            for p in 1..n {
                for q in p..n {
                    assert_pass(&check_bidegree_dims(n, sign, p, q));
                }
            }
        }
    }
    let rows = dim_table(3).unwrap();
    let row = rows.iter().find(|r| (r.sign, r.p, r.q) == (Sign::Plus, 1, 2)).unwrap();
    assert_eq!((row.dim, row.rank, row.weyl.clone()), (9, 1, 8.into()));
    let rows = dim_table(4).unwrap();
    let row = rows.iter().find(|r| (r.sign, r.p, r.q) == (Sign::Plus, 2, 2)).unwrap();
    assert_eq!((row.dim, row.rank, row.weyl.clone()), (21, 1, 20.into()));
    assert!(dim_table(2).unwrap().iter().all(|r| r.rank == 0));

    let pres = build_presentation(3).unwrap();
    let damaged = drop_relations(&pres, |t| matches!(t, RelationTag::Plucker { sign: Sign::Plus, .. }));
    assert_fail(&check_bidegree_dims_for(&damaged, Sign::Plus, 1, 2));
}

#[test]
fn kernel_projector() {
    for n in 2..=3 {
        for sign in Sign::both() {
            for p in 1..n {
                for q in p..n {
                    assert_pass(&check_kernel_projector(n, sign, p, q));
                }
            }
        }
    }
    for sign in Sign::both() {
        assert_pass(&check_kernel_projector(4, sign, 2, 2));
    }
    let r = check_kernel_projector(3, Sign::Plus, 1, 2);
    assert_eq!(r.witness(), Some("operator rank 1, relation rank 1, joint rank 1"));
    let r = check_kernel_projector(2, Sign::Plus, 1, 1);
    assert_eq!(r.witness(), Some("operator rank 0, relation rank 0, joint rank 0"));
    let pres = build_presentation(3).unwrap();
    assert_fail(&check_kernel_projector_for(&flip_term_sign(&pres, 0), Sign::Plus, 1, 2));
    assert_fail(&check_kernel_projector_for(&drop_relations(&pres, is_plucker), Sign::Minus, 1, 2));
}

#[test]
fn casimir() {
    let r = check_casimir(2, 1);
    assert_pass(&r);
    assert!(r.witness().unwrap().starts_with("c = 3/4"));
    for d in 1..=2 {
        let r = check_casimir(3, d);
        assert_pass(&r);
        assert!(r.witness().unwrap().starts_with("c = 8/9"));
    }
    let pres = build_presentation(3).unwrap();
    let sl2 = find(&pres, is_sl2).unwrap();
    assert_fail(&check_casimir_for(&flip_term_sign(&pres, sl2), 1));
    assert_fail(&check_casimir_for(&drop_relations(&pres, is_sl2), 1));
}

#[test]
fn invariant_monomials() {
    assert_pass(&check_invariant_monomials(2, 2));
    assert_pass(&check_invariant_monomials(3, 2));
    let pres = build_presentation(3).unwrap();
    let s1 = &pres.relations()[find(&pres, |t| *t == RelationTag::Sl2 { d: 1 }).unwrap()].poly
        + &Polynomial::one(pres.vartable());
    let x = Polynomial::var(pres.vartable(), 0);
    let (inv, _) = invariant_and_in_kernel(&pres, &(&s1 * &x)).unwrap();
    assert!(!inv);
    let sl2 = find(&pres, is_sl2).unwrap();
    assert_fail(&check_invariant_monomials_for(&flip_term_sign(&pres, sl2), 1));
}

#[test]
fn surjectivity() {
    for i in 1..=2 {
        for j in 1..=2 {
            assert_pass(&check_surjectivity(2, i, j, 1));
        }
    }
    let r = check_surjectivity(2, 1, 1, 1);
    assert_eq!(r.witness(), Some("x-_1"));
    assert_pass(&check_surjectivity(3, 1, 2, 2));
    assert!(check_surjectivity(3, 1, 2, 1).is_skipped());
    let pres = build_presentation(2).unwrap();
    // phi(x-_1) := x_1,1 + x_2,1 breaks the solved preimage of x_1,1.
    let damaged = skew_phi(&pres, 2, 3);
    assert_fail(&check_surjectivity_for(&damaged, 1, 1, 1));
    assert!(find_preimage(&pres, 3, 1, 1).is_err());
}

#[test]
fn suite_n2_and_selection() {
    let reports = run_suite(2, None, &Caps::default()).unwrap();
    assert!(reports.iter().all(|r| !r.is_fail()), "{reports:?}");
    assert!(reports.iter().all(|r| r.is_pass()));
    let names: BTreeSet<&str> = reports.iter().map(|r| r.check()).collect();
    assert_eq!(names.len(), CHECK_NAMES.len());
    let again = run_suite(2, None, &Caps::default()).unwrap();
    let lines = |v: &[VerificationReport]| v.iter().map(|r| r.to_json_line(false)).collect::<Vec<_>>();
    assert_eq!(lines(&reports), lines(&again));

    let sel = vec!["casimir".to_string()];
    let only = run_suite(3, Some(&sel), &Caps::default()).unwrap();
    assert_eq!(only.len(), 2);
    assert!(only.iter().all(|r| r.check() == "casimir" && r.is_pass()));

    let bad = vec!["nope".to_string()];
    match run_suite(2, Some(&bad), &Caps::default()) {
        Err(Error::UnknownCheck { name, valid }) => {
            assert_eq!(name, "nope");
            assert!(valid.contains("kernel-equality"));
        }
        other => panic!("{other:?}"),
    }
    let capped = run_suite(5, None, &Caps::default()).unwrap();
    assert!(capped.iter().all(|r| r.is_skipped()));
}

#[test]
fn report_serialization() {
    let r = VerificationReport::skipped("kernel-equality", &[("n", json!(3))], "why");
    assert_eq!(
        r.to_json_line(true),
        r#"{"check":"kernel-equality","params":{"n":3},"reason":"why","verdict":"skipped"}"#
    );
    let mut r = VerificationReport::fail("x", &[("n", json!(2))], "w".into());
    r.set_elapsed(std::time::Duration::from_millis(7));
    assert_eq!(r.to_json_line(false), r#"{"check":"x","params":{"n":2},"verdict":"fail","witness":"w"}"#);
    assert!(r.to_json_line(true).contains(r#""elapsed_ms":7"#));
}
