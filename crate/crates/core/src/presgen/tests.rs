use super::*;
use crate::ideal::{normal_form, MonomialOrder};
use crate::slnalg::{identity_point, torus_weight_of, fundamental_weight};

fn seq(n: usize, e: &[usize]) -> IndexSeq {
    IndexSeq::new(n, e.to_vec()).unwrap()
}

fn var(table: &Arc<VarTable>, sign: Sign, n: usize, e: &[usize]) -> Polynomial {
    Polynomial::var(table, pres_id(table, sign, seq(n, e)))
}

#[test]
fn vartable_sizes_and_order() {
    assert_eq!(build_vartable(2).unwrap().len(), 4);
    assert_eq!(build_vartable(3).unwrap().len(), 12);
    assert_eq!(build_vartable(4).unwrap().len(), 28);
    let t = build_vartable(2).unwrap();
    let names: Vec<String> = (0..4).map(|i| t.name(i)).collect();
    assert_eq!(names, ["x+_1", "x+_2", "x-_1", "x-_2"]);
    assert_eq!(build_vartable(1), Err(Error::InvalidRank(1)));
}

#[test]
fn plucker_examples() {
    let t = build_vartable(3).unwrap();
    let rels = plucker_relations(3, Sign::Plus, 1, 2).unwrap();
    let expected = &(&-&(&var(&t, Sign::Plus, 3, &[1]) * &var(&t, Sign::Plus, 3, &[2, 3]))
        + &(&var(&t, Sign::Plus, 3, &[2]) * &var(&t, Sign::Plus, 3, &[1, 3])))
        - &(&var(&t, Sign::Plus, 3, &[3]) * &var(&t, Sign::Plus, 3, &[1, 2]));
    assert_eq!(rels, vec![expected]);
    assert!(plucker_relations(2, Sign::Plus, 1, 1).unwrap().is_empty());
    assert!(plucker_relations(3, Sign::Minus, 1, 1).unwrap().is_empty());
    assert!(plucker_relations(3, Sign::Minus, 2, 2).unwrap().is_empty());
    assert_eq!(plucker_relations(3, Sign::Plus, 2, 1), Err(Error::BadDegrees { p: 2, q: 1 }));
    assert_eq!(plucker_relations(3, Sign::Plus, 1, 3), Err(Error::BadDegrees { p: 1, q: 3 }));

    // The Grassmannian quadric spans the (2,2) family for n = 4.
    let t4 = build_vartable(4).unwrap();
    let quadric = &(&(&var(&t4, Sign::Plus, 4, &[1, 2]) * &var(&t4, Sign::Plus, 4, &[3, 4]))
        - &(&var(&t4, Sign::Plus, 4, &[1, 3]) * &var(&t4, Sign::Plus, 4, &[2, 4])))
        + &(&var(&t4, Sign::Plus, 4, &[1, 4]) * &var(&t4, Sign::Plus, 4, &[2, 3]));
    let fam = plucker_relations(4, Sign::Plus, 2, 2).unwrap();
    assert!(!fam.is_empty());
    let mut with = fam.clone();
    with.push(quadric);
    let rank = |ps: &[Polynomial]| {
        let pres = build_presentation(4).unwrap();
        let tagged = ps
            .iter()
            .map(|p| TaggedRelation { tag: RelationTag::PluckerBasis { sign: Sign::Plus, p: 2, q: 2, index: 0 }, poly: p.clone() })
            .collect();
        reduce_plucker(&pres.with_relations(tagged)).relations().len()
    };
    assert_eq!(rank(&fam), 1);
    assert_eq!(rank(&with), 1);
}

#[test]
fn plucker_relations_are_bihomogeneous() {
    for n in 2..=4 {
        let t = build_vartable(n).unwrap();
        for sign in Sign::both() {
            for p in 1..n {
                for q in p..n {
                    for r in plucker_relations(n, sign, p, q).unwrap() {
                        for (m, _) in r.terms() {
                            let mut lens: Vec<usize> = m
                                .factors()
                                .flat_map(|(v, e)| match t.desc(v) {
                                    VarDesc::Pres(pv) => {
                                        assert_eq!(pv.sign, sign);
                                        vec![pv.degree(); e as usize]
                                    }
                                    _ => unreachable!(),
                                })
                                .collect();
                            lens.sort_unstable();
                            assert_eq!(lens, vec![p, q]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sl2_closed_examples() {
    let t = build_vartable(2).unwrap();
    let s = sl2_relation_closed(2, 1).unwrap();
    let expected = &(&var(&t, Sign::Minus, 2, &[1]) * &var(&t, Sign::Plus, 2, &[2]))
        - &(&var(&t, Sign::Minus, 2, &[2]) * &var(&t, Sign::Plus, 2, &[1]));
    assert_eq!(s, expected);
    assert_eq!(s.to_string(), "x-_1*x+_2 - x-_2*x+_1");

    let t3 = build_vartable(3).unwrap();
    let s3 = sl2_relation_closed(3, 1).unwrap();
    let e3 = &(&(&var(&t3, Sign::Minus, 3, &[1, 2]) * &var(&t3, Sign::Plus, 3, &[3]))
        - &(&var(&t3, Sign::Minus, 3, &[1, 3]) * &var(&t3, Sign::Plus, 3, &[2])))
        + &(&var(&t3, Sign::Minus, 3, &[2, 3]) * &var(&t3, Sign::Plus, 3, &[1]));
    assert_eq!(s3, e3);
    assert!(sl2_relation_closed(3, 3).is_err());
}

#[test]
fn sl2_closed_maps_to_det() {
    for n in 2..=4 {
        let pres = build_presentation(n).unwrap();
        let phi = pres.phi_substitution();
        for d in 1..n {
            let s = sl2_relation_closed(n, d).unwrap();
            let image = s.substitute(&phi).unwrap();
            assert_eq!(image, det_polynomial(n), "n={n} d={d}");
            assert_eq!(image.evaluate(&identity_point(n)).unwrap(), int(1));
            assert_eq!(value_at_identity(&s), int(1));
        }
    }
}

#[test]
fn sl2_solver_agrees_with_closed_formula() {
    for n in 2..=4 {
        for d in 1..n {
            assert_eq!(sl2_invariant_space(n, d).unwrap().len(), 1);
            assert_eq!(sl2_relation_solve(n, d).unwrap(), sl2_relation_closed(n, d).unwrap(), "n={n} d={d}");
        }
    }
}

#[test]
fn sl2_legs_have_fundamental_weights() {
    for n in 2..=4 {
        let pres = build_presentation(n).unwrap();
        let phi = pres.phi_substitution();
        for d in 1..n {
            let s = sl2_relation_closed(n, d).unwrap();
            for (m, _) in s.terms() {
                for (v, _) in m.factors() {
                    let VarDesc::Pres(pv) = pres.vartable().desc(v) else { unreachable!() };
                    let w = torus_weight_of(n, &Polynomial::var(pres.vartable(), v).substitute(&phi).unwrap())
                        .unwrap()
                        .unwrap();
                    match pv.sign {
                        Sign::Plus => assert_eq!(w, fundamental_weight(n, d).unwrap()),
                        // Minus minors have the w0-reversed weight of the dual fundamental weight.
                        Sign::Minus => assert_eq!(w.w0(), fundamental_weight(n, n - d).unwrap()),
                    }
                }
            }
        }
    }
}

#[test]
fn presentation_shapes() {
    let p2 = build_presentation(2).unwrap();
    assert_eq!(p2.relations().len(), 1);
    assert_eq!(p2.relations()[0].tag, RelationTag::Sl2 { d: 1 });
    assert_eq!(p2.relations()[0].poly.to_string(), "x-_1*x+_2 - x-_2*x+_1 - 1");
    let t = p2.vartable();
    let id = pres_id(t, Sign::Plus, seq(2, &[2]));
    assert_eq!(p2.phi(id).to_string(), "x_2,2");
    assert_eq!(p2.det_relation().to_string(), "-x_1,2*x_2,1 + x_1,1*x_2,2 - 1");

    let p3 = build_presentation(3).unwrap();
    let kinds: Vec<String> = p3.relations().iter().map(|r| r.tag.to_string()).collect();
    assert_eq!(
        kinds,
        [
            "plucker sign=+ p=1 q=2 i=() j=(1,2,3)",
            "plucker sign=- p=1 q=2 i=() j=(1,2,3)",
            "sl2 d=1",
            "sl2 d=2",
        ]
    );
    let counts: Vec<usize> = (2..=4).map(|n| build_presentation(n).unwrap().relations().len()).collect();
    // n = 4: per sign (1,2): 4, (1,3): 1, (2,2): 4, (2,3): 4; plus 3 SL2 relations.
    assert_eq!(counts, [1, 4, 2 * 13 + 3]);
}

#[test]
fn relations_vanish_under_phi() {
    for n in 2..=3 {
        let pres = build_presentation(n).unwrap();
        let phi = pres.phi_substitution();
        let det = [pres.det_relation().clone()];
        for r in pres.relations() {
            let img = r.poly.substitute(&phi).unwrap();
            assert!(normal_form(&img, &det, &MonomialOrder::DegRevLex).unwrap().is_zero(), "{}", r.tag);
        }
    }
}

#[test]
fn json_round_trip() {
    for n in 2..=4 {
        let pres = build_presentation(n).unwrap();
        let bytes = emit(&pres, Format::CanonicalJson);
        let back = parse(&bytes).unwrap();
        assert_eq!(back, pres);
        assert_eq!(emit(&back, Format::CanonicalJson), bytes);
        let reduced = reduce_plucker(&pres);
        let rb = emit(&reduced, Format::CanonicalJson);
        assert_eq!(parse(&rb).unwrap(), reduced);
    }
}

#[test]
fn json_schema_n2() {
    let bytes = emit(&build_presentation(2).unwrap(), Format::CanonicalJson);
    let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let rels = v["relations"].as_array().unwrap();
    assert_eq!(rels.len(), 1);
    assert_eq!(rels[0]["tag"]["kind"], "sl2");
    assert_eq!(rels[0]["tag"]["params"]["d"], 1);
    assert_eq!(v["variables"].as_array().unwrap().len(), 4);
    assert_eq!(v["variables"][2], serde_json::json!({"indices": [1], "sign": "-"}));
    assert_eq!(v["matrix_variables"]["n"], 2);
    assert_eq!(v["phi"]["3"], serde_json::json!([["1", "1", [[2, 1]]]]));
    let text = String::from_utf8(bytes).unwrap();
    let first_keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).collect();
    assert_eq!(first_keys[0].trim_start(), "\"det_relation\": [");
}

#[test]
fn parse_diagnostics() {
    let bytes = emit(&build_presentation(2).unwrap(), Format::CanonicalJson);
    let text = String::from_utf8(bytes).unwrap();
    let bad = text.replacen("[[0, 1], [3, 1]]", "[[0, 1], [9, 1]]", 1);
    let bad = if bad == text { text.replacen("[\n            0,", "[\n            9,", 1) } else { bad };
    assert_ne!(bad, text, "mutation must apply");
    let err = parse(bad.as_bytes()).unwrap_err().to_string();
    assert!(err.contains("undeclared variable id 9"), "{err}");

    let err = parse(b"{\"n\": 2,").unwrap_err().to_string();
    assert!(err.contains("line 1 column"), "{err}");
    let err = parse(b"{\"n\": 1}").unwrap_err().to_string();
    assert!(err.contains("$.n"), "{err}");
    let minus = text.replace("\"-\"", "\"\u{2212}\"");
    assert_eq!(parse(minus.as_bytes()).unwrap(), build_presentation(2).unwrap());
}

#[test]
fn text_format() {
    let text = String::from_utf8(emit(&build_presentation(2).unwrap(), Format::Text)).unwrap();
    assert!(text.contains("variables (4): x+_1 x+_2 x-_1 x-_2"));
    assert!(text.contains("[sl2 d=1] x-_1*x+_2 - x-_2*x+_1 - 1"));
    assert!(text.contains("x-_2 -> x_2,1"));
}

#[test]
fn reduced_families_are_independent() {
    let pres = reduce_plucker(&build_presentation(4).unwrap());
    let plucker: Vec<&TaggedRelation> =
        pres.relations().iter().filter(|r| matches!(r.tag, RelationTag::PluckerBasis { .. })).collect();
    // (1,2): 4, (1,3): 1, (2,2): 1, (2,3): 4, for each sign.
    assert_eq!(plucker.len(), 2 * 10);
    assert_eq!(pres.relations().len(), 2 * 10 + 3);
}
