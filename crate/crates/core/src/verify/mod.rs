//! Exact checks of the structural facts behind the presentation, each
//! producing a [`VerificationReport`].
//!
//! Every check has a `*_for` form that takes the presentation to inspect, so
//! that tests can feed in deliberately damaged presentations (see
//! [`mutate`]) and watch the check fail.

mod report;

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Monomial, Polynomial, Rational, Substitution, VarDesc};
use crate::ideal::{buchberger, eliminate, normal_form, MonomialOrder};
use crate::lieact::{casimir_delta, casimir_quadratic, dual_bases, is_invariant, LegSplit, Space};
use crate::linalg::Matrix;
use crate::presgen::{build_presentation, phi_images, Presentation, RelationTag};
use crate::slnalg::{
    c_lambda, det_polynomial, fundamental_weight, identity_point, killing_pair, matrix_table, matrix_var_id,
    pres_var_torus_weight, weyl_dim, IndexSeq, PresVar, Sign, Weight,
};

pub use report::{Verdict, VerificationReport};

const DRL: MonomialOrder = MonomialOrder::DegRevLex;

/// Check names accepted by [`run_suite`], in execution order.
pub const CHECK_NAMES: [&str; 7] = [
    "relations-vanish",
    "kernel-equality",
    "bidegree-dims",
    "kernel-projector",
    "casimir",
    "invariant-monomials",
    "surjectivity",
];

/// Largest `n` for which the elimination check runs at all. At `n = 4` the
/// elimination takes a few seconds in a release build.
pub const MAX_ELIMINATION_N: usize = 4;

/// Resource limits for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for which any check runs.
    pub max_n: usize,
    /// Runs the elimination check for `n > 2`.
    pub allow_expensive: bool,
    /// Total degree searched for preimages.
    pub surjectivity_bound: u32,
    /// Largest total exponent of the products `Π (s_d - 1)^{a_d}`.
    pub invariant_maxdeg: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: 4, allow_expensive: false, surjectivity_bound: 2, invariant_maxdeg: 2 }
    }
}

fn error_report(check: &str, params: &[(&str, Value)], e: Error) -> VerificationReport {
    VerificationReport::fail(check, params, format!("error: {e}"))
}

fn phi_mod_det(pres: &Presentation, phi: &Substitution, p: &Polynomial) -> Result<Polynomial> {
    normal_form(&p.substitute(phi)?, std::slice::from_ref(pres.det_relation()), &DRL)
}

/// Every relation maps to zero modulo `det - 1`.
pub fn check_relations_vanish(n: usize) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_relations_vanish_for(&pres),
        Err(e) => error_report("relations-vanish", &[("n", json!(n))], e),
    }
}

pub fn check_relations_vanish_for(pres: &Presentation) -> VerificationReport {
    let name = "relations-vanish";
    let params = [("n", json!(pres.n()))];
    let phi = pres.phi_substitution();
    for r in pres.relations() {
        match phi_mod_det(pres, &phi, &r.poly) {
            Ok(nf) if nf.is_zero() => {}
            Ok(nf) => {
                return VerificationReport::fail(name, &params, format!("relation [{}] has normal form {nf}", r.tag))
            }
            Err(e) => return error_report(name, &params, e),
        }
    }
    VerificationReport::pass(name, &params, Some(format!("{} relations reduce to 0", pres.relations().len())))
}

/// Compares the elimination ideal of the graph of `phi` with the ideal of the
/// relations, both as reduced Gröbner bases.
pub fn check_kernel_equality(n: usize, allow_expensive: bool) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_kernel_equality_for(&pres, allow_expensive),
        Err(e) => error_report("kernel-equality", &[("n", json!(n))], e),
    }
}

pub fn check_kernel_equality_for(pres: &Presentation, allow_expensive: bool) -> VerificationReport {
    let name = "kernel-equality";
    let n = pres.n();
    let params = [("n", json!(n))];
    if n > MAX_ELIMINATION_N {
        return VerificationReport::skipped(name, &params, format!("elimination is only supported for n <= {MAX_ELIMINATION_N}"));
    }
    if n > 2 && !allow_expensive {
        return VerificationReport::skipped(name, &params, format!("n = {n} elimination needs --allow-expensive"));
    }
    match kernel_bases(pres) {
        Ok((elim, rel)) => {
            let render = |v: &[Polynomial]| {
                if v.is_empty() {
                    "(0)".to_string()
                } else {
                    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
                }
            };
            if elim == rel {
                VerificationReport::pass(name, &params, Some(render(&elim)))
            } else {
                VerificationReport::fail(
                    name,
                    &params,
                    format!("elimination basis [{}] differs from relation basis [{}]", render(&elim), render(&rel)),
                )
            }
        }
        Err(e) => error_report(name, &params, e),
    }
}

/// Reduced degrevlex bases of the kernel of `phi` (via elimination) and of
/// the relation ideal, both over the presentation table.
pub fn kernel_bases(pres: &Presentation) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let n = pres.n();
    let nm = n * n;
    let mut descs: Vec<VarDesc> = pres.matrix_table().descs().to_vec();
    descs.extend(pres.vartable().descs().iter().cloned());
    let comb = crate::exactpoly::VarTable::new(descs);
    let mut gens = Vec::new();
    for (v, img) in pres.phi_images().iter().enumerate() {
        gens.push(&Polynomial::var(&comb, nm + v) - &img.map_vars(&comb, |u| u));
    }
    gens.push(pres.det_relation().map_vars(&comb, |u| u));
    let elim = eliminate(&gens, &(0..nm).collect::<BTreeSet<usize>>())?;
    if *elim.table != **pres.vartable() {
        return Err(Error::VarTableMismatch);
    }
    let elim_gens = elim.generators.iter().map(|g| g.map_vars(pres.vartable(), |u| u)).collect();
    let rels: Vec<Polynomial> = pres.relation_polys().into_iter().filter(|p| !p.is_zero()).collect();
    let rel_gens =
        if rels.is_empty() { Vec::new() } else { buchberger(&rels, &DRL)?.generators().to_vec() };
    Ok((elim_gens, rel_gens))
}

fn family(pres: &Presentation, sign: Sign, p: usize, q: usize) -> Vec<Polynomial> {
    pres.relations()
        .iter()
        .filter(|r| match &r.tag {
            RelationTag::Plucker { sign: s, p: a, q: b, .. } | RelationTag::PluckerBasis { sign: s, p: a, q: b, .. } => {
                (*s, *a, *b) == (sign, p, q)
            }
            RelationTag::Sl2 { .. } => false,
        })
        .map(|r| r.poly.clone())
        .collect()
}

/// Products `x_I x_J` with `|I| = p`, `|J| = q`, one per unordered pair.
fn component_monomials(pres: &Presentation, sign: Sign, p: usize, q: usize) -> Vec<Monomial> {
    let n = pres.n();
    let id = |s: IndexSeq| pres.vartable().id_of(&VarDesc::Pres(PresVar::new(sign, s))).expect("declared");
    let mut out = Vec::new();
    for a in IndexSeq::all_of_length(n, p) {
        for b in IndexSeq::all_of_length(n, q) {
            let (ia, ib) = (id(a.clone()), id(b));
            if p == q && ia > ib {
                continue;
            }
            out.push(Monomial::from_pairs([(ia, 1), (ib, 1)]));
        }
    }
    out
}

/// Rank of the coefficient vectors of `polys`.
fn span_rank(polys: &[Polynomial]) -> usize {
    let mut monos: Vec<Monomial> = Vec::new();
    let mut seen = BTreeSet::new();
    for p in polys {
        for (m, _) in p.terms() {
            if seen.insert(m.clone()) {
                monos.push(m.clone());
            }
        }
    }
    if polys.is_empty() || monos.is_empty() {
        return 0;
    }
    Matrix::from_rows(polys.iter().map(|p| monos.iter().map(|m| p.coefficient(m)).collect()).collect()).rank()
}

fn bidegree_params(n: usize, sign: Sign, p: usize, q: usize) -> [(&'static str, Value); 4] {
    [("n", json!(n)), ("p", json!(p)), ("q", json!(q)), ("sign", json!(sign.symbol()))]
}

/// `dim F_{p,q} - rank(relations) = dim V(ϖ_p + ϖ_q)`.
pub fn check_bidegree_dims(n: usize, sign: Sign, p: usize, q: usize) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_bidegree_dims_for(&pres, sign, p, q),
        Err(e) => error_report("bidegree-dims", &bidegree_params(n, sign, p, q), e),
    }
}

/// Numbers behind [`check_bidegree_dims`]: component dimension, relation
/// rank and the Weyl dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimRow {
    pub sign: Sign,
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub rank: usize,
    pub weyl: num_bigint::BigInt,
}

pub fn dim_row(pres: &Presentation, sign: Sign, p: usize, q: usize) -> Result<DimRow> {
    let n = pres.n();
    if p == 0 || p > q || q >= n {
        return Err(Error::BadDegrees { p, q });
    }
    let dim = component_monomials(pres, sign, p, q).len();
    let rank = span_rank(&family(pres, sign, p, q));
    let lambda = fundamental_weight(n, p)?.add(&fundamental_weight(n, q)?)?;
    Ok(DimRow { sign, p, q, dim, rank, weyl: weyl_dim(n, &lambda)? })
}

/// Every row of the dimension table, both signs, all `p <= q`.
pub fn dim_table(n: usize) -> Result<Vec<DimRow>> {
    let pres = build_presentation(n)?;
    let mut rows = Vec::new();
    for sign in Sign::both() {
        for p in 1..n {
            for q in p..n {
                rows.push(dim_row(&pres, sign, p, q)?);
            }
        }
    }
    Ok(rows)
}

pub fn check_bidegree_dims_for(pres: &Presentation, sign: Sign, p: usize, q: usize) -> VerificationReport {
    let name = "bidegree-dims";
    let params = bidegree_params(pres.n(), sign, p, q);
    match dim_row(pres, sign, p, q) {
        Ok(row) => {
            let ok = num_bigint::BigInt::from(row.dim - row.rank) == row.weyl;
            let w = format!("dim {} - rank {} = {}; weyl dimension {}", row.dim, row.rank, row.dim - row.rank, row.weyl);
            VerificationReport::verdict(name, &params, ok, w)
        }
        Err(e) => error_report(name, &params, e),
    }
}

/// The image of `Σ (x_s ⊗ x_s* + x_s* ⊗ x_s) - 2Φ(ϖ_p*, ϖ_q*)` on the
/// degree-`(p, q)` component equals the span of the Plücker relations there.
pub fn check_kernel_projector(n: usize, sign: Sign, p: usize, q: usize) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_kernel_projector_for(&pres, sign, p, q),
        Err(e) => error_report("kernel-projector", &bidegree_params(n, sign, p, q), e),
    }
}

/// Images of the component basis under the projector-type operator.
pub fn projector_images(pres: &Presentation, sign: Sign, p: usize, q: usize) -> Result<Vec<Polynomial>> {
    let n = pres.n();
    if p == 0 || p > q || q >= n {
        return Err(Error::BadDegrees { p, q });
    }
    let bases = dual_bases(n)?;
    let shift = killing_pair(n, &fundamental_weight(n, n - p)?, &fundamental_weight(n, n - q)?)? * int(2);
    component_monomials(pres, sign, p, q)
        .into_iter()
        .map(|m| {
            let x = Polynomial::from_terms(pres.vartable(), [(m, Rational::one())]);
            Ok(&casimir_quadratic(&bases, &x)? - &x.scale(&shift))
        })
        .collect()
}

pub fn check_kernel_projector_for(pres: &Presentation, sign: Sign, p: usize, q: usize) -> VerificationReport {
    let name = "kernel-projector";
    let params = bidegree_params(pres.n(), sign, p, q);
    let images = match projector_images(pres, sign, p, q) {
        Ok(v) => v,
        Err(e) => return error_report(name, &params, e),
    };
    let rels = family(pres, sign, p, q);
    let ra = span_rank(&images);
    let rb = span_rank(&rels);
    let both: Vec<Polynomial> = images.iter().chain(&rels).cloned().collect();
    let rab = span_rank(&both);
    let w = format!("operator rank {ra}, relation rank {rb}, joint rank {rab}");
    VerificationReport::verdict(name, &params, ra == rb && rb == rab, w)
}

fn sl2_of(pres: &Presentation, d: usize) -> Option<Polynomial> {
    pres.relations()
        .iter()
        .find(|r| r.tag == RelationTag::Sl2 { d })
        .map(|r| &r.poly + &Polynomial::one(pres.vartable()))
}

/// `Δ(s_d) = -c(ϖ_d) s_d` and `s_d(e) = 1`.
pub fn check_casimir(n: usize, d: usize) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_casimir_for(&pres, d),
        Err(e) => error_report("casimir", &[("d", json!(d)), ("n", json!(n))], e),
    }
}

pub fn check_casimir_for(pres: &Presentation, d: usize) -> VerificationReport {
    let name = "casimir";
    let n = pres.n();
    let params = [("d", json!(d)), ("n", json!(n))];
    let Some(s) = sl2_of(pres, d) else {
        return VerificationReport::fail(name, &params, format!("no sl2 relation for d = {d}"));
    };
    let run = || -> Result<(bool, String)> {
        let c = c_lambda(n, &fundamental_weight(n, d)?)?;
        let delta = casimir_delta(n, &s, &LegSplit::by_sign(pres.vartable()))?;
        let at_e = s.substitute(&pres.phi_substitution())?.evaluate(&identity_point(n))?;
        let eigen = delta == s.scale(&-c.clone());
        let w = format!("c = {}; s(e) = {}; eigenvector: {}", crate::exactpoly::fmt_rational(&c), crate::exactpoly::fmt_rational(&at_e), eigen);
        Ok((eigen && at_e.is_one(), w))
    };
    match run() {
        Ok((ok, w)) => VerificationReport::verdict(name, &params, ok, w),
        Err(e) => error_report(name, &params, e),
    }
}

/// Whether `p` is invariant and whether `phi(p)` lies in `(det - 1)`.
pub fn invariant_and_in_kernel(pres: &Presentation, p: &Polynomial) -> Result<(bool, bool)> {
    let inv = is_invariant(pres.n(), p, Space::PresVars)?;
    let ker = phi_mod_det(pres, &pres.phi_substitution(), p)?.is_zero();
    Ok((inv, ker))
}

/// All exponent vectors of length `len` with total in `1..=maxdeg`.
fn exponent_vectors(len: usize, maxdeg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=maxdeg - used).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().sum::<u32>() > 0);
    out
}

/// Each product `Π (s_d - 1)^{a_d}` with `0 < Σ a_d <= maxdeg` is invariant
/// and maps into `(det - 1)`.
pub fn check_invariant_monomials(n: usize, maxdeg: u32) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_invariant_monomials_for(&pres, maxdeg),
        Err(e) => error_report("invariant-monomials", &[("maxdeg", json!(maxdeg)), ("n", json!(n))], e),
    }
}

pub fn check_invariant_monomials_for(pres: &Presentation, maxdeg: u32) -> VerificationReport {
    let name = "invariant-monomials";
    let n = pres.n();
    let params = [("maxdeg", json!(maxdeg)), ("n", json!(n))];
    let mut factors = Vec::new();
    for d in 1..n {
        match sl2_of(pres, d) {
            Some(s) => factors.push(&s - &Polynomial::one(pres.vartable())),
            None => return VerificationReport::fail(name, &params, format!("no sl2 relation for d = {d}")),
        }
    }
    let exps = exponent_vectors(n - 1, maxdeg);
    for a in &exps {
        let mut prod = Polynomial::one(pres.vartable());
        for (f, &e) in factors.iter().zip(a) {
            prod = &prod * &f.pow(e);
        }
        match invariant_and_in_kernel(pres, &prod) {
            Ok((true, true)) => {}
            Ok((inv, ker)) => {
                return VerificationReport::fail(
                    name,
                    &params,
                    format!("exponents {a:?}: invariant {inv}, in kernel {ker}"),
                )
            }
            Err(e) => return error_report(name, &params, e),
        }
    }
    VerificationReport::pass(name, &params, Some(format!("{} products checked", exps.len())))
}

/// Multisets of variable ids of size `0..=bound`, as monomials.
fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier: Vec<(Monomial, usize)> = vec![(Monomial::one(), 0)];
    for _ in 0..bound {
        let mut next = Vec::new();
        for (m, start) in &frontier {
            for v in *start..nvars {
                let mm = m.mul(&Monomial::var(v));
                out.push(mm.clone());
                next.push((mm, v));
            }
        }
        frontier = next;
    }
    out
}

fn monomial_weight(pres: &Presentation, m: &Monomial) -> Weight {
    let n = pres.n();
    let mut w = Weight::zero(n);
    for (v, e) in m.factors() {
        if let VarDesc::Pres(pv) = pres.vartable().desc(v) {
            w = w.add(&pres_var_torus_weight(n, pv).scale(i64::from(e))).expect("same rank");
        }
    }
    w
}

/// A polynomial `P` of total degree at most `bound` with
/// `phi(P) ≡ x_{i,j} (mod det - 1)`, found by an exact linear solve, or
/// `None` if no such `P` exists.
///
/// Only monomials whose torus weight matches that of `x_{i,j}` can
/// contribute, since reduction modulo `det - 1` preserves torus weights.
pub fn find_preimage(pres: &Presentation, i: usize, j: usize, bound: u32) -> Result<Option<Polynomial>> {
    let n = pres.n();
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange { value: v as i64, n });
        }
    }
    let target_w = Weight::from_eps((1..=n).map(|k| i64::from(k == j)).collect())?;
    let cands: Vec<Monomial> = monomials_up_to(pres.vartable().len(), bound)
        .into_iter()
        .filter(|m| monomial_weight(pres, m) == target_w)
        .collect();
    if cands.is_empty() {
        return Ok(None);
    }
    let phi = pres.phi_substitution();
    let images: Vec<Polynomial> = cands
        .iter()
        .map(|m| phi_mod_det(pres, &phi, &Polynomial::from_terms(pres.vartable(), [(m.clone(), Rational::one())])))
        .collect::<Result<_>>()?;
    let target = Polynomial::var(pres.matrix_table(), matrix_var_id(n, i, j));
    let target = normal_form(&target, std::slice::from_ref(pres.det_relation()), &DRL)?;
    let mut rows: Vec<Monomial> = Vec::new();
    let mut seen = BTreeSet::new();
    for p in images.iter().chain(std::iter::once(&target)) {
        for (m, _) in p.terms() {
            if seen.insert(m.clone()) {
                rows.push(m.clone());
            }
        }
    }
    let a = Matrix::from_rows(rows.iter().map(|r| images.iter().map(|p| p.coefficient(r)).collect()).collect());
    let b: Vec<Rational> = rows.iter().map(|r| target.coefficient(r)).collect();
    Ok(a.solve(&b).map(|x| Polynomial::from_terms(pres.vartable(), cands.into_iter().zip(x))))
}

/// Finds a preimage of `x_{i,j}` and confirms it against freshly built
/// minors, independent of the presentation's own `phi` table.
pub fn check_surjectivity(n: usize, i: usize, j: usize, bound: u32) -> VerificationReport {
    match build_presentation(n) {
        Ok(pres) => check_surjectivity_for(&pres, i, j, bound),
        Err(e) => error_report("surjectivity", &surj_params(n, i, j, bound), e),
    }
}

fn surj_params(n: usize, i: usize, j: usize, bound: u32) -> [(&'static str, Value); 4] {
    [("bound", json!(bound)), ("i", json!(i)), ("j", json!(j)), ("n", json!(n))]
}

pub fn check_surjectivity_for(pres: &Presentation, i: usize, j: usize, bound: u32) -> VerificationReport {
    let name = "surjectivity";
    let n = pres.n();
    let params = surj_params(n, i, j, bound);
    let run = || -> Result<Option<(bool, Polynomial)>> {
        let Some(pre) = find_preimage(pres, i, j, bound)? else { return Ok(None) };
        let mt = matrix_table(n);
        let minors = Substitution::from_images(&mt, phi_images(n)?.into_iter().enumerate())?;
        let det = det_polynomial(n);
        let det1 = &det - &Polynomial::one(det.table());
        let diff = &pre.substitute(&minors)?
            - &Polynomial::var(&mt, matrix_var_id(n, i, j));
        Ok(Some((normal_form(&diff, &[det1], &DRL)?.is_zero(), pre)))
    };
    match run() {
        Ok(None) => VerificationReport::skipped(name, &params, format!("no preimage of degree <= {bound}")),
        Ok(Some((ok, pre))) => VerificationReport::verdict(name, &params, ok, pre.to_string()),
        Err(e) => error_report(name, &params, e),
    }
}

/// Runs the selected checks (all of them when `selection` is `None`) in the
/// fixed order of [`CHECK_NAMES`], with each check's parameters enumerated
/// deterministically.
pub fn run_suite(n: usize, selection: Option<&[String]>, caps: &Caps) -> Result<Vec<VerificationReport>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let chosen: BTreeSet<&str> = match selection {
        None => CHECK_NAMES.iter().copied().collect(),
        Some(names) => {
            let mut set = BTreeSet::new();
            for name in names {
                let found = CHECK_NAMES.iter().find(|c| **c == name.as_str()).ok_or_else(|| Error::UnknownCheck {
                    name: name.clone(),
                    valid: CHECK_NAMES.join(", "),
                })?;
                set.insert(*found);
            }
            set
        }
    };
    let mut reports = Vec::new();
    if n > caps.max_n {
        for name in CHECK_NAMES.iter().filter(|c| chosen.contains(*c)) {
            reports.push(VerificationReport::skipped(name, &[("n", json!(n))], format!("n exceeds the cap {}", caps.max_n)));
        }
        return Ok(reports);
    }
    let pres = build_presentation(n)?;
    let timed = |f: &dyn Fn() -> VerificationReport| {
        let start = Instant::now();
        let mut r = f();
        r.set_elapsed(start.elapsed());
        r
    };
    for name in CHECK_NAMES.iter().filter(|c| chosen.contains(*c)) {
        match *name {
            "relations-vanish" => reports.push(timed(&|| check_relations_vanish_for(&pres))),
            "kernel-equality" => reports.push(timed(&|| check_kernel_equality_for(&pres, caps.allow_expensive))),
            "bidegree-dims" | "kernel-projector" => {
                for sign in Sign::both() {
                    for p in 1..n {
                        for q in p..n {
                            reports.push(timed(&|| {
                                if *name == "bidegree-dims" {
                                    check_bidegree_dims_for(&pres, sign, p, q)
                                } else {
                                    check_kernel_projector_for(&pres, sign, p, q)
                                }
                            }));
                        }
                    }
                }
            }
            "casimir" => {
                for d in 1..n {
                    reports.push(timed(&|| check_casimir_for(&pres, d)));
                }
            }
            "invariant-monomials" => reports.push(timed(&|| check_invariant_monomials_for(&pres, caps.invariant_maxdeg))),
            "surjectivity" => {
                for i in 1..=n {
                    for j in 1..=n {
                        reports.push(timed(&|| check_surjectivity_for(&pres, i, j, caps.surjectivity_bound)));
                    }
                }
            }
            _ => unreachable!("names are validated above"),
        }
    }
    Ok(reports)
}

/// Damaged presentations for negative controls.
pub mod mutate {
    use super::*;

    /// Negates the first term (in canonical order) of relation `index`.
    pub fn flip_term_sign(pres: &Presentation, index: usize) -> Presentation {
        let mut rels = pres.relations().to_vec();
        let p = &rels[index].poly;
        let (m, c) = p.sorted_terms(&DRL).into_iter().next().expect("relation is nonzero");
        let fix = Polynomial::from_terms(p.table(), [(m, -c * int(2))]);
        rels[index].poly = p + &fix;
        pres.with_relations(rels)
    }

    /// Removes every relation the predicate selects.
    pub fn drop_relations(pres: &Presentation, pred: impl Fn(&RelationTag) -> bool) -> Presentation {
        pres.with_relations(pres.relations().iter().filter(|r| !pred(&r.tag)).cloned().collect())
    }

    /// Index of the first relation with the given tag kind.
    pub fn find(pres: &Presentation, pred: impl Fn(&RelationTag) -> bool) -> Option<usize> {
        pres.relations().iter().position(|r| pred(&r.tag))
    }

    /// Replaces `phi(x_v)` by `phi(x_v) + phi(x_w)`.
    pub fn skew_phi(pres: &Presentation, v: usize, w: usize) -> Presentation {
        let mut phi = pres.phi_images().to_vec();
        phi[v] = &phi[v] + &phi[w];
        pres.with_phi(phi)
    }

    pub fn is_sl2(tag: &RelationTag) -> bool {
        matches!(tag, RelationTag::Sl2 { .. })
    }

    pub fn is_plucker(tag: &RelationTag) -> bool {
        !is_sl2(tag)
    }
}

#[cfg(test)]
mod tests;
