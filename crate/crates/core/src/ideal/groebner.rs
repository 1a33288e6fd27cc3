use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Polynomial, Rational, VarTable};

type Exps = Box<[u32]>;

/// Dense working form: terms sorted ascending, so the leading term is last.
#[derive(Clone, Debug)]
struct Dp {
    terms: Vec<(Exps, Rational)>,
}

impl Dp {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Dp {
        let n = p.table().len();
        let mut terms: Vec<(Exps, Rational)> =
            p.terms().map(|(m, c)| (m.to_dense(n).into_boxed_slice(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp_dense(&a.0, &b.0));
        Dp { terms }
    }

    fn to_poly(&self, table: &Arc<VarTable>) -> Polynomial {
        Polynomial::from_terms(table, self.terms.iter().map(|(e, c)| (Monomial::from_dense(e), c.clone())))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u32] {
        &self.terms.last().expect("leading monomial of zero").0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().expect("leading coefficient of zero").1
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.terms.last().map(|t| t.1.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.1 *= &inv;
                }
            }
        }
    }

    /// `self -= c * x^shift * g`.
    fn sub_scaled(&mut self, g: &Dp, shift: &[u32], c: &Rational, order: &MonomialOrder) {
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = g
            .terms
            .iter()
            .map(|(e, x)| {
                let m: Exps = e.iter().zip(shift).map(|(p, q)| p + q).collect();
                (m, -(x * c))
            })
            .peekable();
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp_dense(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(ai.next().unwrap()),
                Ordering::Greater => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = ai.next().unwrap();
                    let (_, y) = bi.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                }
            }
        }
        self.terms = out;
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full reduction of `p` by `basis`, trying divisors in list order.
fn reduce(mut p: Dp, basis: &[Dp], order: &MonomialOrder) -> Dp {
    let mut rem: Vec<(Exps, Rational)> = Vec::new();
    while let Some((m, c)) = p.terms.last().cloned() {
        match basis.iter().find(|g| !g.is_zero() && divides(g.lm(), &m)) {
            Some(g) => {
                let shift = quotient(&m, g.lm());
                let factor = &c / g.lc();
                p.sub_scaled(g, &shift, &factor, order);
            }
            None => {
                p.terms.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    Dp { terms: rem }
}

fn s_poly(f: &Dp, g: &Dp, order: &MonomialOrder) -> Dp {
    let l = lcm(f.lm(), g.lm());
    let mut s = Dp { terms: Vec::new() };
    s.sub_scaled(f, &quotient(&l, f.lm()), &-f.lc().recip(), order);
    s.sub_scaled(g, &quotient(&l, g.lm()), &g.lc().recip(), order);
    s
}

fn common_table(polys: &[Polynomial]) -> Result<Arc<VarTable>> {
    let table = polys.first().ok_or(Error::AllZeroGenerators)?.table().clone();
    if polys.iter().any(|p| !p.table().same_as(&table)) {
        return Err(Error::VarTableMismatch);
    }
    Ok(table)
}

/// Remainder of multivariate division of `p` by `basis` (divisors tried in
/// list order). No term of the result is divisible by a leading monomial of
/// the basis, and `p - result` lies in the ideal the basis generates.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    if basis.iter().any(|g| !g.table().same_as(p.table())) {
        return Err(Error::VarTableMismatch);
    }
    let gs: Vec<Dp> = basis.iter().map(|g| Dp::from_poly(g, order)).collect();
    Ok(reduce(Dp::from_poly(p, order), &gs, order).to_poly(p.table()))
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if !f.table().same_as(g.table()) {
        return Err(Error::VarTableMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.table()));
    }
    Ok(s_poly(&Dp::from_poly(f, order), &Dp::from_poly(g, order), order).to_poly(f.table()))
}

/// A Gröbner basis together with the order it is a basis for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    table: Arc<VarTable>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// `true` when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if self.generators.is_empty() {
            return Ok(p.clone());
        }
        normal_form(p, &self.generators, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest lcm degree first, ties broken by pair index,
/// with the coprime-leading-monomial and chain criteria. The result is
/// interreduced, monic, and sorted by descending leading monomial, so it is
/// unique for the ideal and order.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let table = common_table(gens)?;
    let mut basis: Vec<Dp> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut d = Dp::from_poly(g, order);
            d.make_monic();
            d
        })
        .collect();
    if basis.is_empty() {
        return Err(Error::AllZeroGenerators);
    }

    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_idx: HashSet<(usize, usize)> = HashSet::new();
    let pair_degree = |b: &[Dp], i: usize, j: usize| -> u32 { lcm(b[i].lm(), b[j].lm()).iter().sum() };
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((pair_degree(&basis, i, j), i, j));
            pending_idx.insert((i, j));
        }
    }

    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, i, j) = key;
        pending_idx.remove(&(i, j));

        let (lmi, lmj) = (basis[i].lm(), basis[j].lm());
        if lmi.iter().zip(lmj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm(lmi, lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lm(), &l)
                && !pending_idx.contains(&(i.min(k), i.max(k)))
                && !pending_idx.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let mut r = reduce(s_poly(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let new = basis.len();
        basis.push(r);
        if basis[new].lm().iter().all(|&e| e == 0) {
            // Unit ideal.
            basis = vec![basis.swap_remove(new)];
            pending.clear();
            break;
        }
        for k in 0..new {
            pending.insert((pair_degree(&basis, k, new), k, new));
            pending_idx.insert((k, new));
        }
    }

    Ok(GroebnerBasis {
        generators: interreduce(basis, order).iter().map(|d| d.to_poly(&table)).collect(),
        order: order.clone(),
        reduced: true,
        table,
    })
}

fn interreduce(basis: Vec<Dp>, order: &MonomialOrder) -> Vec<Dp> {
    let mut minimal: Vec<Dp> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && divides(h.lm(), g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Dp> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        // Leading terms of a minimal basis are never divisible by the others,
        // so only the tail changes.
        let mut r = reduce(minimal[i].clone(), &others, order);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp_dense(b.lm(), a.lm()));
    out
}

/// `true` iff `p` lies in the ideal generated by `gens`.
pub fn ideal_member(p: &Polynomial, gens: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    if gens.iter().all(Polynomial::is_zero) {
        return Ok(p.is_zero());
    }
    if gens.iter().any(|g| !g.table().same_as(p.table())) {
        return Err(Error::VarTableMismatch);
    }
    buchberger(gens, order)?.contains(p)
}

/// Generators of an elimination ideal, expressed over the kept variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationIdeal {
    pub table: Arc<VarTable>,
    pub generators: Vec<Polynomial>,
}

/// The reduced Gröbner basis of `(gens) ∩ k[kept variables]`, computed with
/// the block order eliminating `drop`. The result lives on the sub-table of
/// kept variables (same relative order), where it is the reduced basis for
/// degrevlex.
pub fn eliminate(gens: &[Polynomial], drop: &BTreeSet<usize>) -> Result<EliminationIdeal> {
    let table = common_table(gens)?;
    let order = MonomialOrder::elimination(drop.iter().copied());
    let gb = buchberger(gens, &order)?;
    let (sub, map) = table.restrict(|i| !drop.contains(&i));
    let generators = gb
        .generators()
        .iter()
        .filter(|g| g.variables().iter().all(|v| !drop.contains(v)))
        .map(|g| g.map_vars(&sub, |v| map[v].expect("kept variable")))
        .collect();
    Ok(EliminationIdeal { table: sub, generators })
}
