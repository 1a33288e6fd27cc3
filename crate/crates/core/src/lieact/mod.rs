//! The action of `sl_n` by derivations on matrix coordinates and on the
//! presentation generators, the mixed Casimir operator, and invariance tests.
//!
//! The action is the infinitesimal left translation
//! `(X·f)(h) = -(d/dt) f(exp(tX) h)` at `t = 0`, which on coordinates reads
//! `X·x_{i,j} = -Σ_k X_{i,k} x_{k,j}`. With this sign the map `X ↦ (X·)`
//! is a Lie algebra homomorphism: `[X·, Y·] = [X, Y]·`.
//!
//! On a generator `x±_I` the same rule, pushed through the minor, replaces
//! one row index at a time:
//! `X·x±_I = -Σ_r Σ_k X_{i_r,k} x±_{i_1..k..i_d}`, where the right-hand side
//! is re-sorted with its sign, or dropped when an index repeats.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, rat, Polynomial, Rational, VarDesc, VarTable};
use crate::linalg::Matrix;
use crate::slnalg::{normalize_index, PresVar, Sign};

/// A traceless `n×n` rational matrix, stored sparsely with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElt {
    n: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl LieElt {
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = ((usize, usize), Rational)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let mut map = BTreeMap::new();
        for ((a, b), v) in entries {
            for i in [a, b] {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { value: i as i64, n });
                }
            }
            let slot: &mut Rational = map.entry((a, b)).or_insert_with(Rational::zero);
            *slot += v;
        }
        map.retain(|_, v: &mut Rational| !v.is_zero());
        let trace: Rational = map.iter().filter(|((a, b), _)| a == b).map(|(_, v)| v.clone()).sum();
        if !trace.is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(LieElt { n, entries: map })
    }

    /// The elementary matrix `e_{a,b}`, `a ≠ b`.
    pub fn elementary(n: usize, a: usize, b: usize) -> Result<Self> {
        LieElt::from_entries(n, [((a, b), Rational::one())])
    }

    /// `e_{a,a} - e_{b,b}`.
    pub fn diagonal_difference(n: usize, a: usize, b: usize) -> Result<Self> {
        LieElt::from_entries(n, [((a, a), Rational::one()), ((b, b), -Rational::one())])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, a: usize, b: usize) -> Rational {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> LieElt {
        LieElt::from_entries(self.n, self.entries.iter().map(|(k, v)| (*k, v * c))).expect("scaling keeps trace 0")
    }

    pub fn add(&self, other: &LieElt) -> LieElt {
        LieElt::from_entries(self.n, self.entries().chain(other.entries()).map(|(k, v)| (k, v.clone())))
            .expect("sum of traceless matrices")
    }

    fn matmul(&self, other: &LieElt) -> BTreeMap<(usize, usize), Rational> {
        let mut out: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(a, b), x) in &self.entries {
            for (&(c, d), y) in &other.entries {
                if b == c {
                    *out.entry((a, d)).or_insert_with(Rational::zero) += x * y;
                }
            }
        }
        out
    }

    /// Matrix commutator `XY - YX`.
    pub fn bracket(&self, other: &LieElt) -> LieElt {
        let xy = self.matmul(other);
        let yx = other.matmul(self);
        LieElt::from_entries(self.n, xy.into_iter().chain(yx.into_iter().map(|(k, v)| (k, -v))))
            .expect("commutators are traceless")
    }

    /// Killing form `Φ(X, Y) = 2n tr(XY)`.
    pub fn killing(&self, other: &LieElt) -> Rational {
        let tr: Rational = self.matmul(other).iter().filter(|((a, b), _)| a == b).map(|(_, v)| v.clone()).sum();
        tr * int(2 * self.n as i64)
    }
}

/// The Chevalley generators `e_{a,a+1}` and `e_{a+1,a}`, which generate
/// `sl_n` as a Lie algebra.
pub fn chevalley_generators(n: usize) -> Vec<LieElt> {
    (1..n)
        .flat_map(|a| [LieElt::elementary(n, a, a + 1).unwrap(), LieElt::elementary(n, a + 1, a).unwrap()])
        .collect()
}

/// Image of one variable under `X·`, or `None` for variables the action
/// treats as constants (named variables).
fn act_on_var(x: &LieElt, table: &Arc<VarTable>, v: usize) -> Result<Option<Polynomial>> {
    let n = x.n;
    match table.desc(v) {
        VarDesc::Named(_) => Ok(None),
        VarDesc::Matrix(mv) => {
            if mv.row > n || mv.col > n {
                return Err(Error::RankMismatch(n, mv.row.max(mv.col)));
            }
            let mut out = Polynomial::zero(table);
            for k in 1..=n {
                let c = x.entry(mv.row, k);
                if c.is_zero() {
                    continue;
                }
                let target = VarDesc::Matrix(crate::slnalg::MatrixVar { row: k, col: mv.col });
                let id = table.id_of(&target).ok_or_else(|| Error::MissingImage(target.to_string()))?;
                out = &out - &Polynomial::var(table, id).scale(&c);
            }
            Ok(Some(out))
        }
        VarDesc::Pres(pv) => {
            if pv.seq.n() != n {
                return Err(Error::RankMismatch(n, pv.seq.n()));
            }
            let mut out = Polynomial::zero(table);
            let rows = pv.seq.entries();
            for r in 0..rows.len() {
                for k in 1..=n {
                    let c = x.entry(rows[r], k);
                    if c.is_zero() {
                        continue;
                    }
                    let mut replaced = rows.to_vec();
                    replaced[r] = k;
                    if let Some((sign, seq)) = normalize_index(n, &replaced)?.into_seq(n)? {
                        let target = VarDesc::Pres(PresVar::new(pv.sign, seq));
                        let id = table.id_of(&target).ok_or_else(|| Error::MissingImage(target.to_string()))?;
                        out = &out - &Polynomial::var(table, id).scale(&(c * int(i64::from(sign))));
                    }
                }
            }
            Ok(Some(out))
        }
    }
}

/// Applies the derivation with the given variable images.
fn apply_derivation(p: &Polynomial, images: &[Option<Polynomial>]) -> Polynomial {
    let table = p.table();
    let mut out = Polynomial::zero(table);
    for (m, c) in p.terms() {
        for (v, e) in m.factors() {
            let Some(img) = &images[v] else { continue };
            if img.is_zero() {
                continue;
            }
            let rest = m.without_one(v).expect("variable occurs");
            let coeff = c * int(i64::from(e));
            out = &out + &img.mul_monomial(&rest).scale(&coeff);
        }
    }
    out
}

/// Which tensor leg a variable belongs to for the mixed Casimir operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leg {
    Plus,
    Minus,
}

/// Assignment of variables to legs. Unassigned variables are not acted on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegSplit {
    legs: Vec<Option<Leg>>,
}

impl LegSplit {
    pub fn new(legs: Vec<Option<Leg>>) -> Self {
        LegSplit { legs }
    }

    /// `x+` variables form the plus leg and `x-` variables the minus leg.
    pub fn by_sign(table: &VarTable) -> Self {
        LegSplit {
            legs: table
                .descs()
                .iter()
                .map(|d| match d {
                    VarDesc::Pres(v) if v.sign == Sign::Plus => Some(Leg::Plus),
                    VarDesc::Pres(_) => Some(Leg::Minus),
                    _ => None,
                })
                .collect(),
        }
    }

    pub fn leg(&self, v: usize) -> Option<Leg> {
        self.legs.get(v).copied().flatten()
    }
}

/// `X·p` for `p` over matrix coordinates.
pub fn act_matrix(x: &LieElt, p: &Polynomial) -> Result<Polynomial> {
    if p.table().descs().iter().any(|d| !matches!(d, VarDesc::Matrix(_))) {
        return Err(Error::VarTableMismatch);
    }
    act(x, p)
}

/// `X·p` for `p` over presentation generators.
pub fn act_pres(x: &LieElt, p: &Polynomial) -> Result<Polynomial> {
    if p.table().descs().iter().any(|d| !matches!(d, VarDesc::Pres(_))) {
        return Err(Error::VarTableMismatch);
    }
    act(x, p)
}

/// `X·p` over any table mixing matrix and presentation variables.
pub fn act(x: &LieElt, p: &Polynomial) -> Result<Polynomial> {
    act_restricted(x, p, |_| true)
}

fn act_restricted(x: &LieElt, p: &Polynomial, on: impl Fn(usize) -> bool) -> Result<Polynomial> {
    let table = p.table();
    let used = p.variables();
    let mut images = vec![None; table.len()];
    for v in used {
        if on(v) {
            images[v] = act_on_var(x, table, v)?;
        }
    }
    Ok(apply_derivation(p, &images))
}

/// Bases of `sl_n` dual with respect to the Killing form.
#[derive(Clone, Debug)]
pub struct DualBasisPair {
    pub basis: Vec<LieElt>,
    pub dual: Vec<LieElt>,
}

impl DualBasisPair {
    /// Computes the dual of an arbitrary basis by inverting its Gram matrix.
    pub fn from_basis(n: usize, basis: Vec<LieElt>) -> Result<Self> {
        let dim = n * n - 1;
        if basis.len() != dim {
            return Err(Error::LengthOutOfRange { d: basis.len(), max: dim });
        }
        let mut gram = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                gram.set(i, j, basis[i].killing(&basis[j]));
            }
        }
        let inv = gram.inverse().ok_or(Error::SingularBasis)?;
        let dual = (0..dim)
            .map(|j| {
                let mut acc = LieElt { n, entries: BTreeMap::new() };
                for k in 0..dim {
                    let c = inv.get(j, k);
                    if !c.is_zero() {
                        acc = acc.add(&basis[k].scale(c));
                    }
                }
                acc
            })
            .collect();
        Ok(DualBasisPair { basis, dual })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

/// The elementary basis `e_{a,b}` (`a ≠ b`) followed by `e_{a,a} - e_{a+1,a+1}`.
/// Off-diagonal duals are `e_{b,a} / 2n`; the Cartan block is dualized by
/// inverting its Gram matrix.
pub fn dual_bases(n: usize) -> Result<DualBasisPair> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let mut basis = Vec::new();
    let mut dual = Vec::new();
    let inv_2n = rat(1, 2 * n as i64);
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                basis.push(LieElt::elementary(n, a, b)?);
                dual.push(LieElt::elementary(n, b, a)?.scale(&inv_2n));
            }
        }
    }
    let cartan: Vec<LieElt> = (1..n).map(|a| LieElt::diagonal_difference(n, a, a + 1)).collect::<Result<_>>()?;
    let mut gram = Matrix::zeros(n - 1, n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            gram.set(i, j, cartan[i].killing(&cartan[j]));
        }
    }
    let inv = gram.inverse().expect("nondegenerate");
    for i in 0..n - 1 {
        let mut acc = LieElt { n, entries: BTreeMap::new() };
        for (j, h) in cartan.iter().enumerate() {
            acc = acc.add(&h.scale(inv.get(i, j)));
        }
        dual.push(acc);
    }
    basis.extend(cartan);
    Ok(DualBasisPair { basis, dual })
}

/// Per-monomial bidegree: for each leg, the number of factors of each
/// generator length (or of each variable, for non-presentation tables).
fn bidegree(table: &VarTable, split: &LegSplit, m: &crate::exactpoly::Monomial) -> (Vec<u32>, Vec<u32>) {
    let width = table.len() + 1;
    let mut plus = vec![0u32; width];
    let mut minus = vec![0u32; width];
    for (v, e) in m.factors() {
        let slot = match table.desc(v) {
            VarDesc::Pres(pv) => pv.degree(),
            _ => v,
        };
        match split.leg(v) {
            Some(Leg::Plus) => plus[slot] += e,
            Some(Leg::Minus) => minus[slot] += e,
            None => {}
        }
    }
    (plus, minus)
}

/// `Δ = Σ_i (x_i ⊗ x_i* + x_i* ⊗ x_i)` on `p`, where the left tensor factor
/// acts on the plus leg and the right factor on the minus leg.
pub fn casimir_delta(n: usize, p: &Polynomial, split: &LegSplit) -> Result<Polynomial> {
    casimir_delta_with(&dual_bases(n)?, p, split)
}

pub fn casimir_delta_with(bases: &DualBasisPair, p: &Polynomial, split: &LegSplit) -> Result<Polynomial> {
    let table = p.table();
    let mut degrees = p.terms().map(|(m, _)| bidegree(table, split, m));
    if let Some(first) = degrees.next() {
        if degrees.any(|d| d != first) {
            return Err(Error::NotBihomogeneous);
        }
    }
    let on_plus = |v: usize| split.leg(v) == Some(Leg::Plus);
    let on_minus = |v: usize| split.leg(v) == Some(Leg::Minus);
    let mut out = Polynomial::zero(table);
    for (x, xs) in bases.basis.iter().zip(&bases.dual) {
        let a = act_restricted(x, &act_restricted(xs, p, on_minus)?, on_plus)?;
        let b = act_restricted(xs, &act_restricted(x, p, on_minus)?, on_plus)?;
        out = &(&out + &a) + &b;
    }
    Ok(out)
}

/// The same operator on a quadratic form whose two factors are both taken
/// from one algebra: for each degree-2 monomial `u·v`,
/// `Σ_i (x_i u · x_i* v + x_i* u · x_i v)`.
pub fn casimir_quadratic(bases: &DualBasisPair, p: &Polynomial) -> Result<Polynomial> {
    let table = p.table();
    if p.terms().any(|(m, _)| m.degree() != 2) {
        return Err(Error::NotBihomogeneous);
    }
    let used: Vec<usize> = p.variables().into_iter().collect();
    let mut images: BTreeMap<(usize, usize, bool), Polynomial> = BTreeMap::new();
    for (i, (x, xs)) in bases.basis.iter().zip(&bases.dual).enumerate() {
        for &v in &used {
            let var = Polynomial::var(table, v);
            images.insert((i, v, false), act(x, &var)?);
            images.insert((i, v, true), act(xs, &var)?);
        }
    }
    let mut out = Polynomial::zero(table);
    for (m, c) in p.terms() {
        let mut f: Vec<usize> = Vec::new();
        for (v, e) in m.factors() {
            f.extend(std::iter::repeat(v).take(e as usize));
        }
        let (u, v) = (f[0], f[1]);
        for i in 0..bases.len() {
            let t1 = &images[&(i, u, false)] * &images[&(i, v, true)];
            let t2 = &images[&(i, u, true)] * &images[&(i, v, false)];
            out = &out + &(&t1 + &t2).scale(c);
        }
    }
    Ok(out)
}

/// Which variable table an invariance test expects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    MatrixVars,
    PresVars,
}

/// `true` iff every Chevalley generator annihilates `p`.
pub fn is_invariant(n: usize, p: &Polynomial, space: Space) -> Result<bool> {
    for x in chevalley_generators(n) {
        let image = match space {
            Space::MatrixVars => act_matrix(&x, p)?,
            Space::PresVars => act_pres(&x, p)?,
        };
        if !image.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
