use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Monomial, Rational, VarTable};
use crate::error::{Error, Result};
use crate::ideal::MonomialOrder;

/// A polynomial with exact rational coefficients over a [`VarTable`].
///
/// Zero coefficients are never stored, so two polynomials over the same table
/// are equal exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        Polynomial { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Polynomial::constant(table, Rational::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: Rational) -> Self {
        Polynomial::from_terms(table, [(Monomial::one(), c)])
    }

    pub fn var(table: &Arc<VarTable>, id: usize) -> Self {
        assert!(id < table.len(), "variable id {id} out of range");
        Polynomial::from_terms(table, [(Monomial::var(id), Rational::one())])
    }

    /// Sums the given terms, dropping anything that cancels.
    pub fn from_terms(table: &Arc<VarTable>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(table);
        for (m, c) in terms {
            debug_assert!(m.max_var().map_or(true, |v| v < table.len()));
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.factors().map(|(i, _)| i)).collect()
    }

    fn check_table(&self, other: &Polynomial) -> Result<()> {
        if self.table.same_as(&other.table) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = Polynomial::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.table);
        }
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.table);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies the ring homomorphism determined by `subst`.
    pub fn substitute(&self, subst: &Substitution) -> Result<Polynomial> {
        let mut out = Polynomial::zero(&subst.target);
        // Cache powers per variable so repeated exponents are computed once.
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&subst.target, c.clone());
            for (v, e) in m.factors() {
                let img = subst.images.get(&v).ok_or_else(|| Error::MissingImage(self.table.name(v)))?;
                let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                term = &term * &*pw;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact value at a point given as an id-to-value map.
    pub fn evaluate(&self, point: &BTreeMap<usize, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = point.get(&v).ok_or_else(|| Error::MissingAssignment(self.table.name(v)))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial over `target` by renaming variables.
    pub fn map_vars(&self, target: &Arc<VarTable>, f: impl Fn(usize) -> usize) -> Polynomial {
        Polynomial::from_terms(target, self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Terms sorted from largest to smallest monomial under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let n = self.table.len();
        let mut v: Vec<(Vec<u32>, Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (m.to_dense(n), m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp_dense(&b.0, &a.0));
        v.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, Rational)> {
        let n = self.table.len();
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_dense(&a.0.to_dense(n), &b.0.to_dense(n)))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Deterministic text: terms in descending `order`, coefficients as
    /// `num/den` with the denominator omitted when it is 1.
    pub fn canonical_text(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&fmt_rational(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&fmt_rational(&a));
                    out.push('*');
                }
                out.push_str(&self.render_monomial(&m));
            }
        }
        out
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut factors: Vec<(usize, u32)> = m.factors().collect();
        factors.sort_by_key(|&(v, _)| (self.table.desc(v).render_group(), v));
        factors
            .into_iter()
            .map(|(v, e)| {
                let name = self.table.name(v);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text(&MonomialOrder::DegRevLex))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text(&MonomialOrder::DegRevLex))
    }
}

// Operator forms panic on table mismatch; use the `try_` methods to recover.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable table mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("variable table mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable table mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Images of variables for [`Polynomial::substitute`], all over `target`.
#[derive(Clone, Debug)]
pub struct Substitution {
    target: Arc<VarTable>,
    images: BTreeMap<usize, Polynomial>,
}

impl Substitution {
    pub fn new(target: &Arc<VarTable>) -> Self {
        Substitution { target: target.clone(), images: BTreeMap::new() }
    }

    pub fn insert(&mut self, var: usize, image: Polynomial) -> Result<()> {
        if !image.table().same_as(&self.target) {
            return Err(Error::VarTableMismatch);
        }
        self.images.insert(var, image);
        Ok(())
    }

    pub fn from_images(target: &Arc<VarTable>, images: impl IntoIterator<Item = (usize, Polynomial)>) -> Result<Self> {
        let mut s = Substitution::new(target);
        for (v, p) in images {
            s.insert(v, p)?;
        }
        Ok(s)
    }

    pub fn target(&self) -> &Arc<VarTable> {
        &self.target
    }

    pub fn image(&self, var: usize) -> Option<&Polynomial> {
        self.images.get(&var)
    }
}
