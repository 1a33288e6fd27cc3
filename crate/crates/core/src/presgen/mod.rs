//! The canonical presentation for a given `n`: generators, the quadratic
//! Plücker-type family, the SL₂-type relations `s_d - 1`, the map `phi` to
//! matrix coordinates, and serialization.

mod serial;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Monomial, Polynomial, Rational, Substitution, VarDesc, VarTable};
use crate::lieact::{act_pres, chevalley_generators};
use crate::linalg::Matrix;
use crate::slnalg::{complement, det_polynomial, increasing_sequences, matrix_table, minor_over, normalize_index, IndexSeq, PresVar, Sign};

pub use serial::{emit, parse, reduce_plucker, Format};

/// All generators: plus generators first, then minus, each by length and
/// then lexicographically.
pub fn build_vartable(n: usize) -> Result<Arc<VarTable>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let mut vars = Vec::with_capacity(2 * ((1 << n) - 2));
    for sign in Sign::both() {
        for d in 1..n {
            for seq in IndexSeq::all_of_length(n, d) {
                vars.push(VarDesc::Pres(PresVar::new(sign, seq)));
            }
        }
    }
    Ok(VarTable::new(vars))
}

fn pres_id(table: &VarTable, sign: Sign, seq: IndexSeq) -> usize {
    let desc = VarDesc::Pres(PresVar::new(sign, seq));
    table.id_of(&desc).unwrap_or_else(|| panic!("`{desc}` is not in the presentation table"))
}

/// The generator `x±_I`, with `I` given as raw indices: sorted with sign, or
/// zero when an index repeats.
fn signed_var(table: &Arc<VarTable>, n: usize, sign: Sign, raw: &[usize]) -> Result<Polynomial> {
    Ok(match normalize_index(n, raw)?.into_seq(n)? {
        None => Polynomial::zero(table),
        Some((s, seq)) => Polynomial::var(table, pres_id(table, sign, seq)).scale(&int(i64::from(s))),
    })
}

/// Tag carried by each relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationTag {
    /// One member of the spanning Plücker family, indexed by the sequences
    /// `i` (length `p-1`) and `j` (length `q+1`).
    Plucker { sign: Sign, p: usize, q: usize, i: Vec<usize>, j: Vec<usize> },
    /// A row-reduced basis element of one Plücker family.
    PluckerBasis { sign: Sign, p: usize, q: usize, index: usize },
    /// `s_{ϖ_d} - 1`.
    Sl2 { d: usize },
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            RelationTag::Plucker { sign, p, q, i, j } => {
                write!(f, "plucker sign={sign} p={p} q={q} i=({}) j=({})", join(i), join(j))
            }
            RelationTag::PluckerBasis { sign, p, q, index } => {
                write!(f, "plucker-basis sign={sign} p={p} q={q} index={index}")
            }
            RelationTag::Sl2 { d } => write!(f, "sl2 d={d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedRelation {
    pub tag: RelationTag,
    pub poly: Polynomial,
}

fn check_pq(n: usize, p: usize, q: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if p == 0 || p > q || q >= n {
        return Err(Error::BadDegrees { p, q });
    }
    Ok(())
}

/// The spanning Plücker family of one sign and bidegree, with its index data.
fn plucker_family(table: &Arc<VarTable>, n: usize, sign: Sign, p: usize, q: usize) -> Result<Vec<TaggedRelation>> {
    check_pq(n, p, q)?;
    let mut out = Vec::new();
    for i in increasing_sequences(n, p - 1) {
        for j in increasing_sequences(n, q + 1) {
            let mut poly = Polynomial::zero(table);
            for l in 0..=q {
                let mut left = i.clone();
                left.push(j[l]);
                let right: Vec<usize> = j.iter().enumerate().filter(|&(k, _)| k != l).map(|(_, &v)| v).collect();
                let term = &signed_var(table, n, sign, &left)? * &signed_var(table, n, sign, &right)?;
                // (-1)^l with l counted from 1.
                poly = if l % 2 == 0 { &poly - &term } else { &poly + &term };
            }
            if !poly.is_zero() {
                out.push(TaggedRelation { tag: RelationTag::Plucker { sign, p, q, i: i.clone(), j }, poly });
            }
        }
    }
    Ok(out)
}

/// `Σ_l (-1)^l x±_{i, j_l} x±_{j without j_l}` for every `i` of length
/// `p-1` and `j` of length `q+1`; identically zero members are dropped.
pub fn plucker_relations(n: usize, sign: Sign, p: usize, q: usize) -> Result<Vec<Polynomial>> {
    check_pq(n, p, q)?;
    Ok(plucker_family(&build_vartable(n)?, n, sign, p, q)?.into_iter().map(|r| r.poly).collect())
}

fn check_d(n: usize, d: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if d == 0 || d >= n {
        return Err(Error::LengthOutOfRange { d, max: n - 1 });
    }
    Ok(())
}

fn sl2_closed_over(table: &Arc<VarTable>, n: usize, d: usize) -> Result<Polynomial> {
    check_d(n, d)?;
    let mut terms = Vec::new();
    for seq in IndexSeq::all_of_length(n, n - d) {
        let (star, sign) = complement(&seq);
        let m = Monomial::from_pairs([(pres_id(table, Sign::Minus, seq), 1), (pres_id(table, Sign::Plus, star), 1)]);
        terms.push((m, int(i64::from(sign))));
    }
    Ok(Polynomial::from_terms(table, terms))
}

/// `s_{ϖ_d} = Σ_I sgn(I, I*) x-_I x+_{I*}` over `I` of length `n-d`, where
/// `I*` is the complement of `I`.
pub fn sl2_relation_closed(n: usize, d: usize) -> Result<Polynomial> {
    sl2_closed_over(&build_vartable(n)?, n, d)
}

/// Value of `phi(v)` at the identity matrix.
fn var_at_identity(n: usize, v: &PresVar) -> Rational {
    let d = v.degree();
    let lead: Vec<usize> = match v.sign {
        Sign::Minus => (1..=d).collect(),
        Sign::Plus => (n - d + 1..=n).collect(),
    };
    if v.seq.entries() == lead.as_slice() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Value at the identity of `phi(p)`, computed without expanding `phi`.
pub fn value_at_identity(p: &Polynomial) -> Rational {
    let table = p.table();
    let mut total = Rational::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (id, _) in m.factors() {
            match table.desc(id) {
                VarDesc::Pres(pv) => v *= var_at_identity(pv.seq.n(), pv),
                _ => v = Rational::zero(),
            }
        }
        total += v;
    }
    total
}

/// A basis of the invariants in the component spanned by `x+_J x-_I` with
/// `|J| = d` and `|I| = n-d`, found by solving the linear system in which
/// every Chevalley generator annihilates the unknown element.
pub fn sl2_invariant_space(n: usize, d: usize) -> Result<Vec<Polynomial>> {
    check_d(n, d)?;
    let table = build_vartable(n)?;
    let mut basis = Vec::new();
    for minus in IndexSeq::all_of_length(n, n - d) {
        for plus in IndexSeq::all_of_length(n, d) {
            basis.push(Monomial::from_pairs([
                (pres_id(&table, Sign::Plus, plus.clone()), 1),
                (pres_id(&table, Sign::Minus, minus.clone()), 1),
            ]));
        }
    }
    // One row per (generator, output monomial), one column per basis monomial.
    let mut rows: BTreeMap<(usize, Monomial), Vec<Rational>> = BTreeMap::new();
    for (g, x) in chevalley_generators(n).iter().enumerate() {
        for (col, m) in basis.iter().enumerate() {
            let image = act_pres(x, &Polynomial::from_terms(&table, [(m.clone(), Rational::one())]))?;
            for (out, c) in image.terms() {
                rows.entry((g, out.clone())).or_insert_with(|| vec![Rational::zero(); basis.len()])[col] = c.clone();
            }
        }
    }
    let system = Matrix::from_rows(rows.into_values().collect());
    let kernel = if system.rows() == 0 {
        (0..basis.len())
            .map(|k| (0..basis.len()).map(|c| if c == k { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        system.nullspace()
    };
    Ok(kernel
        .into_iter()
        .map(|v| Polynomial::from_terms(&table, basis.iter().cloned().zip(v)))
        .collect())
}

/// The unique invariant of bidegree `(ϖ_d, ϖ_{n-d})` with value 1 at the
/// identity, computed by linear algebra rather than by the closed formula.
pub fn sl2_relation_solve(n: usize, d: usize) -> Result<Polynomial> {
    let space = sl2_invariant_space(n, d)?;
    if space.len() != 1 {
        return Err(Error::InvariantDimension(space.len()));
    }
    let t = &space[0];
    let at_e = value_at_identity(t);
    if at_e.is_zero() {
        return Err(Error::InvariantDimension(0));
    }
    Ok(t.scale(&at_e.recip()))
}

/// Generators, relations and the map to matrix coordinates for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    vartable: Arc<VarTable>,
    matrix_table: Arc<VarTable>,
    relations: Vec<TaggedRelation>,
    phi: Vec<Polynomial>,
    det_relation: Polynomial,
}

impl Presentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vartable(&self) -> &Arc<VarTable> {
        &self.vartable
    }

    pub fn matrix_table(&self) -> &Arc<VarTable> {
        &self.matrix_table
    }

    pub fn relations(&self) -> &[TaggedRelation] {
        &self.relations
    }

    /// `phi(x)` for the generator with the given id.
    pub fn phi(&self, id: usize) -> &Polynomial {
        &self.phi[id]
    }

    pub fn phi_images(&self) -> &[Polynomial] {
        &self.phi
    }

    pub fn phi_substitution(&self) -> Substitution {
        Substitution::from_images(&self.matrix_table, self.phi.iter().cloned().enumerate())
            .expect("phi images share the matrix table")
    }

    /// `det - 1` over matrix coordinates.
    pub fn det_relation(&self) -> &Polynomial {
        &self.det_relation
    }

    pub fn relation_polys(&self) -> Vec<Polynomial> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    /// Same presentation with another relation list; used by `--reduce` and
    /// by negative controls.
    pub fn with_relations(&self, relations: Vec<TaggedRelation>) -> Presentation {
        Presentation { relations, ..self.clone() }
    }

    /// Same presentation with other `phi` images; used by negative controls.
    pub fn with_phi(&self, phi: Vec<Polynomial>) -> Presentation {
        assert_eq!(phi.len(), self.vartable.len());
        Presentation { phi, ..self.clone() }
    }

    pub(crate) fn from_parts(
        n: usize,
        vartable: Arc<VarTable>,
        relations: Vec<TaggedRelation>,
        phi: Vec<Polynomial>,
        det_relation: Polynomial,
    ) -> Presentation {
        let matrix_table = det_relation.table().clone();
        Presentation { n, vartable, matrix_table, relations, phi, det_relation }
    }
}

/// The `phi` images of every generator of [`build_vartable`], over
/// [`matrix_table`].
pub fn phi_images(n: usize) -> Result<Vec<Polynomial>> {
    let table = build_vartable(n)?;
    let mt = matrix_table(n);
    table
        .descs()
        .iter()
        .map(|desc| match desc {
            VarDesc::Pres(v) => minor_over(&mt, n, v.sign, &v.seq),
            _ => unreachable!("presentation tables hold only generators"),
        })
        .collect()
}

/// Plücker families for both signs and every `p <= q`, followed by
/// `s_d - 1` for `d = 1..n-1`.
pub fn build_presentation(n: usize) -> Result<Presentation> {
    let table = build_vartable(n)?;
    let mut relations = Vec::new();
    for sign in Sign::both() {
        for p in 1..n {
            for q in p..n {
                relations.extend(plucker_family(&table, n, sign, p, q)?);
            }
        }
    }
    for d in 1..n {
        let s = sl2_closed_over(&table, n, d)?;
        relations.push(TaggedRelation { tag: RelationTag::Sl2 { d }, poly: &s - &Polynomial::one(&table) });
    }
    let phi = phi_images(n)?;
    let det = det_polynomial(n);
    let det_relation = &det - &Polynomial::one(det.table());
    Ok(Presentation::from_parts(n, table, relations, phi, det_relation))
}

#[cfg(test)]
mod tests;
