use std::collections::BTreeMap;
use std::sync::Arc;

use super::{IndexSeq, MatrixVar, PresVar, Sign, Weight};
use crate::error::{Error, Result};
use crate::exactpoly::{int, Monomial, Polynomial, Rational, VarDesc, VarTable};

/// The `n²` coordinate functions `x_{i,j}` in row-major order, so `x_{i,j}`
/// has id `(i-1)·n + (j-1)`.
pub fn matrix_table(n: usize) -> Arc<VarTable> {
    let mut vars = Vec::with_capacity(n * n);
    for row in 1..=n {
        for col in 1..=n {
            vars.push(VarDesc::Matrix(MatrixVar { row, col }));
        }
    }
    VarTable::new(vars)
}

pub fn matrix_var_id(n: usize, row: usize, col: usize) -> usize {
    (row - 1) * n + (col - 1)
}

/// The point of the matrix table at the identity matrix.
pub fn identity_point(n: usize) -> BTreeMap<usize, Rational> {
    let mut pt = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            pt.insert(matrix_var_id(n, i, j), int(i64::from(i == j)));
        }
    }
    pt
}

/// Leibniz expansion of the determinant of the submatrix with the given
/// rows and columns, over `table = matrix_table(n)`.
pub(crate) fn submatrix_det(table: &Arc<VarTable>, n: usize, rows: &[usize], cols: &[usize]) -> Polynomial {
    assert_eq!(rows.len(), cols.len());
    let mut terms = Vec::new();
    for_each_permutation(cols.len(), |perm, sign| {
        let m = Monomial::from_pairs(rows.iter().zip(perm).map(|(&r, &k)| (matrix_var_id(n, r, cols[k]), 1)));
        terms.push((m, int(sign)));
    });
    Polynomial::from_terms(table, terms)
}

/// Heap's algorithm, reporting each permutation with its sign.
fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut sign = 1i64;
    f(&perm, sign);
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Columns used by the minors of a given sign and size.
pub fn minor_columns(n: usize, sign: Sign, d: usize) -> Vec<usize> {
    match sign {
        Sign::Minus => (1..=d).collect(),
        Sign::Plus => (n - d + 1..=n).collect(),
    }
}

/// The minor `f±_seq`: rows `seq`, columns `1..d` for minus and `n-d+1..n`
/// for plus.
pub fn minor(n: usize, sign: Sign, seq: &IndexSeq) -> Result<Polynomial> {
    minor_over(&matrix_table(n), n, sign, seq)
}

pub(crate) fn minor_over(table: &Arc<VarTable>, n: usize, sign: Sign, seq: &IndexSeq) -> Result<Polynomial> {
    if seq.n() != n {
        return Err(Error::RankMismatch(n, seq.n()));
    }
    let d = seq.len();
    if d == 0 || d >= n {
        return Err(Error::LengthOutOfRange { d, max: n - 1 });
    }
    Ok(submatrix_det(table, n, seq.entries(), &minor_columns(n, sign, d)))
}

pub fn det_polynomial(n: usize) -> Polynomial {
    let rows: Vec<usize> = (1..=n).collect();
    submatrix_det(&matrix_table(n), n, &rows, &rows)
}

/// The right-torus weight of a polynomial in matrix coordinates: the `λ`
/// with `p(g·t) = t^λ p(g)`, or `None` when `p` is not torus-homogeneous.
///
/// Under `x_{i,j} ↦ a_j x_{i,j}` a monomial picks up `a^c` where `c` counts
/// column occurrences, and on `SL_n` those counts only matter modulo the
/// all-ones vector.
pub fn torus_weight_of(n: usize, p: &Polynomial) -> Result<Option<Weight>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut found: Option<Weight> = None;
    for (m, _) in p.terms() {
        let mut counts = vec![0i64; n];
        for (v, e) in m.factors() {
            match p.table().desc(v) {
                VarDesc::Matrix(mv) if mv.col <= n => counts[mv.col - 1] += i64::from(e),
                _ => return Err(Error::RankMismatch(n, p.table().len())),
            }
        }
        let w = Weight::from_eps(counts)?;
        match &found {
            None => found = Some(w),
            Some(prev) if *prev == w => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(found)
}

/// Torus weight of the minor a presentation variable maps to.
pub fn pres_var_torus_weight(n: usize, v: &PresVar) -> Weight {
    let cols = minor_columns(n, v.sign, v.degree());
    Weight::from_eps((1..=n).map(|j| i64::from(cols.contains(&j))).collect()).expect("n >= 2")
}

/// The dominant weight labelling the graded piece a variable lives in:
/// `x±_I` spans `S±(ϖ_{|I|})`. For minus variables this is `w₀` applied to
/// the torus weight.
pub fn pres_var_grading(n: usize, v: &PresVar) -> Weight {
    let raw = pres_var_torus_weight(n, v);
    match v.sign {
        Sign::Plus => raw,
        Sign::Minus => raw.w0(),
    }
}
