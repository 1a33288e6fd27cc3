//! Index sequences, their signs, and the variable descriptors built on them.

use std::fmt;

use crate::error::{Error, Result};

/// Which of the two polynomial algebras a presentation variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A strictly increasing sequence of entries from `1..=n`, of length `1..=n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSeq {
    n: usize,
    entries: Vec<usize>,
}

impl IndexSeq {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if entries.is_empty() || entries.len() > n - 1 {
            return Err(Error::LengthOutOfRange { d: entries.len(), max: n - 1 });
        }
        for &e in &entries {
            if e == 0 || e > n {
                return Err(Error::IndexOutOfRange { value: e as i64, n });
            }
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(entries));
        }
        Ok(IndexSeq { n, entries })
    }

    /// `(first, first+1, ..., first+len-1)`.
    pub fn range(n: usize, first: usize, len: usize) -> Result<Self> {
        IndexSeq::new(n, (first..first + len).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// All sequences of length `d` in lexicographic order.
    pub fn all_of_length(n: usize, d: usize) -> Vec<IndexSeq> {
        increasing_sequences(n, d)
            .into_iter()
            .map(|entries| IndexSeq { n, entries })
            .collect()
    }
}

impl fmt::Display for IndexSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n >= 10 { "." } else { "" };
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Every strictly increasing sequence of `d` elements of `1..=n`, including
/// the empty sequence for `d = 0`. Lexicographic order.
pub fn increasing_sequences(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < left {
                break;
            }
            cur.push(v);
            rec(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        rec(1, n, d, &mut Vec::with_capacity(d), &mut out);
    }
    out
}

/// Coordinate function `x_{row,col}` on n×n matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixVar {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for MatrixVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{},{}", self.row, self.col)
    }
}

/// A generator `x±_{i1...id}` of the free algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresVar {
    pub sign: Sign,
    pub seq: IndexSeq,
}

impl PresVar {
    pub fn new(sign: Sign, seq: IndexSeq) -> Self {
        PresVar { sign, seq }
    }

    pub fn degree(&self) -> usize {
        self.seq.len()
    }
}

impl fmt::Display for PresVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.sign, self.seq)
    }
}

/// Result of sorting an arbitrary index list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Zero,
    /// Sorted entries; may have any length up to `n`.
    Signed { sign: i8, entries: Vec<usize> },
}

impl Normalized {
    /// Converts to a presentation index; lengths outside `1..=n-1` are errors.
    pub fn into_seq(self, n: usize) -> Result<Option<(i8, IndexSeq)>> {
        match self {
            Normalized::Zero => Ok(None),
            Normalized::Signed { sign, entries } => Ok(Some((sign, IndexSeq::new(n, entries)?))),
        }
    }
}

/// Sorts `raw` into an [`IndexSeq`], returning the sign of the sorting
/// permutation, or `Zero` when an entry repeats.
pub fn normalize_index(n: usize, raw: &[usize]) -> Result<Normalized> {
    for &e in raw {
        if e == 0 || e > n {
            return Err(Error::IndexOutOfRange { value: e as i64, n });
        }
    }
    let mut sorted = raw.to_vec();
    let sign = sort_sign(&mut sorted);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Normalized::Zero);
    }
    Ok(Normalized::Signed { sign, entries: sorted })
}

/// Insertion sort that tracks the parity of the number of swaps.
fn sort_sign(v: &mut [usize]) -> i8 {
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// The increasing complement of `seq` in `1..=n`, together with the sign of
/// the permutation obtained by concatenating `seq` and its complement.
pub fn complement(seq: &IndexSeq) -> (IndexSeq, i8) {
    let n = seq.n();
    let rest: Vec<usize> = (1..=n).filter(|v| !seq.entries().contains(v)).collect();
    let mut perm: Vec<usize> = seq.entries().to_vec();
    perm.extend_from_slice(&rest);
    let sign = sort_sign(&mut perm);
    (IndexSeq { n, entries: rest }, sign)
}
