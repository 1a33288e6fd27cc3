use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::exactpoly::Monomial;

/// Orders usable inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    DegRevLex,
}

/// A monomial order. Variable 0 is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Any monomial involving an `eliminate` variable ranks above every
    /// monomial that involves none. Ties on the eliminate part are broken by
    /// the keep part.
    Block {
        eliminate: BTreeSet<usize>,
        elim_inner: BaseOrder,
        keep_inner: BaseOrder,
    },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    /// Degrevlex on the eliminated variables over degrevlex on the rest.
    pub fn elimination(eliminate: impl IntoIterator<Item = usize>) -> Self {
        MonomialOrder::Block {
            eliminate: eliminate.into_iter().collect(),
            elim_inner: BaseOrder::DegRevLex,
            keep_inner: BaseOrder::DegRevLex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.max_var().max(b.max_var()).map_or(0, |v| v + 1);
        self.cmp_dense(&a.to_dense(n), &b.to_dense(n))
    }

    /// Compares dense exponent vectors of equal length.
    pub fn cmp_dense(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => base_cmp(BaseOrder::Lex, a, b, |_| true),
            MonomialOrder::DegRevLex => base_cmp(BaseOrder::DegRevLex, a, b, |_| true),
            MonomialOrder::Block { eliminate, elim_inner, keep_inner } => {
                base_cmp(*elim_inner, a, b, |i| eliminate.contains(&i))
                    .then_with(|| base_cmp(*keep_inner, a, b, |i| !eliminate.contains(&i)))
            }
        }
    }
}

fn base_cmp(kind: BaseOrder, a: &[u32], b: &[u32], active: impl Fn(usize) -> bool) -> Ordering {
    match kind {
        BaseOrder::Lex => {
            for i in 0..a.len() {
                if active(i) && a[i] != b[i] {
                    return a[i].cmp(&b[i]);
                }
            }
            Ordering::Equal
        }
        BaseOrder::DegRevLex => {
            let deg = |m: &[u32]| -> u64 {
                m.iter().enumerate().filter(|(i, _)| active(*i)).map(|(_, &e)| e as u64).sum()
            };
            match deg(a).cmp(&deg(b)) {
                Ordering::Equal => {}
                o => return o,
            }
            for i in (0..a.len()).rev() {
                if active(i) && a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
    }
}
