use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::slnalg::{MatrixVar, PresVar, Sign};

/// What a variable id stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarDesc {
    Named(String),
    Matrix(MatrixVar),
    Pres(PresVar),
}

impl VarDesc {
    /// Factor ordering inside a rendered monomial: minus-leg generators are
    /// written before plus-leg generators, everything else by id.
    pub(crate) fn render_group(&self) -> u8 {
        match self {
            VarDesc::Pres(v) if v.sign == Sign::Minus => 0,
            VarDesc::Pres(_) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for VarDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarDesc::Named(s) => f.write_str(s),
            VarDesc::Matrix(m) => m.fmt(f),
            VarDesc::Pres(p) => p.fmt(f),
        }
    }
}

/// An ordered list of variables with dense ids `0..len`.
///
/// Tables compare structurally: two tables are the same table exactly when
/// they list the same descriptors in the same order. Lower ids are the more
/// significant variables in every monomial order.
#[derive(Clone)]
pub struct VarTable {
    vars: Vec<VarDesc>,
    index: HashMap<VarDesc, usize>,
}

impl VarTable {
    /// Panics if a descriptor repeats.
    pub fn new(vars: Vec<VarDesc>) -> Arc<Self> {
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            let prev = index.insert(v.clone(), i);
            assert!(prev.is_none(), "duplicate variable `{v}` in table");
        }
        Arc::new(VarTable { vars, index })
    }

    pub fn named<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        VarTable::new(names.iter().map(|s| VarDesc::Named(s.as_ref().to_string())).collect())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn desc(&self, id: usize) -> &VarDesc {
        &self.vars[id]
    }

    pub fn descs(&self) -> &[VarDesc] {
        &self.vars
    }

    pub fn id_of(&self, desc: &VarDesc) -> Option<usize> {
        self.index.get(desc).copied()
    }

    pub fn name(&self, id: usize) -> String {
        self.vars[id].to_string()
    }

    /// The sub-table keeping the listed ids in their existing relative order,
    /// with the old-id to new-id map.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> (Arc<VarTable>, Vec<Option<usize>>) {
        let mut map = vec![None; self.len()];
        let mut vars = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            if keep(i) {
                map[i] = Some(vars.len());
                vars.push(v.clone());
            }
        }
        (VarTable::new(vars), map)
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.vars == other.vars
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for VarTable {}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vars.iter().map(|v| v.to_string())).finish()
    }
}
