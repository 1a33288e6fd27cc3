use std::fmt;

/// A power product stored sparsely as `(variable id, exponent)` pairs sorted
/// by id. Exponents are always positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: usize) -> Self {
        Monomial(vec![(id as u32, 1)])
    }

    /// Builds a monomial from arbitrary `(id, exponent)` pairs; repeated ids
    /// are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(i, e)| (i as u32, e))
            .collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => out.push((i, e)),
            }
        }
        Monomial(out)
    }

    /// Dense exponent vector of length `nvars`.
    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32, e))
                .collect(),
        )
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut d = vec![0; nvars];
        for &(i, e) in &self.0 {
            d[i as usize] = e;
        }
        d
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, id: usize) -> u32 {
        match self.0.binary_search_by_key(&(id as u32), |&(i, _)| i) {
            Ok(k) => self.0[k].1,
            Err(_) => 0,
        }
    }

    /// `(id, exponent)` pairs in increasing id order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(i, e)| (i as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(i, _)| i as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(i, x)| (i, x * e)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(i, e)| other.exponent(i as usize) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(
            other.factors().map(|(i, e)| (i, e - self.exponent(i))),
        ))
    }

    /// Removes one factor of variable `id`; `None` if it does not occur.
    pub fn without_one(&self, id: usize) -> Option<Monomial> {
        let k = self.0.binary_search_by_key(&(id as u32), |&(i, _)| i).ok()?;
        let mut v = self.0.clone();
        if v[k].1 == 1 {
            v.remove(k);
        } else {
            v[k].1 -= 1;
        }
        Some(Monomial(v))
    }

    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.factors().map(|(i, e)| (f(i), e)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, e)| if e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_pairs([(0, 2), (3, 1)]);
        let b = Monomial::from_pairs([(3, 2), (1, 1), (0, 0)]);
        assert_eq!(a.mul(&b), Monomial::from_pairs([(0, 2), (1, 1), (3, 3)]));
        assert_eq!(a.degree(), 3);
        assert!(Monomial::var(3).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(Monomial::var(0).quotient_of(&a), Some(Monomial::from_pairs([(0, 1), (3, 1)])));
        assert_eq!(a.without_one(3), Some(Monomial::from_pairs([(0, 2)])));
        assert_eq!(Monomial::from_dense(&a.to_dense(5)), a);
    }
}
