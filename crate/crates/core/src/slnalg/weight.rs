use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Rational};
use crate::linalg::Matrix;

/// A weight of the diagonal torus of `SL_n` in ε-coordinates, taken modulo
/// the all-ones vector.
///
/// The stored representative has smallest coordinate 0, so dominant weights
/// (non-decreasing coordinates) have non-negative integer coordinates and
/// `ϖ_d = ε_{n-d+1} + ... + ε_n` is stored as `(0, ..., 0, 1, ..., 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn from_eps(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidRank(coords.len()));
        }
        let min = *coords.iter().min().unwrap();
        Ok(Weight { coords: coords.into_iter().map(|c| c - min).collect() })
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Canonical ε-coordinates.
    pub fn eps(&self) -> &[i64] {
        &self.coords
    }

    fn check(&self, other: &Weight) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n(), other.n()))
        }
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Weight::from_eps(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Weight::from_eps(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::from_eps(self.coords.iter().map(|c| c * k).collect()).expect("n >= 2")
    }

    /// `λ* = -w₀(λ)`: reverse the coordinates and negate.
    pub fn star(&self) -> Weight {
        Weight::from_eps(self.coords.iter().rev().map(|c| -c).collect()).expect("n >= 2")
    }

    /// `w₀(λ)`: reverse the coordinates.
    pub fn w0(&self) -> Weight {
        Weight::from_eps(self.coords.iter().rev().copied().collect()).expect("n >= 2")
    }

    /// Dominance for the Borel subgroup of lower triangular matrices: the
    /// ε-coordinates are non-decreasing.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] <= w[1])
    }

    /// Coefficients `a_1..a_{n-1}` of `λ = Σ a_d ϖ_d`.
    pub fn fundamental_coeffs(&self) -> Vec<i64> {
        let n = self.n();
        (1..n).map(|d| self.coords[n - d] - self.coords[n - d - 1]).collect()
    }

    pub fn from_fundamental(n: usize, coeffs: &[i64]) -> Result<Weight> {
        let mut acc = Weight::zero(n);
        for (k, &a) in coeffs.iter().enumerate() {
            acc = acc.add(&fundamental_weight(n, k + 1)?.scale(a))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ϖ_d = ε_{n-d+1} + ... + ε_n`.
pub fn fundamental_weight(n: usize, d: usize) -> Result<Weight> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if d == 0 || d >= n {
        return Err(Error::LengthOutOfRange { d, max: n - 1 });
    }
    Weight::from_eps((1..=n).map(|i| i64::from(i > n - d)).collect())
}

pub fn weight_star(w: &Weight) -> Weight {
    w.star()
}

/// Root data of `sl_n` with the positive roots `ε_i - ε_j`, `i > j`, and the
/// Killing form `Φ(X, Y) = 2n tr(XY)` transported to weights.
#[derive(Clone, Debug)]
pub struct CartanData {
    n: usize,
    /// Inverse Gram matrix of `Φ` on the basis `H_a = E_aa - E_{a+1,a+1}`.
    gram_inv: Matrix,
}

impl CartanData {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let gram = cartan_gram(n);
        let gram_inv = gram.inverse().expect("Killing form is nondegenerate on the Cartan subalgebra");
        Ok(CartanData { n, gram_inv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `ε_i - ε_j` for `i > j` (1-based), ordered by `(i, j)`.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..i {
                let mut c = vec![0i64; n];
                c[i - 1] += 1;
                c[j - 1] -= 1;
                out.push(Weight::from_eps(c).unwrap());
            }
        }
        out
    }

    /// Sum of the positive roots: ε-coordinates `(1-n, 3-n, ..., n-1)`.
    pub fn sigma(&self) -> Weight {
        let n = self.n as i64;
        Weight::from_eps((0..n).map(|k| 2 * k + 1 - n).collect()).unwrap()
    }

    /// The highest root `ε_n - ε_1`.
    pub fn highest_root(&self) -> Weight {
        let mut c = vec![0i64; self.n];
        c[self.n - 1] = 1;
        c[0] = -1;
        Weight::from_eps(c).unwrap()
    }

    /// Dual Killing form `Φ(λ, μ)` on weights.
    pub fn pair(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        for w in [a, b] {
            if w.n() != self.n {
                return Err(Error::RankMismatch(self.n, w.n()));
            }
        }
        // Values of the weights on the basis H_a.
        let on_h = |w: &Weight| -> Vec<Rational> {
            (0..self.n - 1).map(|k| int(w.eps()[k] - w.eps()[k + 1])).collect()
        };
        let (la, lb) = (on_h(a), on_h(b));
        let mut acc = Rational::zero();
        for i in 0..self.n - 1 {
            for j in 0..self.n - 1 {
                acc += &la[i] * self.gram_inv.get(i, j) * &lb[j];
            }
        }
        Ok(acc)
    }
}

/// Gram matrix `Φ(H_a, H_b) = 2n tr(H_a H_b)`.
pub(crate) fn cartan_gram(n: usize) -> Matrix {
    let mut g = Matrix::zeros(n - 1, n - 1);
    let two_n = 2 * n as i64;
    for a in 0..n - 1 {
        g.set(a, a, int(2 * two_n));
        if a + 1 < n - 1 {
            g.set(a, a + 1, int(-two_n));
            g.set(a + 1, a, int(-two_n));
        }
    }
    g
}

pub fn killing_pair(n: usize, a: &Weight, b: &Weight) -> Result<Rational> {
    CartanData::new(n)?.pair(a, b)
}

/// `c_λ = Φ(λ+σ, λ) + Φ(λ*+σ, λ*)` for dominant `λ`.
pub fn c_lambda(n: usize, lambda: &Weight) -> Result<Rational> {
    if lambda.n() != n {
        return Err(Error::RankMismatch(n, lambda.n()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let cd = CartanData::new(n)?;
    let sigma = cd.sigma();
    let star = lambda.star();
    Ok(cd.pair(&lambda.add(&sigma)?, lambda)? + cd.pair(&star.add(&sigma)?, &star)?)
}

/// Weyl's dimension formula `Π_{α>0} Φ(λ+ρ, α) / Φ(ρ, α)` with `ρ = σ/2`.
///
/// Coordinates are paired with the Killing form, which vanishes on the
/// all-ones direction, so the choice of representative does not matter.
pub fn weyl_dim(n: usize, lambda: &Weight) -> Result<BigInt> {
    if lambda.n() != n {
        return Err(Error::RankMismatch(n, lambda.n()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let cd = CartanData::new(n)?;
    let sigma = cd.sigma();
    // Use 2λ + σ and σ in place of λ + ρ and ρ; the factor 2 cancels.
    let top = lambda.scale(2).add(&sigma)?;
    let mut acc = Rational::one();
    for alpha in cd.positive_roots() {
        acc *= cd.pair(&top, &alpha)? / cd.pair(&sigma, &alpha)?;
    }
    assert!(acc.is_integer(), "Weyl dimension must be an integer, got {acc}");
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::slnalg::increasing_sequences;

    fn w(c: &[i64]) -> Weight {
        Weight::from_eps(c.to_vec()).unwrap()
    }

    /// Closed form of the dual Killing form:
    /// `(1/2n)(Σ λ_i μ_i - (Σ λ_i)(Σ μ_i)/n)` on raw ε-coordinates.
    fn closed_form(a: &[i64], b: &[i64]) -> Rational {
        let n = a.len() as i64;
        let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        (int(dot) - rat(sa * sb, n)) / int(2 * n)
    }

    #[test]
    fn gram_inverse_matches_closed_form() {
        for n in 2..=5 {
            let cd = CartanData::new(n).unwrap();
            let vectors: Vec<Vec<i64>> = (0..3 * n)
                .map(|s| (0..n).map(|i| ((s * 7 + i * 3) % 5) as i64 - 2).collect())
                .collect();
            for a in &vectors {
                for b in &vectors {
                    assert_eq!(cd.pair(&w(a), &w(b)).unwrap(), closed_form(a, b));
                }
            }
        }
    }

    #[test]
    fn fundamental_weights_and_star() {
        assert_eq!(fundamental_weight(3, 1).unwrap().eps(), &[0, 0, 1]);
        assert_eq!(fundamental_weight(4, 3).unwrap().eps(), &[0, 1, 1, 1]);
        assert!(fundamental_weight(3, 3).is_err());
        for n in 2..=5 {
            for d in 1..n {
                let fw = fundamental_weight(n, d).unwrap();
                assert_eq!(weight_star(&fw), fundamental_weight(n, n - d).unwrap());
                assert_eq!(weight_star(&weight_star(&fw)), fw);
                let mut coeffs = vec![0; n - 1];
                coeffs[d - 1] = 1;
                assert_eq!(fw.fundamental_coeffs(), coeffs);
            }
        }
        let x = w(&[3, -1, 4, 1]);
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn representatives_are_modulo_all_ones() {
        assert_eq!(w(&[1, 0, 0]), w(&[0, -1, -1]));
        assert_eq!(w(&[1, 0, 0]).eps(), &[1, 0, 0]);
        assert_ne!(w(&[1, 0, 0]), w(&[0, 0, 1]));
    }

    #[test]
    fn killing_examples() {
        // α = ε₂ - ε₁ for sl₂.
        let alpha = w(&[-1, 1]);
        assert_eq!(killing_pair(2, &alpha, &alpha).unwrap(), rat(1, 2));
        for n in 2..=5 {
            let ones = Weight::zero(n);
            let cd = CartanData::new(n).unwrap();
            assert_eq!(cd.pair(&fundamental_weight(n, 1).unwrap(), &ones).unwrap(), int(0));
            let theta = cd.highest_root();
            let lhs = cd.pair(&theta.add(&cd.sigma()).unwrap(), &theta).unwrap();
            assert_eq!(lhs, int(1), "adjoint Casimir normalization for n = {n}");
            assert_eq!(cd.sigma(), cd.positive_roots().iter().fold(Weight::zero(n), |a, r| a.add(r).unwrap()));
        }
        let cd = CartanData::new(3).unwrap();
        assert_eq!(cd.highest_root(), w(&[-1, 0, 1]));
        assert_eq!(cd.sigma(), w(&[-2, 0, 2]));
        assert!(killing_pair(3, &w(&[0, 1]), &w(&[0, 0, 1])).is_err());
    }

    #[test]
    fn killing_is_symmetric() {
        let cd = CartanData::new(4).unwrap();
        let a = w(&[0, 2, -1, 5]);
        let b = w(&[1, 1, 0, -3]);
        assert_eq!(cd.pair(&a, &b).unwrap(), cd.pair(&b, &a).unwrap());
        assert!(cd.pair(&a, &a).unwrap() > int(0));
    }

    #[test]
    fn c_lambda_examples() {
        assert_eq!(c_lambda(2, &fundamental_weight(2, 1).unwrap()).unwrap(), rat(3, 4));
        assert_eq!(c_lambda(3, &fundamental_weight(3, 1).unwrap()).unwrap(), rat(8, 9));
        assert_eq!(c_lambda(3, &fundamental_weight(3, 2).unwrap()).unwrap(), rat(8, 9));
        for n in 2..=5 {
            assert_eq!(c_lambda(n, &Weight::zero(n)).unwrap(), int(0));
        }
        assert!(matches!(c_lambda(3, &w(&[1, 0, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn weyl_dim_examples() {
        for n in 2..=6 {
            for d in 1..n {
                let dim = weyl_dim(n, &fundamental_weight(n, d).unwrap()).unwrap();
                assert_eq!(dim, BigInt::from(increasing_sequences(n, d).len()));
            }
            assert_eq!(weyl_dim(n, &Weight::zero(n)).unwrap(), BigInt::from(1));
        }
        let adj3 = Weight::from_fundamental(3, &[1, 1]).unwrap();
        assert_eq!(weyl_dim(3, &adj3).unwrap(), BigInt::from(8));
        let w4 = Weight::from_fundamental(4, &[0, 2, 0]).unwrap();
        assert_eq!(weyl_dim(4, &w4).unwrap(), BigInt::from(20));
        // Sym^k of the standard representation of sl_2 has dimension k + 1.
        for k in 0..6 {
            let wk = Weight::from_fundamental(2, &[k]).unwrap();
            assert_eq!(weyl_dim(2, &wk).unwrap(), BigInt::from(k + 1));
        }
        assert!(weyl_dim(3, &w(&[0, 1, 0])).is_err());
    }
}
