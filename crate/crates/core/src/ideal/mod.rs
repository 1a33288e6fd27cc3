//! Monomial orders, multivariate division, Buchberger's algorithm, ideal
//! membership and elimination.

mod groebner;
mod order;

pub use groebner::{
    buchberger, eliminate, ideal_member, normal_form, s_polynomial, EliminationIdeal, GroebnerBasis,
};
pub use order::{BaseOrder, MonomialOrder};
