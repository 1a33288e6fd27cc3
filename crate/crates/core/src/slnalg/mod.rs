//! `SL_n` data: index sequences and their signs, the minors `f±`, the weight
//! lattice with the Killing form, and Weyl's dimension formula.
//!
//! Conventions: `B⁺` is the lower triangular Borel subgroup, so the positive
//! roots are `ε_i - ε_j` with `i > j` and the dominant weights have
//! non-decreasing ε-coordinates. The fundamental weight `ϖ_d` is the
//! character `diag(a) ↦ a_{n-d+1}⋯a_n`.

mod index;
mod minors;
mod weight;

pub use index::{
    complement, increasing_sequences, normalize_index, IndexSeq, MatrixVar, Normalized, PresVar, Sign,
};
pub use minors::{
    det_polynomial, identity_point, matrix_table, matrix_var_id, minor, minor_columns, pres_var_grading,
    pres_var_torus_weight, torus_weight_of,
};
pub(crate) use minors::minor_over;
pub use weight::{c_lambda, fundamental_weight, killing_pair, weight_star, weyl_dim, CartanData, Weight};
