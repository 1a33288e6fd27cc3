//! Canonical presentation of the coordinate ring of `SL_n` by generators and
//! relations, together with exact machinery to check it.
//!
//! The free algebra has one generator `x±_I` per sign and per strictly
//! increasing index sequence `I` of length `1..n-1`. The map `phi` sends
//! `x-_I` to the minor of rows `I` and the first `|I|` columns, and `x+_I` to
//! the minor of rows `I` and the last `|I|` columns. Its kernel is generated
//! by quadratic Plücker-type relations and one SL₂-type relation `s_d - 1`
//! per fundamental weight.
//!
//! ```
//! use slnpres::presgen::build_presentation;
//!
//! let pres = build_presentation(2).unwrap();
//! assert_eq!(pres.vartable().len(), 4);
//! assert_eq!(pres.relations()[0].poly.to_string(), "x-_1*x+_2 - x-_2*x+_1 - 1");
//! ```

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod ideal;
pub mod lieact;
pub mod linalg;
pub mod presgen;
pub mod slnalg;
pub mod verify;

pub use error::{Error, Result};
