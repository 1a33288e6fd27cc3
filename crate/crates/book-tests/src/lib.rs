//! Every chapter of the guide in `book/src` becomes the documentation of an
//! empty module here, so `cargo test --doc -p book-tests` compiles and runs
//! each snippet. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/weights.md")]
pub mod weights {}
#[doc = include_str!("../../../book/src/presentation.md")]
pub mod presentation {}
#[doc = include_str!("../../../book/src/lie-action.md")]
pub mod lie_action {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
