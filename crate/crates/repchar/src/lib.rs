//! Exact character computations for the fermionic state space of SU(2)
//! matrix quantum mechanics.
//!
//! The 48 real fermions `theta^a_alpha` (an SO(9) spinor index times an SU(2)
//! adjoint index) generate a `2^24`-dimensional space. This crate computes
//! its SO(9) x SU(2) character as an exact Laurent polynomial and decomposes
//! it into irreducible representations, producing the full multiplicity
//! table together with boson/fermion state counts.
//!
//! ```
//! use repchar::weyl_b4::{character, DynkinLabel};
//!
//! let spinor = character(DynkinLabel::SPINOR).unwrap();
//! assert_eq!(spinor.evaluate_at_identity(), 16.into());
//! assert_eq!(DynkinLabel::new(3, 0, 0, 3).dimension(), 56320);
//! ```
//!
//! Modules, bottom-up: [`laurent`] (polynomial arithmetic), [`weyl_b4`]
//! (SO(9) characters and decomposition), [`su2`], [`frobenius`]
//! (antisymmetric powers), [`pipeline`] (the assembled computation),
//! [`oracle`] (brute-force cross-checks), [`golden`], [`verify`] and [`cli`].

pub mod cli;
pub mod error;
pub mod frobenius;
pub mod golden;
pub mod laurent;
pub mod oracle;
pub mod pipeline;
pub mod su2;
pub mod verify;
pub mod weyl_b4;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial};
pub use weyl_b4::DynkinLabel;

// The guide's code listings compile and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/su2.md")]
    mod su2 {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
