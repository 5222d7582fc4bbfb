//! Noncommutative Catalan numbers and their relatives in the group ring of
//! the free group on `x_0, x_1, x_2, ...`.
//!
//! The central objects are [`catalan`] and [`truncated_tilde`], built by a
//! memoized recursion, together with path-sum oracles in [`paths`], the
//! binomial families in [`binomial`], Hankel factorizations in [`matrix`] and
//! the commutative images in [`qpoly`].

pub mod binomial;
pub mod catalan;
pub mod error;
pub mod identities;
pub mod int;
pub mod matrix;
pub mod paths;
pub mod poly;
pub mod qpoly;
pub mod text;
pub mod word;

pub use binomial::{binom, binom_first, binom_second, Kind};
pub use catalan::{catalan, dd_truncated, truncated, truncated_tilde, underline_catalan};
pub use error::{Error, Result};
pub use int::Int;
pub use matrix::NcMatrix;
pub use paths::{LatticePath, Step};
pub use poly::NcPoly;
pub use qpoly::{chi_q, QPoly};
pub use word::{y, Letter, Word};
