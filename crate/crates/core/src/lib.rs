//! Exact computer algebra for graded local Weyl modules `W(m)` of the
//! `sl2` (hyper) current algebra.
//!
//! `W(m)` is realized as the quotient `DF_m / J_m` of the divided-power
//! polynomial algebra in `x_0, ..., x_{m-1}`. The crate builds generators of
//! `J_m`, enumerates three explicit monomial bases of the quotient (lex,
//! revlex/Chari-Venkatesh and truncated) and certifies them slice by slice
//! with exact linear algebra over `Q` and over prime fields.
//!
//! Module map:
//!
//! * [`partitions`]: integer partitions and their orders.
//! * [`symfunc`]: Kostka numbers, forgotten-basis coefficients and the
//!   coinvariant algebra.
//! * [`ring`], [`dpalgebra`]: coefficient rings and the divided-power algebra.
//! * [`weyl_ideal`]: the `Y`-series, `J_m` and the families `G_m`, `S_revlex`.
//! * [`basis_enum`]: closed-form basis enumeration and counting identities.
//! * [`quotient`]: the graded quotient oracle, built on [`linalg`].
//! * [`selftest`]: a quick end-to-end check used by the command line tool.

pub mod basis_enum;
pub mod dpalgebra;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod quotient;
pub mod ring;
pub mod selftest;
pub mod symfunc;
pub mod weyl_ideal;

pub use error::{Error, Result};
