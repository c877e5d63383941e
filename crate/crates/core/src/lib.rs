//! Exact-arithmetic calculus for FI-modules over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinat`]: injections, standard cubes and the partial-bijection posets `P(n, k)`;
//! * [`exactla`]: exact linear algebra over ℚ and ℤ (ranks, quotients, Smith normal form,
//!   chain-complex homology, finite poset colimits);
//! * [`symrep`]: partitions, tableaux, Kostka numbers, Murnaghan–Nakayama characters and
//!   Specht matrices;
//! * [`fimod`]: finitely presented FI-modules on a window, their truncations, derivative
//!   complexes, Taylor coefficients and the coefficient-to-representation dictionary;
//! * [`nervehom`]: order complexes of `P(n, k)` and their integral homology.
//!
//! Everything is exact; there is no floating point anywhere in the crate.

pub mod combinat;
pub mod error;
pub mod exactla;
pub mod fimod;
pub mod nervehom;
pub mod symrep;

pub use error::{Error, Result};
