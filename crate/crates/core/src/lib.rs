//! Exact computation with parabolic Hecke algebras of type A.
//!
//! The crate computes, over the fraction field Q(q):
//!
//! - symmetric group combinatorics: Bruhat order, reduced words, parabolic
//!   subgroups and double cosets ([`symgroup`]);
//! - the Hecke algebra H(S_n) with its two Kazhdan-Lusztig bases, the bar
//!   involution, and the cell partition of S_n ([`hecke`]);
//! - the parabolic Hecke algebra H^mu(S_n) = e_mu H(S_n) e_mu with its two
//!   Kazhdan-Lusztig bases, cells and cell modules ([`parahecke`]);
//! - tableau combinatorics: the Robinson-Schensted correspondence and its two
//!   semistandard variants on double cosets, Kostka numbers, dominance order
//!   ([`tableaux`]);
//! - the Schur-Weyl kernel ideal with its linear basis and the two candidate
//!   generators, plus mechanical checks of their expected properties
//!   ([`schurweyl`]).
//!
//! All arithmetic is exact; see [`coeffs`].

pub mod coeffs;
pub mod hecke;
pub mod linalg;
pub mod parahecke;
pub mod schurweyl;
pub mod selftest;
pub mod symgroup;
pub mod tableaux;

pub use coeffs::{CoeffError, LaurentPoly, RatFunc};
