//! Exact combinatorics of multipartitions for canonical basic sets of
//! Ariki-Koike algebras: shifted beta-sequences and a-functions, the
//! generalized dominance order, node precedence matchings, the DG
//! compatibility condition, Uglov multipartitions via good nodes, and a
//! basic-set verifier for multiplicity matrices.
//!
//! All arithmetic is exact; no floating point is used.

pub mod basicset;
pub mod cli;
pub mod crystal;
pub mod dg;
pub mod error;
pub mod kappa;
pub mod matching;
pub mod multipartition;
pub mod orders;
pub mod params;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use multipartition::{enumerate, Kind, Multipartition, Node};
pub use params::ChargeParams;
pub use rational::Rational;
