//! Computational group theory for real-valued characters.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: small finite fields, 128-bit number theory and a few
//!   standalone arithmetic predicates;
//! * [`perm`]: permutations, stabilizer chains, normal closures and
//!   quotient actions;
//! * [`classes`]: conjugacy classes with power maps and reality data;
//! * [`structure`]: p-cores, Fitting subgroup, solvable radical and
//!   fingerprints;
//! * [`chartab`]: Dixon–Schneider character tables over cyclotomic
//!   integers;
//! * [`catalog`]: a descriptor language for the named groups together
//!   with |Out(S)| data and growth scans;
//! * [`verify`]: the check suite behind the `realchar` command line tool.

pub mod algebra;
pub mod catalog;
pub mod chartab;
pub mod classes;
mod error;
pub mod perm;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
