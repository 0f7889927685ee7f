//! Permutations and permutation groups.

mod chain;
mod group;
mod permutation;
mod quotient;
mod slp;

pub use group::{PermGroup, MAX_CHAIN_ORDER};
pub use permutation::{Permutation, MAX_DEGREE};
pub use quotient::{QuotientAction, QuotientMethod, MAX_COSET_INDEX};
pub use slp::Word;
